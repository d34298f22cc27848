#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "jetcl/monomial.hpp"
#include "jetcl/rational.hpp"
#include "jetcl/ring.hpp"

namespace jetcl {

/// Sparse multivariate polynomial over Q. Terms are kept sorted in
/// descending degree-reverse-lexicographic order (the canonical display
/// order); no zero coefficients are stored. Immutable value semantics.
class Polynomial {
public:
    using Term = std::pair<Monomial, Rational>;

    Polynomial() = default;
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
    Polynomial(RingPtr ring, const Rational& constant);
    Polynomial(RingPtr ring, const Monomial& mono, const Rational& coeff);

    static Polynomial variable(const RingPtr& ring, std::size_t index, std::uint32_t power = 1);
    static Polynomial constant(const RingPtr& ring, const Rational& value) { return Polynomial(ring, value); }

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_constant()); }
    bool is_monomial() const { return terms_.size() == 1; }
    bool is_homogeneous() const;

    /// Total degree; -1 for the zero polynomial.
    std::int64_t degree() const;
    std::uint32_t degree_in(std::size_t var) const;

    /// Coefficient of the constant monomial (the value at the origin).
    Rational constant_term() const;
    Rational coefficient(const Monomial& mono) const;

    /// Leading term under the canonical degrevlex order.
    const Term& leading_term() const;
    /// Leading term under an arbitrary order (linear scan).
    const Term& leading_term(const MonomialOrder& order) const;

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& other) const;
    Polynomial operator-(const Polynomial& other) const;
    Polynomial operator*(const Polynomial& other) const;
    Polynomial operator*(const Rational& scalar) const;
    friend Polynomial operator*(const Rational& scalar, const Polynomial& p) { return p * scalar; }

    friend bool operator==(const Polynomial& a, const Polynomial& b);
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    /// Scales so coefficients are coprime integers with positive leading
    /// coefficient. Zero stays zero.
    Polynomial primitive() const;
    /// Scales so the leading coefficient (under `order`) is 1.
    Polynomial monic(const MonomialOrder& order) const;

    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.str(); }

    /// Builds a polynomial from arbitrary (possibly repeated) terms.
    static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

private:
    RingPtr ring_;
    std::vector<Term> terms_; // descending degrevlex, nonzero coefficients

    void require_compatible(const Polynomial& other) const;
};

Polynomial pow(const Polynomial& base, std::uint32_t exponent);

/// Ring homomorphism determined by images of every variable; all images
/// live in one target ring. Throws std::invalid_argument when an image is
/// missing or rings disagree.
Polynomial substitute(const Polynomial& p, const std::vector<Polynomial>& images, const RingPtr& target);

Polynomial partial_derivative(const Polynomial& p, std::size_t var);

/// All monomials of total degree exactly d, in descending degrevlex order.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, std::uint32_t d);
/// All monomials of total degree 1..d, ascending by degree then descending
/// degrevlex within a degree.
std::vector<Monomial> monomials_up_to_degree(std::size_t nvars, std::uint32_t d);

} // namespace jetcl
