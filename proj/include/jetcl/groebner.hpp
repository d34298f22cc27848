#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <vector>

#include "jetcl/monomial_ideal.hpp"
#include "jetcl/polynomial.hpp"

namespace jetcl {

struct GroebnerOptions {
    /// Processed S-pair budget; exceeding it raises ResourceLimitError.
    std::uint64_t max_pairs = 200000;

    /// When set, all generators must be homogeneous w.r.t. these variable
    /// weights and the computation is truncated at `max_weight`: the result
    /// is a Groebner basis for the ideal's elements of weight <= max_weight
    /// (exactly what jet-ideal normal forms need). Weight-graded Buchberger
    /// never mixes weights, so dropping heavier S-pairs is sound.
    std::optional<std::vector<std::uint64_t>> weights;
    std::uint64_t max_weight = 0;
};

/// Deterministic Buchberger: normal selection strategy (lcm degree, then
/// pair index), both standard criteria, interreduction to the unique
/// reduced basis, output sorted by decreasing leading monomial.
std::vector<Polynomial> buchberger(std::vector<Polynomial> generators, const MonomialOrder& order,
                                   const GroebnerOptions& options = {});

/// Remainder of the division of p by G; no term of the result is divisible
/// by any leading term of G. Q-linear in p when G is a Groebner basis.
Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& basis,
                       const MonomialOrder& order);

/// Generator list plus a per-order cache of reduced Groebner bases.
class Ideal {
public:
    Ideal() = default;
    explicit Ideal(RingPtr ring, std::vector<Polynomial> generators = {});

    const RingPtr& ring() const { return ring_; }
    const std::vector<Polynomial>& generators() const { return gens_; }
    bool has_generators() const { return !gens_.empty(); }

    const std::vector<Polynomial>& groebner_basis(
        const MonomialOrder& order = MonomialOrder::degrevlex(),
        const GroebnerOptions& options = {}) const;

    Polynomial reduce(const Polynomial& p, const MonomialOrder& order = MonomialOrder::degrevlex()) const;
    bool contains(const Polynomial& p) const { return reduce(p).is_zero(); }
    bool contains(const Ideal& other) const;

    /// All generators are single monomials (after dropping zeros).
    bool is_monomial_ideal() const;

private:
    RingPtr ring_;
    std::vector<Polynomial> gens_;

    struct Cache {
        std::mutex mu;
        std::map<MonomialOrder, std::vector<Polynomial>> bases;
    };
    std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

bool ideal_membership(const Polynomial& p, const Ideal& I);

/// Reduced degrevlex bases coincide.
bool ideal_equal(const Ideal& I, const Ideal& J);

Ideal ideal_sum(const Ideal& I, const Ideal& J);

/// I cap J via the auxiliary-variable trick (t*I + (1-t)*J, eliminate t).
Ideal ideal_intersect(const Ideal& I, const Ideal& J);

/// Generators of I cap k[remaining variables], as an ideal of the same
/// ring whose generators avoid the dropped variables.
Ideal eliminate(const Ideal& I, const std::set<std::size_t>& drop);

/// dim_k R/I: the number of standard monomials. Throws
/// UnsupportedClassError when the quotient is infinite-dimensional.
std::uint64_t quotient_dimension(const Ideal& I);

/// The m-primary component of I at the origin, i.e. the contraction of
/// I k[[x]]: equals I + m^s once the descending chain {I + m^s} stalls.
/// Requires a finite global staircase (throws UnsupportedClassError).
Ideal local_part(const Ideal& I);

/// I is its own local part: m^N lies in I for some N.
bool is_origin_primary(const Ideal& I);

/// Membership in I k[[x]]: the global normal form test, falling back to
/// the local part when the global remainder is nonzero.
bool local_contains(const Ideal& I, const Polynomial& p);

/// Least N with m^N contained in I k[[x]] (the ideal generated in the
/// power series ring); coincides with the global reading whenever I
/// already contains a power of m. Requires an Artinian quotient.
std::uint64_t nilpotency_index(const Ideal& I);

/// The ideal m^k, generated by all monomials of degree k.
Ideal maximal_ideal_power(const RingPtr& ring, std::uint32_t k);

/// Sum I + m^k without recomputing monomial generators elsewhere.
Ideal plus_maximal_power(const Ideal& I, std::uint32_t k);

} // namespace jetcl
