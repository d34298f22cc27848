#pragma once

#include <vector>

#include "jetcl/monomial.hpp"
#include "jetcl/polynomial.hpp"

namespace jetcl {

/// Antichain of minimal monomial generators under divisibility.
/// A monomial u is a member iff some generator divides u.
class MonomialIdealView {
public:
    MonomialIdealView() = default;
    explicit MonomialIdealView(std::vector<Monomial> generators);

    const std::vector<Monomial>& generators() const { return gens_; }
    bool empty() const { return gens_.empty(); }

    bool contains(const Monomial& u) const {
        for (const auto& g : gens_)
            if (g.divides(u)) return true;
        return false;
    }

    /// Exponents replaced by their supports.
    MonomialIdealView radical() const;

    friend MonomialIdealView intersect(const MonomialIdealView& a, const MonomialIdealView& b);

    friend bool operator==(const MonomialIdealView& a, const MonomialIdealView& b) {
        return a.gens_ == b.gens_;
    }

    std::vector<Polynomial> to_polynomials(const RingPtr& ring) const;

private:
    std::vector<Monomial> gens_;
};

/// Minimal generators of an ideal known to be monomial; throws
/// std::invalid_argument if some generator has more than one term.
MonomialIdealView monomial_view(const std::vector<Polynomial>& gens);

} // namespace jetcl
