#pragma once

#include <cstdint>
#include <vector>

#include "jetcl/groebner.hpp"
#include "jetcl/monomial_ideal.hpp"
#include "jetcl/polynomial.hpp"

namespace jetcl {

/// The variable scheme x_i^(j) for 0 <= j <= m over a base ring, realized
/// as one flat ring whose variables are named `<base>_<j>` and grouped by
/// base variable: position(i, j) = i*(m+1) + j. The naming is part of the
/// CLI output contract.
class JetRing {
public:
    JetRing(RingPtr base, std::uint32_t order);

    const RingPtr& base() const { return base_; }
    const RingPtr& ring() const { return jet_; }
    std::uint32_t order() const { return order_; }

    std::size_t var_index(std::size_t base_var, std::uint32_t j) const {
        return base_var * (order_ + 1) + j;
    }
    Polynomial jet_variable(std::size_t base_var, std::uint32_t j) const {
        return Polynomial::variable(jet_, var_index(base_var, j));
    }

    /// Per-variable substitution series x_i -> sum_j x_i^(j) t^j as the
    /// list of t-coefficients (index 0 dropped when at_origin).
    std::vector<Polynomial> variable_series(std::size_t base_var, bool at_origin) const;

private:
    RingPtr base_;
    std::uint32_t order_;
    RingPtr jet_;
};

/// Coefficients F_0..F_m of f(sum x_i^(j) t^j) mod t^(m+1). When
/// at_origin, the order-0 variables are set to zero before expanding.
struct JetExpansion {
    Polynomial source;
    std::uint32_t order = 0;
    bool at_origin = false;
    std::vector<Polynomial> coefficients; // size order+1, F_j at index j
};

JetExpansion hs_expand(const Polynomial& f, const JetRing& jets, bool at_origin);

/// The m-th jet ideal of I: generated by all F_j over all generators of I
/// (j from 1 when at_origin, else from 0).
struct JetIdeal {
    JetRing jets;
    Ideal ideal;
};

JetIdeal jet_ideal(const Ideal& I, std::uint32_t m, bool at_origin);

/// Minimal square-free generators of sqrt(I_m) for a monomial ideal
/// (order-0 variables included): for each generator x_1^a1...x_r^ar, the
/// radicals of x_1^(i_1)...x_1^(i_a1) * ... with index sum <= m, indices
/// non-decreasing within each variable block.
MonomialIdealView monomial_jet_radical(const MonomialIdealView& M, const JetRing& jets);

/// t-weights of the jet variables (weight of x_i^(j) is j); grades every
/// jet expansion, which is what makes weight-truncated bases valid.
std::vector<std::uint64_t> jet_weights(const JetRing& jets);

} // namespace jetcl
