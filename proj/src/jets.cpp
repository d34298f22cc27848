#include "jetcl/jets.hpp"

#include <algorithm>

namespace jetcl {

JetRing::JetRing(RingPtr base, std::uint32_t order) : base_(std::move(base)), order_(order) {
    std::vector<std::string> names;
    names.reserve(base_->size() * (order_ + 1));
    for (std::size_t i = 0; i < base_->size(); ++i)
        for (std::uint32_t j = 0; j <= order_; ++j)
            names.push_back(base_->name(i) + "_" + std::to_string(j));
    jet_ = make_ring(std::move(names));
}

std::vector<Polynomial> JetRing::variable_series(std::size_t base_var, bool at_origin) const {
    std::vector<Polynomial> series(order_ + 1, Polynomial(jet_));
    for (std::uint32_t j = at_origin ? 1 : 0; j <= order_; ++j)
        series[j] = jet_variable(base_var, j);
    return series;
}

namespace {

// truncated multiplication of t-coefficient lists
std::vector<Polynomial> mul_trunc(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b,
                                  const RingPtr& ring, std::uint32_t order) {
    std::vector<Polynomial> c(order + 1, Polynomial(ring));
    for (std::uint32_t i = 0; i <= order; ++i) {
        if (a[i].is_zero()) continue;
        for (std::uint32_t j = 0; i + j <= order; ++j) {
            if (b[j].is_zero()) continue;
            c[i + j] = c[i + j] + a[i] * b[j];
        }
    }
    return c;
}

} // namespace

JetExpansion hs_expand(const Polynomial& f, const JetRing& jets, bool at_origin) {
    const std::uint32_t m = jets.order();
    const RingPtr& R = jets.ring();
    if (!same_ring(f.ring(), jets.base()))
        throw std::invalid_argument("hs_expand: polynomial not over the base ring");

    // power cache per base variable: powers[i][k] = (series of x_i)^k
    std::vector<std::vector<std::vector<Polynomial>>> powers(jets.base()->size());
    auto power_of = [&](std::size_t i, std::uint32_t e) -> const std::vector<Polynomial>& {
        auto& cache = powers[i];
        if (cache.empty()) {
            std::vector<Polynomial> one(m + 1, Polynomial(R));
            one[0] = Polynomial::constant(R, Rational(1));
            cache.push_back(std::move(one));
            cache.push_back(jets.variable_series(i, at_origin));
        }
        while (cache.size() <= e)
            cache.push_back(mul_trunc(cache.back(), cache[1], R, m));
        return cache[e];
    };

    std::vector<Polynomial> acc(m + 1, Polynomial(R));
    for (const auto& [mono, coeff] : f.terms()) {
        std::vector<Polynomial> term(m + 1, Polynomial(R));
        term[0] = Polynomial::constant(R, coeff);
        for (std::size_t i = 0; i < jets.base()->size(); ++i)
            if (mono[i]) term = mul_trunc(term, power_of(i, mono[i]), R, m);
        for (std::uint32_t j = 0; j <= m; ++j) acc[j] = acc[j] + term[j];
    }

    JetExpansion out;
    out.source = f;
    out.order = m;
    out.at_origin = at_origin;
    out.coefficients = std::move(acc);
    return out;
}

JetIdeal jet_ideal(const Ideal& I, std::uint32_t m, bool at_origin) {
    JetRing jets(I.ring(), m);
    std::vector<Polynomial> gens;
    for (const auto& f : I.generators()) {
        JetExpansion e = hs_expand(f, jets, at_origin);
        for (std::uint32_t j = at_origin ? 1 : 0; j <= m; ++j)
            if (!e.coefficients[j].is_zero()) gens.push_back(e.coefficients[j]);
    }
    Ideal ideal(jets.ring(), std::move(gens));
    return {std::move(jets), std::move(ideal)};
}

namespace {

// Enumerates radicals of x_{v1}^(i_1)...x_{vk}^(i_k) with one index per
// exponent unit, non-decreasing within each variable block, total <= m.
void enumerate_tuples(const JetRing& jets, const std::vector<std::pair<std::size_t, std::uint32_t>>& blocks,
                      std::size_t block, std::uint32_t unit, std::uint32_t min_index, std::uint64_t budget,
                      Monomial& current, std::vector<Monomial>& out) {
    if (block == blocks.size()) {
        out.push_back(current.radical());
        return;
    }
    const auto [var, count] = blocks[block];
    for (std::uint32_t idx = min_index; idx <= jets.order() && idx <= budget; ++idx) {
        const std::size_t slot = jets.var_index(var, idx);
        current[slot] += 1;
        if (unit + 1 == count)
            enumerate_tuples(jets, blocks, block + 1, 0, 0, budget - idx, current, out);
        else
            enumerate_tuples(jets, blocks, block, unit + 1, idx, budget - idx, current, out);
        current[slot] -= 1;
    }
}

} // namespace

MonomialIdealView monomial_jet_radical(const MonomialIdealView& M, const JetRing& jets) {
    std::vector<Monomial> gens;
    for (const auto& g : M.generators()) {
        std::vector<std::pair<std::size_t, std::uint32_t>> blocks;
        for (std::size_t i = 0; i < g.nvars(); ++i)
            if (g[i]) blocks.emplace_back(i, g[i]);
        Monomial current(jets.ring()->size());
        enumerate_tuples(jets, blocks, 0, 0, 0, jets.order(), current, gens);
    }
    return MonomialIdealView(std::move(gens));
}

std::vector<std::uint64_t> jet_weights(const JetRing& jets) {
    std::vector<std::uint64_t> w(jets.ring()->size(), 0);
    for (std::size_t i = 0; i < jets.base()->size(); ++i)
        for (std::uint32_t j = 0; j <= jets.order(); ++j)
            w[jets.var_index(i, j)] = j;
    return w;
}

} // namespace jetcl
