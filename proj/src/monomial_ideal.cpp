#include "jetcl/monomial_ideal.hpp"

#include <algorithm>
#include <stdexcept>

namespace jetcl {

namespace {

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
        return degrevlex_less(a, b);
    });
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> out;
    for (const auto& g : gens) {
        bool redundant = false;
        for (const auto& kept : out)
            if (kept.divides(g)) { redundant = true; break; }
        if (!redundant) out.push_back(g);
    }
    return out;
}

} // namespace

MonomialIdealView::MonomialIdealView(std::vector<Monomial> generators)
    : gens_(minimalize(std::move(generators))) {}

MonomialIdealView MonomialIdealView::radical() const {
    std::vector<Monomial> rad;
    rad.reserve(gens_.size());
    for (const auto& g : gens_) rad.push_back(g.radical());
    return MonomialIdealView(std::move(rad));
}

MonomialIdealView intersect(const MonomialIdealView& a, const MonomialIdealView& b) {
    std::vector<Monomial> out;
    out.reserve(a.gens_.size() * b.gens_.size());
    for (const auto& u : a.gens_)
        for (const auto& v : b.gens_)
            out.push_back(lcm(u, v));
    return MonomialIdealView(std::move(out));
}

std::vector<Polynomial> MonomialIdealView::to_polynomials(const RingPtr& ring) const {
    std::vector<Polynomial> out;
    out.reserve(gens_.size());
    for (const auto& g : gens_)
        out.emplace_back(ring, g, Rational(1));
    return out;
}

MonomialIdealView monomial_view(const std::vector<Polynomial>& gens) {
    std::vector<Monomial> monos;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        if (!g.is_monomial())
            throw std::invalid_argument("monomial_view: generator '" + g.str() + "' is not a monomial");
        monos.push_back(g.terms().front().first);
    }
    return MonomialIdealView(std::move(monos));
}

} // namespace jetcl
