#include <algorithm>
#include <numeric>

#include "jetcl/closures.hpp"
#include "jetcl/errors.hpp"
#include "jetcl/gcd.hpp"

namespace jetcl {

WeightedForm WeightedForm::infer(const Polynomial& f) {
    if (!f.ring() || f.ring()->size() != 2)
        throw UnsupportedClassError("weighted form: exactly two variables required");
    if (f.is_zero() || f.is_constant())
        throw UnsupportedClassError("weighted form: constant input");
    if (f.is_monomial())
        throw UnsupportedClassError("weighted form: single monomial (use the monomial path)");

    std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
    for (const auto& [mono, c] : f.terms()) pairs.emplace_back(mono[0], mono[1]);

    // weights are orthogonal to every exponent difference
    std::int64_t a = 0, b = 0;
    for (std::size_t l = 1; l < pairs.size() && a == 0 && b == 0; ++l) {
        const std::int64_t di = pairs[l].first - pairs[0].first;
        const std::int64_t dj = pairs[l].second - pairs[0].second;
        if (di == 0 && dj == 0) continue;
        a = dj;
        b = -di;
    }
    if (a < 0 || (a == 0 && b < 0)) { a = -a; b = -b; }
    if (a <= 0 || b <= 0)
        throw UnsupportedClassError("weighted form: '" + f.str() +
                                    "' admits no positive weights");
    const std::int64_t g = std::gcd(a, b);
    a /= g;
    b /= g;

    const std::int64_t d = a * pairs[0].first + b * pairs[0].second;
    for (const auto& [i, j] : pairs)
        if (a * i + b * j != d)
            throw UnsupportedClassError("weighted form: '" + f.str() +
                                        "' is not weighted homogeneous");

    WeightedForm w;
    w.weight_x = static_cast<std::uint64_t>(a);
    w.weight_y = static_cast<std::uint64_t>(b);
    w.weighted_degree = static_cast<std::uint64_t>(d);
    w.form = f;
    return w;
}

namespace {

using UV = std::pair<std::uint64_t, std::uint64_t>;

std::vector<UV> minimal_elements(std::vector<UV> pts) {
    std::sort(pts.begin(), pts.end());
    std::vector<UV> out;
    for (const auto& p : pts) {
        bool dominated = false;
        for (const auto& q : out)
            if (q.first <= p.first && q.second <= p.second) { dominated = true; break; }
        if (!dominated) out.push_back(p);
    }
    return out;
}

// Minimal elements of A_m intersected with (u,v) >= (1,1); the excluded
// axis points correspond to empty variable blocks.
std::vector<UV> minimal_Am(const WeightedForm& w, std::uint32_t m, bool clip_to_ab) {
    std::vector<UV> pts;
    const std::uint64_t T = std::uint64_t{m} + 1;
    for (std::uint64_t u = 1; u <= T; ++u)
        for (std::uint64_t v = 1; v <= T; ++v) {
            if (clip_to_ab && !(u <= w.weight_x || v <= w.weight_y)) continue;
            bool in = true;
            for (const auto& [mono, c] : w.form.terms())
                if (u * mono[0] + v * mono[1] < T) { in = false; break; }
            if (in) pts.emplace_back(u, v);
        }
    return minimal_elements(std::move(pts));
}

// Minimal generators x^p y^q of { p*u + q*v >= threshold for all (u,v) }.
std::vector<Monomial> staircase_gens(const std::vector<UV>& constraints, std::uint64_t threshold) {
    std::vector<Monomial> out;
    std::uint64_t prev_q = UINT64_MAX;
    for (std::uint64_t p = 0;; ++p) {
        std::uint64_t q = 0;
        for (const auto& [u, v] : constraints) {
            const std::uint64_t used = p * u;
            if (used >= threshold) continue;
            q = std::max(q, (threshold - used + v - 1) / v);
        }
        if (q < prev_q) {
            Monomial mono(2);
            mono[0] = static_cast<std::uint32_t>(p);
            mono[1] = static_cast<std::uint32_t>(q);
            out.push_back(mono);
            prev_q = q;
        }
        if (q == 0) break;
    }
    return out;
}

} // namespace

ClosureResult jsc_weighted_bivariate(const Polynomial& f, std::uint32_t m,
                                     const ClosureOptions& options) {
    return jsc_weighted_bivariate(WeightedForm::infer(f), m, options);
}

ClosureResult jsc_weighted_bivariate(const WeightedForm& w, std::uint32_t m,
                                     const ClosureOptions& options) {
    (void)options; // the staircase paths need no Groebner budget
    if (w.weight_x == w.weight_y)
        return jsc_homogeneous_reduced(w.form, m);
    const RingPtr& R = w.form.ring();
    const Ideal I(R, {w.form});
    const std::uint64_t T = std::uint64_t{m} + 1;

    if (m < w.weighted_degree) {
        const auto constraints = minimal_Am(w, m, /*clip_to_ab=*/false);
        std::vector<Polynomial> gens;
        for (const auto& mono : staircase_gens(constraints, T))
            gens.emplace_back(R, mono, Rational(1));
        return detail::make_result(I, m, ClosureKind::jsc, "weighted-staircase", std::move(gens));
    }

    if (!squarefree_test(w.form))
        throw UnsupportedClassError("jsc_weighted_bivariate: f must be reduced when m >= d");

    std::vector<Polynomial> part1 = {w.form};
    for (const auto& mono : staircase_gens({{w.weight_x, w.weight_y}}, T))
        part1.emplace_back(R, mono, Rational(1));

    const auto clipped = minimal_Am(w, m, /*clip_to_ab=*/true);
    if (clipped.empty())
        return detail::make_result(I, m, ClosureKind::jsc, "weighted-intersection", std::move(part1));

    std::vector<Polynomial> part2;
    for (const auto& mono : staircase_gens(clipped, T))
        part2.emplace_back(R, mono, Rational(1));
    const Ideal meet = ideal_intersect(Ideal(R, std::move(part1)), Ideal(R, std::move(part2)));
    return detail::make_result(I, m, ClosureKind::jsc, "weighted-intersection", meet.generators());
}

ClosureResult jsc_weighted_oracle(const WeightedForm& w, std::uint32_t m,
                                  const ClosureOptions& options) {
    if (m >= w.weighted_degree)
        throw UnsupportedClassError("jsc_weighted_oracle: only defined for m < weighted degree");
    const RingPtr& R = w.form.ring();
    JetRing jets(R, m);

    // sqrt(I_m + m^e) = intersection over minimal A_m elements of the
    // variable ideals (x_0..x_{u-1}, y_0..y_{v-1})
    MonomialIdealView modulus;
    bool first = true;
    for (const auto& [u, v] : minimal_Am(w, m, /*clip_to_ab=*/false)) {
        std::vector<Monomial> vars;
        for (std::uint64_t j = 0; j < u; ++j) {
            Monomial mono(jets.ring()->size());
            mono[jets.var_index(0, static_cast<std::uint32_t>(j))] = 1;
            vars.push_back(mono);
        }
        for (std::uint64_t j = 0; j < v; ++j) {
            Monomial mono(jets.ring()->size());
            mono[jets.var_index(1, static_cast<std::uint32_t>(j))] = 1;
            vars.push_back(mono);
        }
        MonomialIdealView component{std::move(vars)};
        modulus = first ? component : intersect(modulus, component);
        first = false;
    }

    const Ideal I(R, {w.form});
    std::vector<Polynomial> closure_gens = I.generators();
    for (const auto& mono : monomials_of_degree(R->size(), m + 1))
        closure_gens.emplace_back(R, mono, Rational(1));
    for (auto& k :
         detail::local_jet_kernel(jets, modulus.to_polynomials(jets.ring()), options.max_matrix_entries))
        closure_gens.push_back(std::move(k));
    return detail::make_result(I, m, ClosureKind::jsc, "radical-kernel", std::move(closure_gens));
}

} // namespace jetcl
