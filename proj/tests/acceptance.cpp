// Acceptance suite: one pass/fail line per criterion, nonzero exit when
// any criterion fails. Flagged discrepancies between computed closures and
// the printed reference tables are reported inline without failing the
// oracle-consistency criterion.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include "jetcl/catalog.hpp"
#include "jetcl/closures.hpp"
#include "jetcl/filtration.hpp"
#include "jetcl/parse.hpp"
#include "support/test_util.hpp"

using namespace jetcl;
using testutil::ideal_of;
using testutil::pp;

namespace {

const RingPtr XY = make_ring({"x", "y"});
const RingPtr XYZ = make_ring({"x", "y", "z"});

struct Outcome {
    bool pass = true;
    std::vector<std::string> notes;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            notes.push_back("failed: " + what);
        }
    }
    void flag(const std::string& what) { notes.push_back("flagged: " + what); }
};

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

RingPtr ring_with(std::size_t n) {
    if (n == 1) return make_ring({"x"});
    if (n == 2) return XY;
    return XYZ;
}

Ideal good_form(const Ideal& I, std::uint32_t m) { return plus_maximal_power(I, m + 1); }

// --- criteria -------------------------------------------------------------

Outcome criterion1_jet_ideal_exactness() {
    Outcome out;
    const auto ji = jet_ideal(ideal_of(XY, "x^2 - y^3"), 2, false);
    const RingPtr& J = ji.jets.ring();
    const std::vector<Polynomial> expected = {
        pp("x_0^2 - y_0^3", J),
        pp("2*x_0*x_1 - 3*y_0^2*y_1", J),
        pp("2*x_0*x_2 + x_1^2 - 3*y_0^2*y_2 - 3*y_1^2*y_0", J),
    };
    out.require(ji.ideal.generators().size() == 3, "three generators");
    for (const auto& e : expected) {
        const bool found = std::find(ji.ideal.generators().begin(), ji.ideal.generators().end(),
                                     e) != ji.ideal.generators().end();
        out.require(found, "generator " + e.str());
    }
    out.require(ideal_equal(ji.ideal, Ideal(J, expected)), "ideal match after normalization");
    return out;
}

Outcome criterion2_homogeneous_good() {
    Outcome out;
    testutil::Rng rng(20240301);
    for (int round = 0; round < 20; ++round) {
        const std::size_t n = 1 + static_cast<std::size_t>(round % 3);
        const RingPtr R = ring_with(n);
        std::vector<Polynomial> gens;
        const int count = rng.integer(1, 2);
        for (int i = 0; i < count; ++i)
            gens.push_back(testutil::random_homogeneous(rng, R, rng.integer(1, 4), 3, 5));
        const Ideal I(R, std::move(gens));
        for (std::uint32_t m = 1; m <= 4; ++m) {
            const auto r = jet_closure(I, m);
            if (!ideal_equal(r.closure, good_form(I, m))) {
                std::ostringstream what;
                what << "round " << round << " m=" << m << " not good for I = (";
                for (const auto& g : I.generators()) what << g << "; ";
                what << ")";
                out.require(false, what.str());
            }
        }
    }
    return out;
}

Outcome criterion3_ade_jet_closures() {
    Outcome out;
    const auto check_type = [&](const AdeType& t, std::uint32_t max_m) {
        const Ideal I(catalog_ring(), {t.poly});
        for (std::uint32_t m = 1; m <= max_m; ++m) {
            const auto expected = expected_jc(t, m);
            if (!expected) continue;
            const auto r = jet_closure(I, m);
            out.require(ideal_equal(r.closure, *expected),
                        t.name() + " jet closure at m=" + std::to_string(m));
        }
    };
    for (unsigned n = 3; n <= 5; ++n) { // A_{n-1} through the (x^3) exception row
        const AdeType t = make_ade(AdeFamily::A, n - 1);
        check_type(t, n + 1);
        // A-series dims: 2m+1 for m <= n, 2m at m = n+1
        const Ideal I(catalog_ring(), {t.poly});
        for (std::uint32_t m = 1; m <= n + 1; ++m) {
            const std::uint64_t expected_dim = (m <= n) ? 2 * m + 1 : 2 * m;
            out.require(jet_closure(I, m).dim == expected_dim,
                        t.name() + " A-series dim at m=" + std::to_string(m));
        }
    }
    check_type(make_ade(AdeFamily::D, 4), 3);
    check_type(make_ade(AdeFamily::D, 5), 4);
    check_type(make_ade(AdeFamily::E, 6), 4);
    check_type(make_ade(AdeFamily::E, 7), 4);
    check_type(make_ade(AdeFamily::E, 8), 5);
    return out;
}

Outcome criterion4_dimension_formula() {
    Outcome out;
    testutil::Rng rng(4444);
    for (std::size_t n = 1; n <= 3; ++n) {
        const RingPtr R = ring_with(n);
        for (std::uint32_t d = 1; d <= 4; ++d) {
            // a fixed dense form and a random one; the formula holds for
            // every nonzero homogeneous f of degree d
            std::vector<Polynomial> forms;
            Polynomial dense(R);
            for (const auto& mono : monomials_of_degree(n, d))
                dense = dense + Polynomial(R, mono, Rational(1));
            forms.push_back(dense);
            forms.push_back(testutil::random_homogeneous(rng, R, static_cast<int>(d), 3, 4));
            for (const auto& f : forms) {
                const Ideal I(R, {f});
                for (std::uint32_t m = 1; m <= 5; ++m) {
                    const std::uint64_t expected =
                        binomial(n + m, n) - binomial(n + m >= d ? n + m - d : 0, n);
                    const auto r = jet_closure(I, m);
                    if (r.dim != expected) {
                        std::ostringstream what;
                        what << "n=" << n << " d=" << d << " m=" << m << " f=" << f
                             << ": dim " << r.dim << " != " << expected;
                        out.require(false, what.str());
                    }
                }
            }
        }
    }
    return out;
}

Outcome criterion5_monomial_jsc() {
    Outcome out;
    // homogeneous but not good: xy joins at m = 2
    out.require(ideal_equal(jsc_monomial(ideal_of(XY, "x^2, y^2"), 2).closure,
                            ideal_of(XY, "x^2, x*y, y^2")),
                "(x^2,y^2)^{2-jsc} = I + m^3 + (xy)");
    // principal closures do not simply add up
    out.require(ideal_equal(jsc_monomial(ideal_of(XY, "x^2"), 3).closure,
                            ideal_of(XY, "x^2, x*y^2, y^4")),
                "(x^2)^{3-jsc}");
    out.require(ideal_equal(jsc_monomial(ideal_of(XY, "y^2"), 3).closure,
                            ideal_of(XY, "y^2, x^2*y, x^4")),
                "(y^2)^{3-jsc}");
    out.require(ideal_equal(jsc_monomial(ideal_of(XY, "x^2, y^2"), 3).closure,
                            ideal_of(XY, "x^2, x*y, y^2")),
                "(x^2 + y^2 sum)^{3-jsc}");
    // the non-monotone membership pair around (x^2 y^3)
    const auto view = monomial_view(parse_generators("x^2*y^3", XY));
    out.require(jsc_monomial_member(view, Monomial({2, 2}), 5), "x^2 y^2 member at m=5");
    out.require(!jsc_monomial_member(view, Monomial({2, 2}), 4), "x^2 y^2 non-member at m=4");
    // goodness of 10 random square-free monomial ideals
    testutil::Rng rng(5555);
    for (int round = 0; round < 10; ++round) {
        const std::size_t n = rng.integer(0, 1) ? 2 : 3;
        const RingPtr R = ring_with(n);
        std::vector<Polynomial> gens;
        for (int i = 0; i < rng.integer(1, 3); ++i) {
            Monomial mono = testutil::random_monomial(rng, n, 1);
            if (mono.is_constant())
                mono[static_cast<std::size_t>(rng.integer(0, static_cast<int>(n) - 1))] = 1;
            gens.emplace_back(R, mono, Rational(1));
        }
        const Ideal I(R, std::move(gens));
        const std::uint32_t m = static_cast<std::uint32_t>(rng.integer(1, 4));
        out.require(jsc_monomial(I, m).good,
                    "square-free goodness, round " + std::to_string(round));
    }
    return out;
}

Outcome criterion6_cross_algorithm() {
    Outcome out;
    testutil::Rng rng(6666);
    // 15 jet-closure instances, n = 2, m <= 3
    for (int round = 0; round < 15; ++round) {
        std::vector<Polynomial> gens{testutil::random_in_m(rng, XY, 3, 3, 3)};
        if (rng.integer(0, 1)) gens.push_back(testutil::random_in_m(rng, XY, 2, 2, 3));
        const Ideal I(XY, std::move(gens));
        const std::uint32_t m = static_cast<std::uint32_t>(rng.integer(1, 3));
        const auto kernel = jet_closure(I, m);
        const auto elim = jet_closure_elim(I, m);
        out.require(ideal_equal(kernel.closure, elim.closure),
                    "jc kernel vs elim, round " + std::to_string(round));
    }
    // 15 monomial jsc instances, n <= 3, m <= 5
    for (int round = 0; round < 15; ++round) {
        const std::size_t n = rng.integer(0, 1) ? 2 : 3;
        const RingPtr R = ring_with(n);
        std::vector<Polynomial> gens;
        for (int i = 0; i < rng.integer(1, 2); ++i) {
            Monomial mono = testutil::random_monomial(rng, n, 3);
            if (mono.is_constant()) mono[0] = 1;
            gens.emplace_back(R, mono, Rational(1));
        }
        const Ideal I(R, std::move(gens));
        const std::uint32_t m = static_cast<std::uint32_t>(rng.integer(1, 5));
        const auto direct = jsc_monomial(I, m);
        const auto oracle = jsc_monomial_oracle(I, m);
        out.require(ideal_equal(direct.closure, oracle.closure),
                    "jsc membership test vs radical kernel, round " + std::to_string(round));
    }
    return out;
}

Outcome criterion7_weighted_tables() {
    Outcome out;
    struct Row {
        const char* name;
        std::uint32_t max_m;
    };
    const std::vector<Row> rows = {{"A3", 6}, {"A4", 6}, {"D4", 6}, {"D5", 6},
                                   {"E6", 7}, {"E7", 8}, {"E8", 9}};
    for (const auto& row : rows) {
        const AdeType t = *ade_by_name(row.name);
        const Ideal I(catalog_ring(), {t.poly});
        for (std::uint32_t m = 1; m <= row.max_m; ++m) {
            const auto computed = jet_support_closure(I, m);

            // independent oracle below the weighted degree
            try {
                const auto w = WeightedForm::infer(t.poly);
                if (w.weight_x != w.weight_y && m < w.weighted_degree) {
                    const auto oracle = jsc_weighted_oracle(w, m);
                    out.require(ideal_equal(computed.closure, oracle.closure),
                                t.name() + " m=" + std::to_string(m) +
                                    ": closed form vs radical-kernel oracle");
                }
            } catch (const UnsupportedClassError&) {
                // homogeneous members have no weighted oracle; the reduced-
                // homogeneous closed form covers them
            }

            // the printed reference values are reported, not trusted blindly
            if (const auto printed = expected_jsc_ideal(t, m)) {
                if (!ideal_equal(computed.closure, *printed))
                    out.flag(t.name() + " m=" + std::to_string(m) +
                             ": printed ideal differs from the oracle-checked closure");
            }
            if (const auto printed_dim = expected_jsc_dim(t, m)) {
                if (computed.dim != *printed_dim)
                    out.flag(t.name() + " m=" + std::to_string(m) + ": printed dim " +
                             std::to_string(*printed_dim) + " differs from computed " +
                             std::to_string(computed.dim));
            }
        }
    }
    return out;
}

Outcome criterion8_jet_indices() {
    Outcome out;
    for (unsigned n = 1; n <= 6; ++n) { // A_n: f = x^(n+1) + y^2
        const Polynomial f = Polynomial::variable(XY, 0, n + 1) + Polynomial::variable(XY, 1, 2);
        out.require(jet_milnor_index(f).index == n - 1, "j(A_" + std::to_string(n) + ")");
    }
    out.require(jet_milnor_index(pp("x^3 + y^4", XY)).index == 3, "j(E6) = 3");
    out.require(jet_milnor_index(pp("x^3 + x*y^3", XY)).index == 4, "j(E7) = 4");
    out.require(jet_milnor_index(pp("x^3 + y^5", XY)).index == 4, "j(E8) = 4");
    for (unsigned n = 5; n <= 6; ++n) { // D_n: f = x^(n-1) + x y^2
        const Polynomial f = Polynomial::variable(XY, 0, n - 1) +
                             Polynomial::variable(XY, 0) * Polynomial::variable(XY, 1, 2);
        out.require(jet_milnor_index(f).index == n - 2, "j(D_" + std::to_string(n) + ")");
    }
    // five Fermat-type polynomials: j = sum a_i - n
    const std::vector<std::pair<const char*, std::uint64_t>> fermat = {
        {"x^3 + y^3", 2},       {"x^4 + y^3", 3},       {"x^5 + y^2", 3},
        {"x^2 + y^2 + z^2", 0}, {"x^3 + y^3 + z^3", 3},
    };
    for (const auto& [text, expected] : fermat) {
        const RingPtr R = std::string(text).find('z') != std::string::npos ? XYZ : XY;
        out.require(jet_milnor_index(pp(text, R)).index == expected,
                    std::string("Fermat index of ") + text);
    }
    return out;
}

Outcome criterion9_degenerate_sextic() {
    Outcome out;
    const Polynomial f = pp("x^6 + x*y^6 + x^2*y^5", XY);
    const Ideal J = jacobian_ideal(f);
    out.require(nilpotency_index(J) == 11, "N(J(f)) = 11");
    const auto closure = jet_closure(J, 10);
    out.require(closure.closure.contains(pp("x^8", XY)), "x^8 in J(f)^{10-jc}");
    out.require(!plus_maximal_power(J, 11).contains(pp("x^8", XY)), "x^8 not in J(f) + m^11");
    return out;
}

Outcome criterion10_property_suites() {
    Outcome out;
    testutil::Rng rng(101010);

    // containment: closure holds I + m^(m+1)
    for (int round = 0; round < 100; ++round) {
        const RingPtr R = round % 4 == 0 ? ring_with(1) : XY;
        std::vector<Polynomial> gens{testutil::random_in_m(rng, R, 4, 3, 4)};
        if (rng.integer(0, 1)) gens.push_back(testutil::random_in_m(rng, R, 4, 2, 4));
        const Ideal I(R, std::move(gens));
        const std::uint32_t m = static_cast<std::uint32_t>(rng.integer(1, 5));
        if (!jet_closure(I, m).closure.contains(good_form(I, m)))
            out.require(false, "containment, round " + std::to_string(round));
    }

    // idempotence
    for (int round = 0; round < 100; ++round) {
        const Ideal I(XY, {testutil::random_in_m(rng, XY, 4, 3, 4)});
        const std::uint32_t m = static_cast<std::uint32_t>(rng.integer(1, 4));
        const auto once = jet_closure(I, m);
        if (!ideal_equal(jet_closure(once.closure, m).closure, once.closure))
            out.require(false, "idempotence, round " + std::to_string(round));
    }

    // monotonicity in m
    for (int round = 0; round < 100; ++round) {
        const Ideal I(XY, {testutil::random_in_m(rng, XY, 3, 3, 4),
                           testutil::random_in_m(rng, XY, 3, 2, 4)});
        const std::uint32_t m = static_cast<std::uint32_t>(rng.integer(1, 4));
        if (!jet_closure(I, m).closure.contains(jet_closure(I, m + 1).closure))
            out.require(false, "monotonicity, round " + std::to_string(round));
    }

    // jc inside jsc on monomial ideals
    for (int round = 0; round < 100; ++round) {
        const std::size_t n = rng.integer(0, 1) ? 2 : 3;
        const RingPtr R = ring_with(n);
        std::vector<Polynomial> gens;
        for (int i = 0; i < rng.integer(1, 2); ++i) {
            Monomial mono = testutil::random_monomial(rng, n, 3);
            if (mono.is_constant()) mono[0] = 1;
            gens.emplace_back(R, mono, Rational(1));
        }
        const Ideal I(R, std::move(gens));
        const std::uint32_t m = static_cast<std::uint32_t>(rng.integer(1, 3));
        if (!jsc_monomial(I, m).closure.contains(jet_closure(I, m).closure))
            out.require(false, "jc inside jsc, round " + std::to_string(round));
    }

    // shift: m I^{m-jc} inside I^{(m+1)-jc}
    for (int round = 0; round < 100; ++round) {
        const Ideal I(XY, {testutil::random_in_m(rng, XY, 3, 3, 4)});
        const std::uint32_t m = static_cast<std::uint32_t>(rng.integer(1, 4));
        const auto lo = jet_closure(I, m);
        const auto hi = jet_closure(I, m + 1);
        bool ok = true;
        for (const auto& g : lo.closure.generators())
            for (std::size_t v = 0; v < 2 && ok; ++v)
                ok = hi.closure.contains(g * Polynomial::variable(XY, v));
        if (!ok) out.require(false, "shift, round " + std::to_string(round));
    }

    // filtration axioms on random Artinian ideals
    int done = 0;
    while (done < 100) {
        const int a = rng.integer(2, 3), b = rng.integer(2, 3);
        const Ideal I(XY, {Polynomial::variable(XY, 0, static_cast<std::uint32_t>(a)) +
                               testutil::random_in_m(rng, XY, 3, 2, 2) *
                                   Polynomial::variable(XY, 1, 2),
                           Polynomial::variable(XY, 1, static_cast<std::uint32_t>(b))});
        try {
            quotient_dimension(I);
        } catch (const UnsupportedClassError&) {
            continue;
        }
        ++done;
        const Polynomial g = testutil::random_polynomial(rng, XY, 3, 3, 3);
        const Polynomial h = testutil::random_polynomial(rng, XY, 3, 3, 3);
        const auto fg = filtration_value(I, g);
        const auto fh = filtration_value(I, h);
        const auto fdiff = filtration_value(I, g - h);
        const auto fmin = (fh >= fg) ? fg : fh;
        if (!(fdiff >= fmin))
            out.require(false, "filtration difference axiom, case " + std::to_string(done));
        const auto fprod = filtration_value(I, g * h);
        const bool prod_ok = (fg.infinite || fh.infinite)
                                 ? fprod.infinite
                                 : fprod >= FiltrationValue::finite(fg.value + fh.value);
        if (!prod_ok)
            out.require(false, "filtration product axiom, case " + std::to_string(done));
    }

    // homogeneity iff radical, on monomial ideals
    for (int round = 0; round < 100; ++round) {
        std::vector<Polynomial> gens;
        for (int i = 0; i < rng.integer(1, 2); ++i) {
            Monomial mono = testutil::random_monomial(rng, 2, 3);
            if (mono.is_constant()) mono[rng.integer(0, 1)] = 1;
            gens.emplace_back(XY, mono, Rational(1));
        }
        const Ideal I(XY, std::move(gens));
        const auto view = monomial_view(I.generators());
        const bool radical = view.radical() == view;

        bool homogeneous = true;
        std::vector<Polynomial> samples{pp("x", XY), pp("y", XY), pp("x + y", XY)};
        for (const auto& g : view.generators())
            samples.emplace_back(XY, g.radical(), Rational(1));
        for (const auto& g : samples) {
            const auto fg = filtration_value(I, g, 24);
            Polynomial power = g;
            for (int s = 2; s <= 3 && homogeneous; ++s) {
                power = power * g;
                const auto fs = filtration_value(I, power, 24);
                homogeneous = fg.infinite ? fs.infinite
                                          : fs == FiltrationValue::finite(fg.value * s);
            }
            if (!homogeneous) break;
        }
        if (homogeneous != radical)
            out.require(false, "homogeneity-radical equivalence, round " + std::to_string(round));
    }

    // f-bar dominates f
    for (int round = 0; round < 100; ++round) {
        Ideal I(XY);
        if (rng.integer(0, 1)) {
            Monomial mono = testutil::random_monomial(rng, 2, 3);
            if (mono.is_constant()) mono[0] = 1;
            I = Ideal(XY, {Polynomial(XY, mono, Rational(1))});
        } else {
            I = Ideal(XY, {testutil::random_homogeneous(rng, XY, rng.integer(1, 3), 2, 3)});
        }
        const Polynomial g = testutil::random_in_m(rng, XY, 3, 3, 3);
        if (g.is_zero()) continue;
        if (!(homogeneous_filtration_value(I, g) >= filtration_value(I, g, 24)))
            out.require(false, "f-bar dominance, round " + std::to_string(round));
    }

    return out;
}

Outcome criterion11_classification() {
    Outcome out;
    const auto catalog = simple_curve_catalog(8);
    for (std::size_t i = 0; i < catalog.size(); ++i) {
        for (std::size_t j = i; j < catalog.size(); ++j) {
            const Ideal I1(catalog_ring(), {catalog[i].poly});
            const Ideal I2(catalog_ring(), {catalog[j].poly});
            const auto verdict = classify(I1, I2);
            const auto expected = i == j ? ClassifyVerdict::Isomorphic : ClassifyVerdict::Distinct;
            if (verdict != expected)
                out.require(false, catalog[i].name() + " vs " + catalog[j].name());
        }
    }
    // the dimension-sequence map is injective on this range
    std::vector<std::vector<std::uint64_t>> sequences;
    for (const auto& t : catalog) sequences.push_back(jsc_dim_sequence(t, 9));
    for (std::size_t i = 0; i < sequences.size(); ++i)
        for (std::size_t j = i + 1; j < sequences.size(); ++j)
            if (sequences[i] == sequences[j])
                out.require(false, "sequence collision " + catalog[i].name() + " vs " +
                                       catalog[j].name());
    return out;
}

} // namespace

int main() {
    struct Criterion {
        const char* name;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria = {
        {"1: exact jet ideal of the cusp at order 2", criterion1_jet_ideal_exactness},
        {"2: good jet closures of 20 random homogeneous ideals", criterion2_homogeneous_good},
        {"3: ADE jet-closure ranges and A-series dims", criterion3_ade_jet_closures},
        {"4: binomial dimension formula for principal forms", criterion4_dimension_formula},
        {"5: monomial jet support closures (membership test)", criterion5_monomial_jsc},
        {"6: cross-algorithm oracles (15 + 15 instances)", criterion6_cross_algorithm},
        {"7: weighted bivariate jsc vs closed forms and table", criterion7_weighted_tables},
        {"8: jet indices of the catalog families", criterion8_jet_indices},
        {"9: degenerate sextic: nilpotency 11 and the x^8 witness", criterion9_degenerate_sextic},
        {"10: property suites (100+ randomized cases each)", criterion10_property_suites},
        {"11: pairwise classification over the catalog", criterion11_classification},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        const auto started = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = c.run();
        } catch (const std::exception& e) {
            out.pass = false;
            out.notes.push_back(std::string("exception: ") + e.what());
        }
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - started)
                            .count();
        std::cout << (out.pass ? "PASS" : "FAIL") << "  criterion " << c.name << "  (" << ms
                  << " ms)\n";
        for (const auto& note : out.notes) std::cout << "      " << note << "\n";
        if (!out.pass) ++failures;
    }
    std::cout << (failures == 0 ? "acceptance: all criteria passed"
                                : "acceptance: " + std::to_string(failures) + " criteria failed")
              << "\n";
    return failures == 0 ? 0 : 1;
}
