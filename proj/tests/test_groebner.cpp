#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "jetcl/errors.hpp"
#include "jetcl/filtration.hpp"
#include "jetcl/groebner.hpp"
#include "jetcl/parse.hpp"
#include "support/test_util.hpp"

using namespace jetcl;
using testutil::ideal_of;
using testutil::pp;

namespace {
const RingPtr XY = make_ring({"x", "y"});
const RingPtr XYZ = make_ring({"x", "y", "z"});
const MonomialOrder DRL = MonomialOrder::degrevlex();

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}
} // namespace

TEST_CASE("normal form") {
    // single-step division by hand: under lex the cusp leads with x^2
    const auto cusp_lex = buchberger({pp("x^2 - y^3", XY)}, MonomialOrder::lex());
    CHECK(normal_form(pp("x^2", XY), cusp_lex, MonomialOrder::lex()) == pp("y^3", XY));
    // under degrevlex the same generator leads with y^3, so x^2 is already reduced
    const auto cusp_drl = buchberger({pp("x^2 - y^3", XY)}, DRL);
    CHECK(normal_form(pp("x^2", XY), cusp_drl, DRL) == pp("x^2", XY));

    CHECK(normal_form(pp("y^3", XY), buchberger({pp("x", XY), pp("y", XY)}, DRL), DRL).is_zero());
    const Ideal I = ideal_of(XY, "x^2 - y^3, y^3");
    CHECK(I.reduce(pp("(x+y)*(x^2 - y^3) + y^3*x", XY)).is_zero());
}

TEST_CASE("normal form is linear over a Groebner basis") {
    const auto basis = ideal_of(XY, "x^2 + y^2 - 1, x*y - 1").groebner_basis();
    testutil::Rng rng(31);
    for (int round = 0; round < 30; ++round) {
        const Polynomial p = testutil::random_polynomial(rng, XY, 4, 4, 6);
        const Polynomial q = testutil::random_polynomial(rng, XY, 4, 4, 6);
        const Polynomial lhs = normal_form(p + q, basis, DRL);
        const Polynomial rhs = normal_form(normal_form(p, basis, DRL) + normal_form(q, basis, DRL),
                                           basis, DRL);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("buchberger basics") {
    CHECK(buchberger({pp("x^2 - y^3", XY)}, DRL) ==
          std::vector<Polynomial>{pp("y^3 - x^2", XY)});
    CHECK(buchberger({pp("x", XY), pp("y", XY)}, DRL) ==
          std::vector<Polynomial>{pp("x", XY), pp("y", XY)});

    // reduced bases are unique: recomputation and generator shuffling agree
    const std::vector<Polynomial> gens{pp("x^2 + y^2 - 1", XY), pp("x*y - 1", XY)};
    const auto b1 = buchberger(gens, DRL);
    const auto b2 = buchberger({gens[1], gens[0]}, DRL);
    CHECK(b1 == b2);
    CHECK(b1.size() == 3);
    for (const auto& g : gens) CHECK(normal_form(g, b1, DRL).is_zero());
}

TEST_CASE("buchberger against independently known bases") {
    // GB({x+y-1, x-y}) = {x - 1/2, y - 1/2}
    const auto lin = buchberger({pp("x + y - 1", XY), pp("x - y", XY)}, DRL);
    CHECK(lin == std::vector<Polynomial>{pp("x - 1/2", XY), pp("y - 1/2", XY)});

    // symmetric functions in three variables: {z^3-1, y^2+yz+z^2, x+y+z},
    // listed by decreasing leading monomial
    const auto sym = buchberger(
        {pp("x + y + z", XYZ), pp("x*y + y*z + z*x", XYZ), pp("x*y*z - 1", XYZ)}, DRL);
    CHECK(sym == std::vector<Polynomial>{pp("z^3 - 1", XYZ), pp("y^2 + y*z + z^2", XYZ),
                                         pp("x + y + z", XYZ)});

    // lex elimination triangulates the circle/hyperbola pair
    const auto elim = buchberger({pp("x^2 + y^2 - 1", XY), pp("x*y - 1", XY)}, MonomialOrder::lex());
    CHECK(elim == std::vector<Polynomial>{pp("x + y^3 - y", XY), pp("y^4 - y^2 + 1", XY)});
}

TEST_CASE("staircase of the D4 jacobian matches its Milnor number") {
    // J(x^3 + x y^2) up to scaling: the D4 Jacobian
    const Ideal J = ideal_of(XY, "y^2 + 3*x^2, x*y");
    CHECK(quotient_dimension(J) == 4);
}

TEST_CASE("resource cap raises instead of returning a wrong answer") {
    GroebnerOptions opts;
    opts.max_pairs = 1;
    CHECK_THROWS_AS(
        buchberger({pp("x^3 - y^2 + 1", XYZ), pp("x*y*z - 4", XYZ), pp("y^4 + z^3 - x", XYZ)}, DRL,
                   opts),
        ResourceLimitError);
}

TEST_CASE("ideal membership") {
    CHECK(ideal_membership(pp("x^2", XY), ideal_of(XY, "x^2 - y^3, y^3")));

    // memberships around the degenerate Jacobian J(f), f = x^6 + x y^6 + x^2 y^5,
    // whose zero locus has points away from the origin
    const Ideal J = ideal_of(XY, "6*x^5 + y^6 + 2*x*y^5, 6*x*y^5 + 5*x^2*y^4");
    CHECK_FALSE(plus_maximal_power(J, 11).contains(pp("x^8", XY)));
    // m^11 lies in J(f) only in the power series ring
    const Ideal m11 = maximal_ideal_power(XY, 11);
    CHECK_FALSE(J.contains(m11));
    CHECK(local_part(J).contains(m11));
    for (const auto& g : m11.generators()) CHECK(local_contains(J, g));
    CHECK_FALSE(local_contains(J, pp("x^8", XY)));
}

TEST_CASE("membership agrees with brute-force linear algebra above a power of m") {
    testutil::Rng rng(4242);
    for (int round = 0; round < 15; ++round) {
        const std::uint32_t m = static_cast<std::uint32_t>(rng.integer(1, 3));
        std::vector<Polynomial> gens{testutil::random_polynomial(rng, XY, 3, 3, 4),
                                     testutil::random_polynomial(rng, XY, 3, 3, 4)};
        const Ideal I = plus_maximal_power(Ideal(XY, gens), m + 1);
        for (int probe = 0; probe < 6; ++probe) {
            const Polynomial p = testutil::random_polynomial(rng, XY, static_cast<int>(m) + 1, 4, 4);
            CHECK(I.contains(p) == testutil::brute_membership_truncated(I, p, m));
        }
    }
}

TEST_CASE("ideal equality") {
    CHECK(ideal_equal(ideal_of(XY, "x, y"), ideal_of(XY, "y, x + y")));
    CHECK(ideal_equal(ideal_of(XY, "x^2"), ideal_of(XY, "x^2, x^3")));
    // the A-series jet closure at m = n+1 strictly enlarges I + m^(m+1)
    const Ideal lhs = plus_maximal_power(ideal_of(XY, "x^2 + y^3"), 5);
    const Ideal rhs = ideal_sum(lhs, ideal_of(XY, "x^3"));
    CHECK_FALSE(ideal_equal(lhs, rhs));
}

TEST_CASE("elimination") {
    const RingPtr XYT = make_ring({"x", "y", "t"});
    const Ideal param = ideal_of(XYT, "y - t^2, x - t^3");
    const Ideal elim = eliminate(param, {2});
    CHECK(elim.contains(pp("x^2 - y^3", XYT)));
    CHECK(ideal_equal(elim, ideal_of(XYT, "x^2 - y^3")));
    for (const auto& g : elim.generators()) CHECK(param.contains(g));

    const Ideal I = ideal_of(XY, "x^2 + y^2 - 1, x*y - 1");
    CHECK(ideal_equal(eliminate(I, {}), I));
    CHECK(ideal_equal(eliminate(I, {0}), ideal_of(XY, "y^4 - y^2 + 1")));
    CHECK_FALSE(eliminate(ideal_of(XY, "x + y"), {0, 1}).has_generators());
}

TEST_CASE("quotient dimension") {
    CHECK(quotient_dimension(maximal_ideal_power(XY, 4)) == 10);
    CHECK(quotient_dimension(plus_maximal_power(ideal_of(XY, "x^2 + y^2"), 4)) == 7);
    CHECK(quotient_dimension(plus_maximal_power(ideal_of(XY, "x^2 + y^3"), 4)) == 7);
    CHECK_THROWS_AS(quotient_dimension(ideal_of(XY, "x^2 - y^3")), UnsupportedClassError);

    for (std::size_t n = 1; n <= 3; ++n) {
        std::vector<std::string> names;
        for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i));
        const RingPtr R = make_ring(names);
        for (std::uint32_t m = 0; m <= 6; ++m)
            CHECK(quotient_dimension(maximal_ideal_power(R, m + 1)) == binomial(n + m, n));
    }
}

TEST_CASE("nilpotency index") {
    CHECK(nilpotency_index(maximal_ideal_power(XY, 3)) == 3);
    CHECK(nilpotency_index(ideal_of(XY, "3*x^2, 4*y^3")) == 4); // J(x^3 + y^4)
    // the degenerate sextic: N(J(f)) = 11 holds in the power series ring only
    const Ideal J = ideal_of(XY, "6*x^5 + y^6 + 2*x*y^5, 6*x*y^5 + 5*x^2*y^4");
    CHECK(nilpotency_index(J) == 11);
}

TEST_CASE("monomial ideal views") {
    auto view = [&](const std::string& gens) { return monomial_view(parse_generators(gens, XY)); };
    CHECK(view("x^2*y^3").radical() == view("x*y"));
    CHECK(view("x^2, y^2").radical() == view("x, y"));
    CHECK(view("x^2*y, y^4").radical() == view("y")); // absorption: (xy, y) = (y)
    CHECK(intersect(view("x"), view("y")) == view("x*y"));
    CHECK_THROWS_AS(monomial_view({pp("x + y", XY)}), std::invalid_argument);
}

TEST_CASE("ideal intersection") {
    CHECK(ideal_equal(ideal_intersect(ideal_of(XY, "x"), ideal_of(XY, "y")), ideal_of(XY, "x*y")));
    const Ideal I = ideal_of(XY, "x^2, y");
    CHECK(ideal_equal(ideal_intersect(I, I), I));
    CHECK(ideal_equal(ideal_intersect(ideal_of(XY, "x^2"), ideal_of(XY, "x^3, y")),
                      ideal_of(XY, "x^3, x^2*y")));

    testutil::Rng rng(77);
    for (int round = 0; round < 10; ++round) {
        const Ideal A(XY, {testutil::random_polynomial(rng, XY, 3, 2, 3),
                           testutil::random_polynomial(rng, XY, 2, 2, 3)});
        const Ideal B(XY, {testutil::random_polynomial(rng, XY, 3, 2, 3)});
        if (!A.has_generators() || !B.has_generators()) continue;
        const Ideal meet = ideal_intersect(A, B);
        for (const auto& g : meet.generators()) {
            CHECK(A.contains(g));
            CHECK(B.contains(g));
        }
        for (const auto& f : A.generators())
            for (const auto& g : B.generators()) CHECK(meet.contains(f * g));
    }
}

TEST_CASE("block order eliminates its leading block") {
    // a Groebner basis under block_elim(k) meets the subring in a basis:
    // generators of the eliminated ideal all lie in the original ideal
    testutil::Rng rng(88);
    for (int round = 0; round < 8; ++round) {
        const Ideal I(XYZ, {testutil::random_polynomial(rng, XYZ, 2, 3, 3),
                            testutil::random_polynomial(rng, XYZ, 2, 3, 3)});
        if (!I.has_generators()) continue;
        const Ideal E = eliminate(I, {0});
        for (const auto& g : E.generators()) {
            CHECK(g.degree_in(0) == 0);
            CHECK(I.contains(g));
        }
    }
}
