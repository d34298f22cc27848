#include "jetcl/catalog.hpp"

#include <array>
#include <map>
#include <mutex>
#include <stdexcept>

#include "jetcl/parse.hpp"

namespace jetcl {

namespace {

std::uint64_t ceil_div(std::uint64_t a, std::uint64_t b) { return (a + b - 1) / b; }

Polynomial P(const std::string& text) { return parse_polynomial(text, catalog_ring()); }

Polynomial xpow_plus_ypow(std::uint32_t i, std::uint32_t j) {
    // x^i + y^j
    return Polynomial::variable(catalog_ring(), 0, i) + Polynomial::variable(catalog_ring(), 1, j);
}

Monomial xy(std::uint32_t i, std::uint32_t j) {
    Monomial m(2);
    m[0] = i;
    m[1] = j;
    return m;
}

Ideal from_monomials(const std::vector<Monomial>& monos) {
    std::vector<Polynomial> gens;
    for (const auto& m : monos) gens.emplace_back(catalog_ring(), m, Rational(1));
    return Ideal(catalog_ring(), std::move(gens));
}

/// (f) + the staircase of a*i + b*j >= threshold.
Ideal principal_plus_staircase(const Polynomial& f, std::uint64_t a, std::uint64_t b,
                               std::uint64_t threshold) {
    std::vector<Polynomial> gens = {f};
    std::uint64_t prev_q = UINT64_MAX;
    for (std::uint64_t p = 0;; ++p) {
        const std::uint64_t used = p * a;
        const std::uint64_t q = used >= threshold ? 0 : ceil_div(threshold - used, b);
        if (q < prev_q) {
            gens.emplace_back(catalog_ring(), xy(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(q)),
                              Rational(1));
            prev_q = q;
        }
        if (q == 0) break;
    }
    return Ideal(catalog_ring(), std::move(gens));
}

} // namespace

const RingPtr& catalog_ring() {
    static const RingPtr ring = make_ring({"x", "y"});
    return ring;
}

std::string AdeType::name() const {
    const char* fam = family == AdeFamily::A ? "A" : family == AdeFamily::D ? "D" : "E";
    return fam + std::to_string(subscript);
}

AdeType make_ade(AdeFamily family, unsigned subscript) {
    AdeType t;
    t.family = family;
    t.subscript = subscript;
    t.milnor = subscript;
    switch (family) {
        case AdeFamily::A:
            if (subscript < 1) throw std::invalid_argument("A_n needs n >= 1");
            t.poly = xpow_plus_ypow(2, subscript + 1);
            t.poly_swapped = xpow_plus_ypow(subscript + 1, 2);
            break;
        case AdeFamily::D: {
            if (subscript < 4) throw std::invalid_argument("D_n needs n >= 4");
            // x^2 y + y^(n-1) = y (x^2 + y^(n-2))
            Polynomial f = Polynomial(catalog_ring(), xy(2, 1), Rational(1)) +
                           Polynomial::variable(catalog_ring(), 1, subscript - 1);
            t.poly = f;
            t.poly_swapped = f;
            break;
        }
        case AdeFamily::E:
            switch (subscript) {
                case 6: t.poly = P("x^3 + y^4"); break;
                case 7: t.poly = P("x^3 + x*y^3"); break;
                case 8: t.poly = P("x^3 + y^5"); break;
                default: throw std::invalid_argument("E_n needs n in {6,7,8}");
            }
            t.poly_swapped = t.poly;
            break;
    }
    return t;
}

std::optional<AdeType> ade_by_name(const std::string& name) {
    if (name.size() < 2) return std::nullopt;
    AdeFamily fam;
    switch (name[0]) {
        case 'A': case 'a': fam = AdeFamily::A; break;
        case 'D': case 'd': fam = AdeFamily::D; break;
        case 'E': case 'e': fam = AdeFamily::E; break;
        default: return std::nullopt;
    }
    unsigned sub = 0;
    for (std::size_t i = 1; i < name.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(name[i]))) return std::nullopt;
        sub = sub * 10 + (name[i] - '0');
    }
    try {
        return make_ade(fam, sub);
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
}

std::vector<AdeType> simple_curve_catalog(unsigned max_milnor) {
    std::vector<AdeType> out;
    for (unsigned n = 1; n <= max_milnor; ++n) out.push_back(make_ade(AdeFamily::A, n));
    for (unsigned n = 4; n <= max_milnor; ++n) out.push_back(make_ade(AdeFamily::D, n));
    for (unsigned n = 6; n <= max_milnor && n <= 8; ++n) out.push_back(make_ade(AdeFamily::E, n));
    return out;
}

std::optional<Ideal> expected_jc(const AdeType& t, std::uint32_t m) {
    const Ideal I(catalog_ring(), {t.poly});
    const auto good = [&] { return plus_maximal_power(I, m + 1); };
    switch (t.family) {
        case AdeFamily::A: {
            const unsigned N = t.subscript + 1; // the y-exponent of the defining form
            if (N == 2) return good();          // homogeneous: always good
            if (m <= N) return good();
            if (m == N + 1)
                return ideal_sum(good(), Ideal(catalog_ring(),
                                               {Polynomial::variable(catalog_ring(), 0, 3)}));
            return std::nullopt;
        }
        case AdeFamily::D:
            if (m <= t.subscript - 1) return good();
            return std::nullopt;
        case AdeFamily::E:
            if (m <= (t.subscript == 8 ? 5u : 4u)) return good();
            return std::nullopt;
    }
    return std::nullopt;
}

namespace {

// The E-type table: jet support closures and dimensions for small m.
struct TableRow {
    const char* gens;
    std::uint64_t dim;
};

const std::array<TableRow, 7> kE6Table = {{
    {"x^2, x*y, y^2", 3},
    {"x^3, x^2*y, x*y^2, y^3", 6},
    {"x^2, x*y^2, y^4", 6},
    {"x^3, x^2*y, x*y^2, y^3", 6},
    {"x^3, x^2*y, x*y^2, y^3", 6},
    {"x^3, x^2*y, x*y^2, y^4", 7},
    {"x^3, x^2*y, x*y^3, y^4", 8},
}};

const std::array<TableRow, 8> kE7Table = {{
    {"x^2, x*y, y^2", 3},
    {"x^3, x^2*y, x*y^2, y^3", 6},
    {"x^2, x*y^2, y^4", 6},
    {"x^3, x^2*y, x*y^3, y^5", 9},
    {"x^3, x^2*y, x*y^3, y^6", 10},
    {"x^3, x^2*y, x*y^3, y^7", 11},
    {"x^3, x^2*y, x*y^3, y^8", 12},
    {"x^3, x^2*y^2, x*y^3, y^9", 14},
}};

const std::array<TableRow, 9> kE8Table = {{
    {"x^2, x*y, y^2", 3},
    {"x^3, x^2*y, x*y^2, y^3", 6},
    {"x^2, x*y^2, y^4", 6},
    {"x^3, x^2*y, x*y^3, y^5", 9},
    {"x^3, x^2*y, x*y^2, y^3", 6},
    {"x^3, x^2*y, x*y^2, y^4", 7},
    {"x^3, x^2*y, x*y^3, y^4", 8},
    {"x^3, x^2*y^2, x*y^3, y^5", 10},
    {"x^3, x^2*y, x*y^3, y^5", 9},
}};

const TableRow* e_table_row(unsigned subscript, std::uint32_t m) {
    if (m < 1) return nullptr;
    switch (subscript) {
        case 6: return m <= kE6Table.size() ? &kE6Table[m - 1] : nullptr;
        case 7: return m <= kE7Table.size() ? &kE7Table[m - 1] : nullptr;
        case 8: return m <= kE8Table.size() ? &kE8Table[m - 1] : nullptr;
    }
    return nullptr;
}

// per-type weighted data for the m >= d closed forms
struct EWeights {
    std::uint64_t a, b, d, table_max;
};
EWeights e_weights(unsigned subscript) {
    switch (subscript) {
        case 6: return {4, 3, 12, 7};
        case 7: return {3, 2, 9, 8};
        case 8: return {5, 3, 15, 9};
    }
    throw std::logic_error("e_weights");
}

} // namespace

std::optional<std::uint64_t> expected_jsc_dim(const AdeType& t, std::uint32_t m) {
    if (m < 1) return std::nullopt;
    const std::uint64_t M = m;
    switch (t.family) {
        case AdeFamily::A: {
            if (t.subscript % 2 == 1) { // A_{2n-1}: x^2 + y^{2n}
                const std::uint64_t n = (t.subscript + 1) / 2;
                if (M < 2 * n) return M + 1 + ceil_div(M, 2);
                return 2 * M + 2 - n;
            }
            const std::uint64_t n = t.subscript / 2; // A_{2n}: x^2 + y^{2n+1}
            if (M < 2 * n + 1) return M + 1 + ceil_div(M + 1, 2);
            if (M < 4 * n + 2) return ceil_div(3 * (M + 1), 4);
            return M + 1 - n;
        }
        case AdeFamily::D: {
            if (t.subscript % 2 == 0) { // D_{2n}: x^2 y + y^{2n-1}
                const std::uint64_t n = t.subscript / 2;
                if (M < 2 * n - 1) return 2 * M + ceil_div(M, 2);
                return 3 * M + 2 - n;
            }
            const std::uint64_t n = (t.subscript - 1) / 2; // D_{2n+1}: x^2 y + y^{2n}
            if (M < 2 * n) return 2 * M + ceil_div(M + 1, 2);
            if (M <= 4 * n - 1) return ceil_div(7 * M + 1, 4);
            return 2 * M - n + 1;
        }
        case AdeFamily::E: {
            if (const TableRow* row = e_table_row(t.subscript, m)) return row->dim;
            const EWeights w = e_weights(t.subscript);
            if (M < w.d) return std::nullopt; // gap between the table and the closed form
            switch (t.subscript) {
                case 6: return M - 2;
                case 7: return ceil_div(3 * M - 5, 2);
                case 8: return M - 3;
            }
            return std::nullopt;
        }
    }
    return std::nullopt;
}

std::optional<Ideal> expected_jsc_ideal(const AdeType& t, std::uint32_t m) {
    if (m < 1) return std::nullopt;
    const std::uint64_t M = m;
    switch (t.family) {
        case AdeFamily::A: {
            const auto low = [&](std::uint64_t ylow) {
                return from_monomials({xy(2, 0),
                                       xy(1, static_cast<std::uint32_t>(ceil_div(M, 2))),
                                       xy(0, static_cast<std::uint32_t>(ylow))});
            };
            if (t.subscript % 2 == 1) { // A_{2n-1}
                const std::uint64_t n = (t.subscript + 1) / 2;
                if (M < 2 * n) return low(M + 1);
                return principal_plus_staircase(t.poly, n, 1, M + 1);
            }
            const std::uint64_t n = t.subscript / 2; // A_{2n}
            if (M < 2 * n + 1) return low(M + 1);
            if (M < 4 * n + 2)
                return from_monomials({xy(2, 0),
                                       xy(1, static_cast<std::uint32_t>(ceil_div(M + 1, 4))),
                                       xy(0, static_cast<std::uint32_t>(ceil_div(M + 1, 2)))});
            return principal_plus_staircase(t.poly, 2 * n + 1, 2, M + 1);
        }
        case AdeFamily::D: {
            const auto low = [&](std::uint64_t ymid) {
                return from_monomials({xy(static_cast<std::uint32_t>(M + 1), 0), xy(2, 1),
                                       xy(1, static_cast<std::uint32_t>(ymid)),
                                       xy(0, static_cast<std::uint32_t>(M + 1))});
            };
            if (t.subscript % 2 == 0) { // D_{2n}
                const std::uint64_t n = t.subscript / 2;
                if (M < 2 * n - 1) return low(ceil_div(M + 1, 2));
                // (f, y^{m+1}, x^j y^{m+1-j(n-1)} for j = 1..q, x^{m+1})
                std::vector<Polynomial> gens = {t.poly,
                                                Polynomial(catalog_ring(), xy(0, m + 1), Rational(1))};
                const std::uint64_t q = M / (n - 1);
                for (std::uint64_t j = 1; j <= q; ++j)
                    gens.emplace_back(catalog_ring(),
                                      xy(static_cast<std::uint32_t>(j),
                                         static_cast<std::uint32_t>(M + 1 - j * (n - 1))),
                                      Rational(1));
                gens.emplace_back(catalog_ring(), xy(m + 1, 0), Rational(1));
                return Ideal(catalog_ring(), std::move(gens));
            }
            const std::uint64_t n = (t.subscript - 1) / 2; // D_{2n+1}
            if (M < 2 * n) return low(ceil_div(M + 1, 2));
            if (M <= 4 * n - 1)
                return from_monomials({xy(static_cast<std::uint32_t>(M + 1), 0), xy(2, 1),
                                       xy(1, static_cast<std::uint32_t>(ceil_div(M + 2, 4))),
                                       xy(0, static_cast<std::uint32_t>(ceil_div(M + 1, 2)))});
            return std::nullopt; // the m >= 4n row lists two ideals; left unknown
        }
        case AdeFamily::E: {
            if (const TableRow* row = e_table_row(t.subscript, m))
                return Ideal(catalog_ring(), parse_generators(row->gens, catalog_ring()));
            const EWeights w = e_weights(t.subscript);
            if (M >= w.d) return principal_plus_staircase(t.poly, w.a, w.b, M + 1);
            return std::nullopt;
        }
    }
    return std::nullopt;
}

std::vector<std::uint64_t> jsc_dim_sequence(const AdeType& t, std::uint32_t up_to,
                                            const ClosureOptions& options) {
    static std::mutex mu;
    static std::map<std::string, std::vector<std::uint64_t>> memo;
    std::lock_guard<std::mutex> lock(mu);
    auto& dims = memo[t.name()];
    const Ideal I(catalog_ring(), {t.poly});
    while (dims.size() < up_to) {
        const auto m = static_cast<std::uint32_t>(dims.size() + 1);
        dims.push_back(jet_support_closure(I, m, options).dim);
    }
    return {dims.begin(), dims.begin() + up_to};
}

std::optional<AdeType> match_catalog(const Ideal& I, unsigned max_milnor) {
    if (!same_ring(I.ring(), catalog_ring())) return std::nullopt;
    for (const auto& t : simple_curve_catalog(max_milnor)) {
        if (ideal_equal(I, Ideal(catalog_ring(), {t.poly}))) return t;
        if (ideal_equal(I, Ideal(catalog_ring(), {t.poly_swapped}))) return t;
    }
    return std::nullopt;
}

ClassifyVerdict classify(const Ideal& I1, const Ideal& I2, unsigned max_milnor,
                         const ClosureOptions& options) {
    if (I1.ring()->size() != 2 || I2.ring()->size() != 2) return ClassifyVerdict::Inconclusive;
    const auto t1 = match_catalog(I1, max_milnor);
    const auto t2 = match_catalog(I2, max_milnor);
    if (!t1 || !t2) return ClassifyVerdict::Inconclusive;
    const auto upto = static_cast<std::uint32_t>(std::max(t1->milnor, t2->milnor) + 1);
    const auto d1 = jsc_dim_sequence(*t1, upto, options);
    const auto d2 = jsc_dim_sequence(*t2, upto, options);
    return d1 == d2 ? ClassifyVerdict::Isomorphic : ClassifyVerdict::Distinct;
}

} // namespace jetcl
