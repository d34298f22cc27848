#include "jetcl/gcd.hpp"

#include <algorithm>
#include <map>

#include "jetcl/errors.hpp"

namespace jetcl {

std::optional<Polynomial> exact_divide(const Polynomial& p, const Polynomial& q) {
    if (q.is_zero()) return std::nullopt;
    Polynomial rem = p;
    Polynomial quot(p.ring());
    const auto& qlt = q.leading_term();
    while (!rem.is_zero()) {
        const auto& rlt = rem.leading_term();
        if (!qlt.first.divides(rlt.first)) return std::nullopt;
        Polynomial t(p.ring(), rlt.first / qlt.first, rlt.second / qlt.second);
        quot = quot + t;
        rem = rem - t * q;
    }
    return quot;
}

namespace {

// Views a polynomial as univariate in `var` with coefficients in the
// remaining variables (still represented in the full ring).
std::map<std::uint32_t, Polynomial> coefficients_in(const Polynomial& p, std::size_t var) {
    std::map<std::uint32_t, Polynomial> out;
    for (const auto& [m, c] : p.terms()) {
        Monomial rest = m;
        const std::uint32_t e = rest[var];
        rest[var] = 0;
        auto it = out.find(e);
        Polynomial piece(p.ring(), rest, c);
        if (it == out.end()) out.emplace(e, std::move(piece));
        else it->second = it->second + piece;
    }
    return out;
}

Polynomial leading_coeff_in(const Polynomial& p, std::size_t var) {
    auto coeffs = coefficients_in(p, var);
    return coeffs.rbegin()->second;
}

Polynomial times_var_power(const Polynomial& p, std::size_t var, std::uint32_t e) {
    Monomial m(p.ring()->size());
    m[var] = e;
    return p * Polynomial(p.ring(), m, Rational(1));
}

/// Pseudo-remainder of a by b in variable `var`: lc(b)^(da-db+1) * a mod b.
Polynomial pseudo_remainder(Polynomial a, const Polynomial& b, std::size_t var) {
    const std::uint32_t db = b.degree_in(var);
    const Polynomial lcb = leading_coeff_in(b, var);
    std::uint32_t da = a.degree_in(var);
    std::int64_t steps = static_cast<std::int64_t>(da) - db + 1;
    while (!a.is_zero() && a.degree_in(var) >= db) {
        const std::uint32_t d = a.degree_in(var);
        Polynomial lca = leading_coeff_in(a, var);
        a = lcb * a - times_var_power(lca, var, d - db) * b;
        --steps;
        if (!a.is_zero() && a.degree_in(var) >= d && a.degree_in(var) >= db) {
            // degree must strictly drop; guards against a coding error
            throw std::logic_error("pseudo_remainder: no degree drop");
        }
    }
    for (; steps > 0; --steps) a = lcb * a;
    return a;
}

Polynomial gcd_rec(const Polynomial& a, const Polynomial& b);

// exact division that the subresultant theory guarantees; a failure here
// is a bug, not a user error
Polynomial checked_div(const Polynomial& p, const Polynomial& q) {
    auto r = exact_divide(p, q);
    if (!r) throw std::logic_error("gcd: expected exact division failed");
    return *std::move(r);
}

Polynomial content_in(const Polynomial& p, std::size_t var) {
    Polynomial c(p.ring());
    for (const auto& [e, coeff] : coefficients_in(p, var)) {
        c = gcd_rec(c, coeff);
        if (c.is_constant() && !c.is_zero()) break;
    }
    return c;
}

Polynomial normalize_result(const Polynomial& g) {
    if (g.is_zero()) return g;
    if (g.is_constant()) return Polynomial::constant(g.ring(), Rational(1));
    return g.primitive();
}

Polynomial gcd_rec(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero()) return normalize_result(b);
    if (b.is_zero()) return normalize_result(a);
    if (a.is_constant() || b.is_constant())
        return Polynomial::constant(a.ring(), Rational(1));

    // main variable: highest-index variable occurring in either input
    std::size_t var = 0;
    for (std::size_t i = a.ring()->size(); i-- > 0;) {
        if (a.degree_in(i) > 0 || b.degree_in(i) > 0) { var = i; break; }
    }

    const Polynomial cont_a = content_in(a, var);
    const Polynomial cont_b = content_in(b, var);
    const Polynomial d = gcd_rec(cont_a, cont_b);
    Polynomial f = checked_div(a, cont_a);
    Polynomial g = checked_div(b, cont_b);
    if (f.degree_in(var) < g.degree_in(var)) std::swap(f, g);

    // subresultant remainder sequence on the primitive parts
    Polynomial lead(a.ring(), Rational(1)), h(a.ring(), Rational(1));
    while (true) {
        const std::uint32_t delta = f.degree_in(var) - g.degree_in(var);
        Polynomial r = pseudo_remainder(f, g, var);
        if (r.is_zero()) break;
        if (r.degree_in(var) == 0) {
            g = Polynomial::constant(a.ring(), Rational(1));
            break;
        }
        f = g;
        Polynomial divisor = lead * pow(h, delta);
        g = checked_div(r, divisor);
        lead = leading_coeff_in(f, var);
        if (delta == 0) {
            // h unchanged
        } else {
            // h := lead^delta / h^(delta-1)
            h = checked_div(pow(lead, delta), pow(h, delta - 1));
        }
    }

    if (g.is_constant()) return normalize_result(d);
    // primitive part of g in the main variable
    Polynomial pp = checked_div(g, content_in(g, var));
    return normalize_result(d * pp);
}

} // namespace

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
    if (!same_ring(a.ring(), b.ring()))
        throw std::invalid_argument("poly_gcd: ring mismatch");
    return gcd_rec(a, b);
}

namespace {

Polynomial jacobian_gcd(const Polynomial& p) {
    Polynomial g = p;
    for (std::size_t i = 0; i < p.ring()->size(); ++i) {
        if (g.is_constant() && !g.is_zero()) break;
        g = poly_gcd(g, partial_derivative(p, i));
    }
    return g;
}

} // namespace

bool squarefree_test(const Polynomial& p) {
    if (p.is_constant())
        throw UnsupportedClassError("squarefree_test: constant input");
    return jacobian_gcd(p).is_constant();
}

Polynomial squarefree_part(const Polynomial& p) {
    if (p.is_constant())
        throw UnsupportedClassError("squarefree_part: constant input");
    const Polynomial g = jacobian_gcd(p);
    auto q = exact_divide(p, g);
    if (!q) throw std::logic_error("squarefree_part: gcd does not divide its input");
    return q->primitive();
}

} // namespace jetcl
