#include "jetcl/closures.hpp"

#include <algorithm>
#include <map>

#include "jetcl/errors.hpp"
#include "jetcl/gcd.hpp"

namespace jetcl {

Ideal normalized(const Ideal& I) {
    return Ideal(I.ring(), I.groebner_basis());
}

namespace detail {

ClosureResult make_result(const Ideal& input, std::uint32_t m, ClosureKind kind, std::string method,
                          std::vector<Polynomial> closure_gens) {
    ClosureResult r;
    r.input = input;
    r.m = m;
    r.kind = kind;
    r.method = std::move(method);
    r.closure = normalized(Ideal(input.ring(), std::move(closure_gens)));
    r.good = ideal_equal(r.closure, plus_maximal_power(input, m + 1));
    r.dim = quotient_dimension(r.closure);
    return r;
}

} // namespace detail

namespace {

// shared power-series cache for expanding many base monomials at the origin
class OriginExpander {
public:
    explicit OriginExpander(const JetRing& jets) : jets_(jets) {}

    // t-coefficients 0..m of the at-origin expansion of x^mono
    const std::vector<Polynomial>& expand(const Monomial& mono) {
        auto it = memo_.find(mono);
        if (it != memo_.end()) return it->second;
        const std::uint32_t m = jets_.order();
        const RingPtr& R = jets_.ring();
        std::vector<Polynomial> acc(m + 1, Polynomial(R));
        acc[0] = Polynomial::constant(R, Rational(1));
        for (std::size_t i = 0; i < jets_.base()->size(); ++i)
            for (std::uint32_t k = 0; k < mono[i]; ++k)
                acc = mul_series(acc, series(i));
        return memo_.emplace(mono, std::move(acc)).first->second;
    }

private:
    const std::vector<Polynomial>& series(std::size_t i) {
        if (series_.empty()) series_.resize(jets_.base()->size());
        if (series_[i].empty()) series_[i] = jets_.variable_series(i, /*at_origin=*/true);
        return series_[i];
    }

    std::vector<Polynomial> mul_series(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b) {
        const std::uint32_t m = jets_.order();
        std::vector<Polynomial> c(m + 1, Polynomial(jets_.ring()));
        for (std::uint32_t i = 0; i <= m; ++i) {
            if (a[i].is_zero()) continue;
            for (std::uint32_t j = 0; i + j <= m; ++j) {
                if (b[j].is_zero()) continue;
                c[i + j] = c[i + j] + a[i] * b[j];
            }
        }
        return c;
    }

    const JetRing& jets_;
    std::vector<std::vector<Polynomial>> series_;
    std::map<Monomial, std::vector<Polynomial>> memo_;
};

// exact nullspace of a dense matrix; returns primitive integer vectors,
// one per free column, deterministically ordered
std::vector<std::vector<Rational>> nullspace(std::vector<std::vector<Rational>> A, std::size_t ncols) {
    std::vector<std::size_t> pivot_row_of_col(ncols, SIZE_MAX);
    std::size_t rank = 0;
    for (std::size_t c = 0; c < ncols && rank < A.size(); ++c) {
        std::size_t p = SIZE_MAX;
        for (std::size_t r = rank; r < A.size(); ++r)
            if (A[r][c] != 0) { p = r; break; }
        if (p == SIZE_MAX) continue;
        std::swap(A[rank], A[p]);
        const Rational inv = Rational(1) / A[rank][c];
        for (auto& x : A[rank]) x *= inv;
        for (std::size_t r = 0; r < A.size(); ++r) {
            if (r == rank || A[r][c] == 0) continue;
            const Rational f = A[r][c];
            for (std::size_t k = c; k < ncols; ++k) A[r][k] -= f * A[rank][k];
        }
        pivot_row_of_col[c] = rank;
        ++rank;
    }
    std::vector<std::vector<Rational>> kernel;
    for (std::size_t fc = 0; fc < ncols; ++fc) {
        if (pivot_row_of_col[fc] != SIZE_MAX) continue;
        std::vector<Rational> v(ncols, Rational(0));
        v[fc] = 1;
        for (std::size_t c = 0; c < ncols; ++c)
            if (pivot_row_of_col[c] != SIZE_MAX)
                v[c] = -A[pivot_row_of_col[c]][fc];
        kernel.push_back(std::move(v));
    }
    return kernel;
}

} // namespace

namespace detail {

std::vector<Polynomial> local_jet_kernel(const JetRing& jets, const std::vector<Polynomial>& modulus,
                                          std::uint64_t max_matrix_entries) {
    const RingPtr& base = jets.base();
    const std::uint32_t m = jets.order();
    const MonomialOrder ord = MonomialOrder::degrevlex();

    const std::vector<Monomial> columns = monomials_up_to_degree(base->size(), m);
    OriginExpander expander(jets);

    std::map<std::pair<std::uint32_t, Monomial>, std::size_t> row_of;
    std::vector<std::map<std::size_t, Rational>> entries(columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        const auto& coeffs = expander.expand(columns[c]);
        for (std::uint32_t j = 1; j <= m; ++j) {
            const Polynomial nf = normal_form(coeffs[j], modulus, ord);
            for (const auto& [mono, coeff] : nf.terms()) {
                auto key = std::make_pair(j, mono);
                auto it = row_of.find(key);
                if (it == row_of.end())
                    it = row_of.emplace(std::move(key), row_of.size()).first;
                entries[c][it->second] = coeff;
            }
        }
    }

    if (row_of.size() * columns.size() > max_matrix_entries)
        throw ResourceLimitError("jet kernel: matrix budget exceeded (" +
                                 std::to_string(row_of.size()) + " x " +
                                 std::to_string(columns.size()) + ")");
    std::vector<std::vector<Rational>> A(row_of.size(), std::vector<Rational>(columns.size(), Rational(0)));
    for (std::size_t c = 0; c < columns.size(); ++c)
        for (const auto& [r, coeff] : entries[c])
            A[r][c] = coeff;

    std::vector<Polynomial> out;
    for (const auto& v : nullspace(std::move(A), columns.size())) {
        std::vector<Polynomial::Term> terms;
        for (std::size_t c = 0; c < columns.size(); ++c)
            if (v[c] != 0) terms.emplace_back(columns[c], v[c]);
        out.push_back(Polynomial::from_terms(base, std::move(terms)).primitive());
    }
    return out;
}

JetClosureStep jet_closure_step(const Ideal& I, std::uint32_t m, const ClosureOptions& options,
                                const JetClosureStep* previous) {
    JetRing jets(I.ring(), m);
    for (const auto& f : I.generators()) {
        if (f.constant_term() != 0) {
            // a generator with a unit term makes I the whole local ring
            return {make_result(I, m, ClosureKind::jc, "kernel",
                                {Polynomial::constant(I.ring(), Rational(1))}),
                    std::move(jets),
                    {}};
        }
    }
    std::vector<Polynomial> gens;
    for (const auto& f : I.generators()) {
        JetExpansion e = hs_expand(f, jets, /*at_origin=*/true);
        for (std::uint32_t j = 1; j <= m; ++j)
            if (!e.coefficients[j].is_zero()) gens.push_back(e.coefficients[j]);
    }
    if (previous) {
        // lift the previous order's basis through the canonical embedding
        for (const auto& p : previous->jet_basis) {
            std::vector<Polynomial::Term> terms;
            for (const auto& [mono, c] : p.terms()) {
                Monomial nm(jets.ring()->size());
                for (std::size_t i = 0; i < previous->jets.base()->size(); ++i)
                    for (std::uint32_t j = 0; j <= previous->jets.order(); ++j)
                        nm[jets.var_index(i, j)] = mono[previous->jets.var_index(i, j)];
                terms.emplace_back(std::move(nm), c);
            }
            gens.push_back(Polynomial::from_terms(jets.ring(), std::move(terms)));
        }
    }

    GroebnerOptions gopts;
    gopts.max_pairs = options.max_pairs;
    gopts.weights = jet_weights(jets);
    gopts.max_weight = m;
    std::vector<Polynomial> basis = buchberger(std::move(gens), MonomialOrder::degrevlex(), gopts);

    std::vector<Polynomial> closure_gens = I.generators();
    for (const auto& mono : monomials_of_degree(I.ring()->size(), m + 1))
        closure_gens.emplace_back(I.ring(), mono, Rational(1));
    for (auto& k : detail::local_jet_kernel(jets, basis, options.max_matrix_entries))
        closure_gens.push_back(std::move(k));

    return {detail::make_result(I, m, ClosureKind::jc, "kernel", std::move(closure_gens)),
            std::move(jets), std::move(basis)};
}

} // namespace detail

ClosureResult jet_closure(const Ideal& I, std::uint32_t m, const ClosureOptions& options) {
    return detail::jet_closure_step(I, m, options).result;
}

ClosureResult jet_closure_elim(const Ideal& I, std::uint32_t m, const ClosureOptions& options) {
    const RingPtr& R = I.ring();
    const std::size_t n = R->size();
    JetRing jets(R, m);

    // combined ring: jet variables, then t, then the base variables
    std::vector<std::string> names = jets.ring()->names();
    std::string tname = "t";
    {
        RingSpec probe(names);
        while (probe.index_of(tname) || R->index_of(tname)) tname += "_";
    }
    names.push_back(tname);
    for (const auto& v : R->names()) names.push_back(v);
    const RingPtr big = make_ring(std::move(names));
    const std::size_t jet_count = jets.ring()->size();
    const std::size_t t_slot = jet_count;
    const std::size_t base_slot = jet_count + 1;

    auto lift_jet = [&](const Polynomial& p) {
        std::vector<Polynomial::Term> terms;
        for (const auto& [mono, c] : p.terms()) {
            Monomial nm(big->size());
            for (std::size_t i = 0; i < jet_count; ++i) nm[i] = mono[i];
            terms.emplace_back(std::move(nm), c);
        }
        return Polynomial::from_terms(big, std::move(terms));
    };

    std::vector<Polynomial> gens;
    for (const auto& g : I.generators()) {
        JetExpansion e = hs_expand(g, jets, /*at_origin=*/false);
        for (std::uint32_t j = 0; j <= m; ++j)
            if (!e.coefficients[j].is_zero()) gens.push_back(lift_jet(e.coefficients[j]));
    }
    for (std::size_t i = 0; i < n; ++i)
        gens.push_back(Polynomial::variable(big, jets.var_index(i, 0)));
    gens.push_back(Polynomial::variable(big, t_slot, m + 1));
    for (std::size_t i = 0; i < n; ++i) {
        Polynomial graph = Polynomial::variable(big, base_slot + i);
        for (std::uint32_t j = 0; j <= m; ++j) {
            Monomial mono(big->size());
            mono[jets.var_index(i, j)] = 1;
            mono[t_slot] = j;
            graph = graph - Polynomial(big, mono, Rational(1));
        }
        gens.push_back(graph);
    }

    GroebnerOptions gopts;
    gopts.max_pairs = options.max_pairs;
    const auto basis = buchberger(std::move(gens), MonomialOrder::block_elim(jet_count + 1), gopts);

    std::vector<Polynomial> closure_gens;
    for (const auto& g : basis) {
        bool pure_base = true;
        for (const auto& [mono, c] : g.terms())
            for (std::size_t i = 0; i < base_slot && pure_base; ++i)
                if (mono[i]) pure_base = false;
        if (!pure_base) continue;
        std::vector<Polynomial::Term> terms;
        for (const auto& [mono, c] : g.terms()) {
            Monomial om(n);
            for (std::size_t i = 0; i < n; ++i) om[i] = mono[base_slot + i];
            terms.emplace_back(std::move(om), c);
        }
        closure_gens.push_back(Polynomial::from_terms(R, std::move(terms)));
    }
    return detail::make_result(I, m, ClosureKind::jc, "elim", std::move(closure_gens));
}

// --- jet support closure of monomial ideals ------------------------------

bool jsc_monomial_member(const MonomialIdealView& M, const Monomial& b, std::uint32_t m) {
    if (b.degree() > m) return true; // inside m^(m+1), always a member
    const auto supp = b.support();

    // only generators supported inside supp(b) can witness every t
    std::vector<Monomial> witnesses;
    for (const auto& a : M.generators()) {
        bool inside = true;
        for (std::size_t i : a.support())
            if (b[i] == 0) { inside = false; break; }
        if (inside) witnesses.push_back(a);
    }

    // adversarial t over supp(b), each entry >= 1, with sum t_i b_i <= m
    std::vector<std::uint32_t> t(supp.size(), 1);
    while (true) {
        std::uint64_t load = 0;
        for (std::size_t k = 0; k < supp.size(); ++k) load += std::uint64_t{t[k]} * b[supp[k]];
        if (load <= m) {
            bool witnessed = false;
            for (const auto& a : witnesses) {
                std::uint64_t cost = 0;
                for (std::size_t k = 0; k < supp.size(); ++k) cost += std::uint64_t{t[k]} * a[supp[k]];
                if (cost <= m) { witnessed = true; break; }
            }
            if (!witnessed) return false;
        }
        // next t in the box [1..m]^supp
        std::size_t k = 0;
        while (k < supp.size() && t[k] == m) { t[k] = 1; ++k; }
        if (k == supp.size()) break;
        ++t[k];
    }
    return true;
}

ClosureResult jsc_monomial(const Ideal& I, std::uint32_t m) {
    if (!I.is_monomial_ideal())
        throw UnsupportedClassError("jsc_monomial: input is not a monomial ideal");
    const RingPtr& R = I.ring();
    const MonomialIdealView view = monomial_view(I.generators());

    std::vector<Monomial> passing = monomials_of_degree(R->size(), m + 1);
    for (std::uint32_t d = 1; d <= m; ++d)
        for (const auto& b : monomials_of_degree(R->size(), d))
            if (jsc_monomial_member(view, b, m)) passing.push_back(b);
    const MonomialIdealView closure_view{std::move(passing)};
    return detail::make_result(I, m, ClosureKind::jsc, "monomial-test", closure_view.to_polynomials(R));
}

ClosureResult jsc_monomial_oracle(const Ideal& I, std::uint32_t m, const ClosureOptions& options) {
    if (!I.is_monomial_ideal())
        throw UnsupportedClassError("jsc_monomial_oracle: input is not a monomial ideal");
    const RingPtr& R = I.ring();
    JetRing jets(R, m);

    const MonomialIdealView jet_radical = monomial_jet_radical(monomial_view(I.generators()), jets);
    std::vector<Monomial> modulus_gens = jet_radical.generators();
    for (std::size_t i = 0; i < R->size(); ++i) {
        Monomial order0(jets.ring()->size());
        order0[jets.var_index(i, 0)] = 1;
        modulus_gens.push_back(order0);
    }
    const MonomialIdealView modulus{std::move(modulus_gens)};

    std::vector<Polynomial> closure_gens = I.generators();
    for (const auto& mono : monomials_of_degree(R->size(), m + 1))
        closure_gens.emplace_back(R, mono, Rational(1));
    for (auto& k :
         detail::local_jet_kernel(jets, modulus.to_polynomials(jets.ring()), options.max_matrix_entries))
        closure_gens.push_back(std::move(k));
    return detail::make_result(I, m, ClosureKind::jsc, "radical-kernel", std::move(closure_gens));
}

ClosureResult jsc_homogeneous_reduced(const Polynomial& f, std::uint32_t m) {
    if (f.is_zero() || f.is_constant())
        throw UnsupportedClassError("jsc_homogeneous_reduced: constant input");
    if (!f.is_homogeneous())
        throw UnsupportedClassError("jsc_homogeneous_reduced: '" + f.str() + "' is not homogeneous");
    if (!squarefree_test(f))
        throw UnsupportedClassError("jsc_homogeneous_reduced: '" + f.str() + "' is not reduced");
    const Ideal I(f.ring(), {f});
    std::vector<Polynomial> gens = I.generators();
    for (const auto& mono : monomials_of_degree(f.ring()->size(), m + 1))
        gens.emplace_back(f.ring(), mono, Rational(1));
    return detail::make_result(I, m, ClosureKind::jsc, "reduced-homogeneous", std::move(gens));
}

ClosureResult jet_support_closure(const Ideal& I, std::uint32_t m, const ClosureOptions& options) {
    if (!I.has_generators()) {
        // sqrt of the zero jet ideal is zero; only m^(m+1) remains
        return detail::make_result(I, m, ClosureKind::jsc, "monomial-test",
                      maximal_ideal_power(I.ring(), m + 1).generators());
    }
    if (I.is_monomial_ideal()) return jsc_monomial(I, m);
    if (I.generators().size() == 1) {
        const Polynomial& f = I.generators().front();
        if (f.is_homogeneous() && squarefree_test(f)) return jsc_homogeneous_reduced(f, m);
        if (I.ring()->size() == 2) return jsc_weighted_bivariate(f, m, options);
    }
    throw UnsupportedClassError(
        "jet support closure is only computed for monomial ideals, reduced homogeneous forms, "
        "and weighted homogeneous bivariate forms");
}

bool is_good(const Ideal& I, std::uint32_t m, ClosureKind kind, const ClosureOptions& options) {
    return kind == ClosureKind::jc ? jet_closure(I, m, options).good
                                   : jet_support_closure(I, m, options).good;
}

std::uint64_t closure_dim(const Ideal& I, std::uint32_t m, ClosureKind kind,
                          const ClosureOptions& options) {
    return kind == ClosureKind::jc ? jet_closure(I, m, options).dim
                                   : jet_support_closure(I, m, options).dim;
}

} // namespace jetcl
