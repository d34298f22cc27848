#include "jetcl/filtration.hpp"

#include <algorithm>
#include <sstream>

#include "jetcl/errors.hpp"
#include "jetcl/gcd.hpp"

namespace jetcl {

std::uint64_t default_cap(const Ideal& I) { return 2 * quotient_dimension(I) + 2; }

namespace {

// incremental chain of jet closures I^{0-jc}, I^{1-jc}, ... reusing each
// order's truncated jet basis as seed generators for the next
class ClosureChain {
public:
    ClosureChain(Ideal I, ClosureOptions options) : I_(std::move(I)), options_(options) {}

    const ClosureResult& at(std::uint32_t m) {
        while (steps_.size() <= m) {
            const auto next = static_cast<std::uint32_t>(steps_.size());
            const detail::JetClosureStep* prev = steps_.empty() ? nullptr : &steps_.back();
            steps_.push_back(detail::jet_closure_step(I_, next, options_, prev));
        }
        return steps_[m].result;
    }

private:
    Ideal I_;
    ClosureOptions options_;
    std::vector<detail::JetClosureStep> steps_;
};

std::uint64_t artinian_dimension(const Ideal& I, const char* who) {
    try {
        return quotient_dimension(I);
    } catch (const UnsupportedClassError&) {
        throw UnsupportedClassError(std::string(who) + ": quotient is not Artinian");
    }
}

// isolated singularity at the origin: m^N inside the ideal for some N,
// which is exactly when the global staircase equals the local dimension
std::uint64_t isolated_dimension(const Ideal& I, const char* who) {
    const std::uint64_t dim = artinian_dimension(I, who);
    if (!is_origin_primary(I))
        throw UnsupportedClassError(std::string(who) +
                                    ": no power of the maximal ideal lies in the ideal "
                                    "(zero locus is not the origin alone)");
    return dim;
}

} // namespace

JetIndexReport jet_index(const Ideal& I, std::optional<std::uint64_t> cap,
                         const ClosureOptions& options) {
    const std::uint64_t dim = artinian_dimension(I, "jet_index");
    const std::uint64_t limit = cap.value_or(2 * dim + 2);

    JetIndexReport report;
    report.ideal = I;
    report.cap = limit;
    ClosureChain chain(I, options);
    for (std::uint32_t m = 0; m <= limit; ++m) {
        const ClosureResult& r = chain.at(m);
        report.trace.emplace_back(m, r.dim);
        if (ideal_equal(r.closure, I)) {
            report.index = m;
            return report;
        }
    }
    throw ResourceLimitError("jet_index: not jet closed by cap " + std::to_string(limit));
}

Ideal jacobian_ideal(const Polynomial& f) {
    std::vector<Polynomial> gens;
    for (std::size_t i = 0; i < f.ring()->size(); ++i)
        gens.push_back(partial_derivative(f, i));
    return Ideal(f.ring(), std::move(gens));
}

JetIndexReport jet_milnor_index(const Polynomial& f, std::optional<std::uint64_t> cap,
                                const ClosureOptions& options) {
    const Ideal J = jacobian_ideal(f);
    isolated_dimension(J, "jet_milnor_index");
    return jet_index(J, cap, options);
}

JetIndexReport jet_tjurina_index(const Polynomial& f, std::optional<std::uint64_t> cap,
                                 const ClosureOptions& options) {
    Ideal T = ideal_sum(Ideal(f.ring(), {f}), jacobian_ideal(f));
    isolated_dimension(T, "jet_tjurina_index");
    return jet_index(T, cap, options);
}

std::uint64_t milnor_number(const Polynomial& f) {
    return isolated_dimension(jacobian_ideal(f), "milnor_number");
}

FiltrationValue filtration_value(const Ideal& I, const Polynomial& g,
                                 std::optional<std::uint64_t> cap, const ClosureOptions& options) {
    if (g.constant_term() != 0) return FiltrationValue::finite(0);
    if (I.contains(g)) return FiltrationValue::infinity();
    // the Artinian check guarantees termination when no cap is supplied;
    // an explicit cap stands on its own (errors out when exhausted)
    const std::uint64_t limit =
        cap ? *cap : 2 * artinian_dimension(I, "filtration_value") + 2;

    ClosureChain chain(I, options);
    for (std::uint32_t m = 0; m <= limit; ++m) {
        if (!chain.at(m).closure.contains(g))
            return FiltrationValue::finite(m); // g in I^{(m-1)-jc}, not in I^{m-jc}
    }
    throw ResourceLimitError("filtration_value: cap " + std::to_string(limit) + " exceeded");
}

FiltrationValue homogeneous_filtration_value(const Ideal& I, const Polynomial& g) {
    std::vector<Polynomial> radical_gens;
    if (I.is_monomial_ideal()) {
        radical_gens = monomial_view(I.generators()).radical().to_polynomials(I.ring());
    } else if (I.generators().size() == 1 && I.generators().front().is_homogeneous()) {
        radical_gens = {squarefree_part(I.generators().front())};
    } else {
        throw UnsupportedClassError(
            "homogeneous_filtration_value: radical only computed for monomial ideals and "
            "principal homogeneous ideals");
    }
    const Ideal root(I.ring(), std::move(radical_gens));
    if (g.constant_term() != 0) return FiltrationValue::finite(0);
    if (root.contains(g)) return FiltrationValue::infinity();
    const auto bound = static_cast<std::uint32_t>(g.degree() + 1);
    for (std::uint32_t r = 1; r <= bound; ++r) {
        if (!plus_maximal_power(root, r + 1).contains(g))
            return FiltrationValue::finite(r);
    }
    throw std::logic_error("homogeneous_filtration_value: no drop below the degree bound");
}

// --- conjecture scans ---------------------------------------------------

namespace {

// Positive weight vector making every exponent vector of f equal-weight,
// when one is determined (nullspace of the difference matrix has dimension
// zero or one); nullopt when no positive weights exist or the search is
// inconclusive.
std::optional<std::vector<Rational>> positive_weights(const Polynomial& f) {
    const std::size_t n = f.ring()->size();
    std::vector<std::vector<Rational>> rows;
    const auto& first = f.terms().front().first;
    for (const auto& [mono, c] : f.terms()) {
        std::vector<Rational> row(n);
        bool nonzero = false;
        for (std::size_t i = 0; i < n; ++i) {
            row[i] = Rational(static_cast<long>(mono[i]) - static_cast<long>(first[i]));
            if (row[i] != 0) nonzero = true;
        }
        if (nonzero) rows.push_back(std::move(row));
    }
    if (rows.empty()) { // single exponent vector: any positive weights work
        return std::vector<Rational>(n, Rational(1));
    }
    // Gaussian elimination to find the nullspace
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_col;
    for (std::size_t c = 0; c < n && rank < rows.size(); ++c) {
        std::size_t p = SIZE_MAX;
        for (std::size_t r = rank; r < rows.size(); ++r)
            if (rows[r][c] != 0) { p = r; break; }
        if (p == SIZE_MAX) continue;
        std::swap(rows[rank], rows[p]);
        const Rational inv = Rational(1) / rows[rank][c];
        for (auto& x : rows[rank]) x *= inv;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][c] == 0) continue;
            const Rational fac = rows[r][c];
            for (std::size_t k = 0; k < n; ++k) rows[r][k] -= fac * rows[rank][k];
        }
        pivot_col.push_back(c);
        ++rank;
    }
    if (rank == n) return std::nullopt;           // only the zero weight vector
    if (n - rank > 1) return std::nullopt;        // underdetermined; stay conservative
    std::size_t free_col = 0;
    while (std::find(pivot_col.begin(), pivot_col.end(), free_col) != pivot_col.end()) ++free_col;
    std::vector<Rational> w(n, Rational(0));
    w[free_col] = 1;
    for (std::size_t r = 0; r < rank; ++r) w[pivot_col[r]] = -rows[r][free_col];
    bool all_pos = true, all_neg = true;
    for (const auto& x : w) {
        if (x <= 0) all_pos = false;
        if (x >= 0) all_neg = false;
    }
    if (all_neg)
        for (auto& x : w) x = -x;
    else if (!all_pos)
        return std::nullopt;
    return w;
}

ScanRecord scan_weighted_jc(const Polynomial& f, std::uint64_t cap, const ClosureOptions& options) {
    ScanRecord rec;
    rec.poly = f.str();
    if (!positive_weights(f)) {
        rec.verdict = "error";
        rec.error = "not weighted homogeneous with positive weights";
        return rec;
    }
    const Ideal J = jacobian_ideal(f);
    ClosureChain chain(J, options);
    for (std::uint32_t m = 1; m <= cap; ++m) {
        const ClosureResult& r = chain.at(m);
        if (!r.good) {
            rec.verdict = "counterexample";
            for (const auto& g : r.closure.generators()) {
                if (!plus_maximal_power(J, m + 1).contains(g)) {
                    rec.witness = "m=" + std::to_string(m) + ": " + g.str();
                    break;
                }
            }
            return rec;
        }
    }
    rec.verdict = "holds";
    rec.witness = "m<=" + std::to_string(cap);
    return rec;
}

ScanRecord scan_tjurina_nilpotency(const Polynomial& f, std::uint64_t cap,
                                   const ClosureOptions& options) {
    ScanRecord rec;
    rec.poly = f.str();
    const Ideal T = ideal_sum(Ideal(f.ring(), {f}), jacobian_ideal(f));
    const std::uint64_t N = nilpotency_index(T);
    const JetIndexReport jt = jet_index(T, cap, options);
    rec.witness = "j_tau=" + std::to_string(jt.index) + ",N=" + std::to_string(N);
    rec.verdict = (jt.index + 1 == N) ? "holds" : "counterexample";
    return rec;
}

} // namespace

std::vector<ScanRecord> conjecture_scan(ConjectureKind kind, const std::vector<Polynomial>& corpus,
                                        std::uint64_t cap, const ClosureOptions& options) {
    std::vector<ScanRecord> out;
    out.reserve(corpus.size());
    for (const auto& f : corpus) {
        try {
            out.push_back(kind == ConjectureKind::WeightedJc
                              ? scan_weighted_jc(f, cap, options)
                              : scan_tjurina_nilpotency(f, cap, options));
        } catch (const std::exception& e) {
            ScanRecord rec;
            rec.poly = f.str();
            rec.verdict = "error";
            rec.error = e.what();
            out.push_back(std::move(rec));
        }
    }
    return out;
}

std::string render_scan_records(const std::vector<ScanRecord>& records) {
    std::ostringstream os;
    for (const auto& r : records) {
        os << "f=" << r.poly << "\tverdict=" << r.verdict;
        if (r.witness) os << "\twitness=" << *r.witness;
        if (r.error) os << "\terror=" << *r.error;
        os << "\n";
    }
    return os.str();
}

} // namespace jetcl
