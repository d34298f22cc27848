#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "jetcl/closures.hpp"

namespace jetcl {

/// Value of the jet-closure filtration: a natural number or infinity
/// (infinity exactly for elements of I, by arc closedness in the
/// Artinian case).
struct FiltrationValue {
    bool infinite = false;
    std::uint64_t value = 0;

    static FiltrationValue infinity() { return {true, 0}; }
    static FiltrationValue finite(std::uint64_t v) { return {false, v}; }

    friend bool operator==(const FiltrationValue& a, const FiltrationValue& b) {
        return a.infinite == b.infinite && (a.infinite || a.value == b.value);
    }
    /// min / >= with the convention infinity dominates.
    friend bool operator>=(const FiltrationValue& a, const FiltrationValue& b) {
        if (a.infinite) return true;
        if (b.infinite) return false;
        return a.value >= b.value;
    }
    std::string str() const { return infinite ? "inf" : std::to_string(value); }
};

struct JetIndexReport {
    Ideal ideal;
    std::uint64_t index = 0;
    std::uint64_t cap = 0;
    /// (m, dim_k R/I^{m-jc}) for each computed order; dims non-decreasing.
    std::vector<std::pair<std::uint32_t, std::uint64_t>> trace;
};

/// Default cap 2*dim_k(R/I) + 2 when none is given.
std::uint64_t default_cap(const Ideal& I);

/// Least m <= cap with I^{m-jc} = I; requires an Artinian quotient.
/// Throws ResourceLimitError when the cap is exhausted first.
JetIndexReport jet_index(const Ideal& I, std::optional<std::uint64_t> cap = std::nullopt,
                         const ClosureOptions& options = {});

/// Jacobian ideal (df/dx_1, ..., df/dx_n).
Ideal jacobian_ideal(const Polynomial& f);

/// jet index of J(f); requires an isolated singularity at the origin
/// (m^N inside J(f) for some N), checked via the finite staircase.
JetIndexReport jet_milnor_index(const Polynomial& f, std::optional<std::uint64_t> cap = std::nullopt,
                                const ClosureOptions& options = {});
/// jet index of (f) + J(f).
JetIndexReport jet_tjurina_index(const Polynomial& f, std::optional<std::uint64_t> cap = std::nullopt,
                                 const ClosureOptions& options = {});

/// dim_k R/J(f) for an isolated hypersurface singularity.
std::uint64_t milnor_number(const Polynomial& f);

/// f_I(g): 0 off the maximal ideal, infinity on I, otherwise m+1 for the
/// unique m with g in I^{m-jc} \ I^{(m+1)-jc}. Closures are computed
/// incrementally, reusing each order's basis as seed for the next.
FiltrationValue filtration_value(const Ideal& I, const Polynomial& g,
                                 std::optional<std::uint64_t> cap = std::nullopt,
                                 const ClosureOptions& options = {});

/// The homogenized filtration via the chain sqrt(I) + m^r; supported for
/// monomial ideals and principal homogeneous ideals.
FiltrationValue homogeneous_filtration_value(const Ideal& I, const Polynomial& g);

enum class ConjectureKind {
    WeightedJc,        // Conjecture 1.3: J(f)^{m-jc} = J(f) + m^(m+1)
    TjurinaNilpotency, // Conjecture 6.9: j_tau(f) + 1 = N(f, J(f))
};

struct ScanRecord {
    std::string poly;
    std::string verdict;             // "holds" / "counterexample" / "error"
    std::optional<std::string> witness;
    std::optional<std::string> error;
};

/// Per-item evidence table; never asserts a conjecture, only records.
/// Item failures are isolated into the record's error field.
std::vector<ScanRecord> conjecture_scan(ConjectureKind kind, const std::vector<Polynomial>& corpus,
                                        std::uint64_t cap, const ClosureOptions& options = {});

/// One record per line: f=<poly>\tverdict=<v>[\twitness=<w>][\terror=<e>]
std::string render_scan_records(const std::vector<ScanRecord>& records);

} // namespace jetcl
