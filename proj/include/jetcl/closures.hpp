#pragma once

#include <cstdint>
#include <string>

#include "jetcl/groebner.hpp"
#include "jetcl/jets.hpp"
#include "jetcl/monomial_ideal.hpp"

namespace jetcl {

enum class ClosureKind { jc, jsc };

struct ClosureOptions {
    std::uint64_t max_pairs = 200000;
    /// Kernel-matrix budget (rows x columns); exceeding it raises
    /// ResourceLimitError.
    std::uint64_t max_matrix_entries = 4000000;
};

/// Output of a closure computation. `closure` is normalized: its generator
/// list is the reduced degrevlex Groebner basis. Every closure contains
/// I + m^(m+1), so `dim` is finite and `good` means equality holds.
struct ClosureResult {
    Ideal input;
    std::uint32_t m = 0;
    ClosureKind kind = ClosureKind::jc;
    std::string method;
    Ideal closure;
    bool good = false;
    std::uint64_t dim = 0;
};

/// m-th jet closure by the linear-kernel method: one Groebner basis of the
/// at-origin jet ideal, then exact nullspace of the normal-form matrix over
/// the monomials of degree 1..m. Every jet closure contains m^(m+1), so
/// this finite-dimensional slice is decisive.
ClosureResult jet_closure(const Ideal& I, std::uint32_t m, const ClosureOptions& options = {});

/// Cross-check oracle emulating the appendix procedure: preimage of
/// (jet ideal, order-0 variables, t^(m+1)) under x_i -> sum x_i^(j) t^j,
/// computed by graph-ideal elimination. Intended for small m.
ClosureResult jet_closure_elim(const Ideal& I, std::uint32_t m, const ClosureOptions& options = {});

/// Jet support closure of a monomial ideal via the combinatorial
/// exponent-load membership test (no Groebner bases).
ClosureResult jsc_monomial(const Ideal& I, std::uint32_t m);

/// Membership test behind jsc_monomial, exposed for queries: does x^b lie
/// in the m-th jet support closure of the monomial ideal M?
bool jsc_monomial_member(const MonomialIdealView& M, const Monomial& b, std::uint32_t m);

/// Independent oracle: the truncated-jet kernel computed against the
/// square-free radical of the jet ideal. Must agree with jsc_monomial.
ClosureResult jsc_monomial_oracle(const Ideal& I, std::uint32_t m, const ClosureOptions& options = {});

/// (f) + m^(m+1): the closed form for reduced homogeneous f.
ClosureResult jsc_homogeneous_reduced(const Polynomial& f, std::uint32_t m);

/// Weighted homogeneous bivariate data: coprime positive weights (a, b)
/// with a*i + b*j = d across all exponent pairs (i, j) of the form.
struct WeightedForm {
    std::uint64_t weight_x = 0;
    std::uint64_t weight_y = 0;
    std::uint64_t weighted_degree = 0;
    Polynomial form;

    /// Infers the weights; throws UnsupportedClassError when f is not a
    /// weighted homogeneous bivariate polynomial with positive weights
    /// (single monomials are routed to the monomial path instead).
    static WeightedForm infer(const Polynomial& f);
};

/// Jet support closure of a weighted homogeneous bivariate form: the A_m
/// staircase construction for m < d, and the two-part intersection for
/// m >= d (which requires f reduced). Weights (1,1) dispatch to the
/// homogeneous path.
ClosureResult jsc_weighted_bivariate(const Polynomial& f, std::uint32_t m,
                                     const ClosureOptions& options = {});
ClosureResult jsc_weighted_bivariate(const WeightedForm& w, std::uint32_t m,
                                     const ClosureOptions& options = {});

/// Independent oracle for m < weighted degree: kernel of lambda_m with the
/// component intersection of the radical modulus.
ClosureResult jsc_weighted_oracle(const WeightedForm& w, std::uint32_t m,
                                  const ClosureOptions& options = {});

/// Routes to the supported jet-support-closure classes (monomial ideals,
/// reduced homogeneous forms, weighted homogeneous bivariate forms);
/// refuses anything else with UnsupportedClassError.
ClosureResult jet_support_closure(const Ideal& I, std::uint32_t m,
                                  const ClosureOptions& options = {});

bool is_good(const Ideal& I, std::uint32_t m, ClosureKind kind, const ClosureOptions& options = {});
std::uint64_t closure_dim(const Ideal& I, std::uint32_t m, ClosureKind kind,
                          const ClosureOptions& options = {});

/// Ideal whose generator list is the reduced degrevlex Groebner basis.
Ideal normalized(const Ideal& I);

namespace detail {

/// Kernel of the truncated local jet map: returns primitive integer
/// polynomials spanning { g in span(monomials of degree 1..m) :
/// every t-coefficient of the at-origin expansion of g reduces to zero
/// against `modulus` }. `modulus` must be a Groebner basis (or monomial
/// generating set) in the jet ring.
std::vector<Polynomial> local_jet_kernel(const JetRing& jets, const std::vector<Polynomial>& modulus,
                                          std::uint64_t max_matrix_entries = 4000000);

/// Normalizes the closure generators and fills in goodness and dimension.
ClosureResult make_result(const Ideal& input, std::uint32_t m, ClosureKind kind, std::string method,
                          std::vector<Polynomial> closure_gens);

/// One order of a jet-closure chain, exposing the truncated jet basis so
/// the next order can reuse it as seed generators (the order-m jet ideal
/// embeds in the order-(m+1) one).
struct JetClosureStep {
    ClosureResult result;
    JetRing jets;
    std::vector<Polynomial> jet_basis;
};

JetClosureStep jet_closure_step(const Ideal& I, std::uint32_t m, const ClosureOptions& options,
                                const JetClosureStep* previous = nullptr);

} // namespace detail

} // namespace jetcl
