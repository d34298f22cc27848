#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "jetcl/closures.hpp"

namespace jetcl {

enum class AdeFamily { A, D, E };

/// A simple plane-curve singularity with both defining conventions: the
/// A-series is stored as x^2 + y^(n+1) and, coordinate-swapped, as
/// x^(n+1) + y^2; D and E agree in both. The subscript is the Milnor
/// number. Dimension sequences are convention-independent.
struct AdeType {
    AdeFamily family = AdeFamily::A;
    unsigned subscript = 1;
    Polynomial poly;        // x^2 + y^(n+1) convention
    Polynomial poly_swapped;
    unsigned milnor = 1;

    std::string name() const;
};

/// The shared catalog ring k[[x, y]].
const RingPtr& catalog_ring();

/// A_n (n >= 1), D_n (n >= 4), E_6/E_7/E_8.
AdeType make_ade(AdeFamily family, unsigned subscript);
/// Parses "A3", "D5", "E6"-style names.
std::optional<AdeType> ade_by_name(const std::string& name);

/// All catalog members with Milnor number <= max_milnor.
std::vector<AdeType> simple_curve_catalog(unsigned max_milnor = 8);

/// Closed-form m-th jet closure where one is known; never extrapolated
/// beyond the established ranges.
std::optional<Ideal> expected_jc(const AdeType& t, std::uint32_t m);

/// Printed jet-support-closure dimension (closed forms plus the E-type
/// table); "unknown" outside stated ranges.
std::optional<std::uint64_t> expected_jsc_dim(const AdeType& t, std::uint32_t m);

/// Printed jet-support-closure ideal where cleanly stated.
std::optional<Ideal> expected_jsc_ideal(const AdeType& t, std::uint32_t m);

/// dim_k R/I^{m-jsc} for m = 1..up_to, computed via the closures module.
std::vector<std::uint64_t> jsc_dim_sequence(const AdeType& t, std::uint32_t up_to,
                                            const ClosureOptions& options = {});

enum class ClassifyVerdict { Isomorphic, Distinct, Inconclusive };

/// Inputs must match catalog defining ideals (either convention); compares
/// jet-support-closure dimension sequences up to max(Milnor numbers) + 1,
/// which distinguish all simple curve singularities.
ClassifyVerdict classify(const Ideal& I1, const Ideal& I2, unsigned max_milnor = 8,
                         const ClosureOptions& options = {});

/// Catalog member whose defining ideal equals I (either convention).
std::optional<AdeType> match_catalog(const Ideal& I, unsigned max_milnor = 8);

} // namespace jetcl
