#pragma once

#include <optional>

#include "jetcl/polynomial.hpp"

namespace jetcl {

/// Exact quotient p / q, or nullopt when q does not divide p.
std::optional<Polynomial> exact_divide(const Polynomial& p, const Polynomial& q);

/// Multivariate gcd over Q, computed by recursive content/primitive-part
/// extraction with subresultant pseudo-remainder sequences in the main
/// variable. Result is primitive with positive leading coefficient
/// (constant gcds are normalized to 1).
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);

/// True iff p has no repeated irreducible factor, decided in
/// characteristic 0 by gcd(p, dp/dx_1, ..., dp/dx_n) being constant.
/// Throws UnsupportedClassError for constant input.
bool squarefree_test(const Polynomial& p);

/// p divided by gcd(p, all partials): generates sqrt((p)).
Polynomial squarefree_part(const Polynomial& p);

} // namespace jetcl
