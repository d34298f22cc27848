#pragma once

#include <string>
#include <vector>

#include "jetcl/polynomial.hpp"

namespace jetcl {

/// Parses the polynomial grammar shared by the CLI and tests:
/// identifiers, operators + - * ^, integer and p/q rational coefficients,
/// parentheses; implicit multiplication is not allowed.
/// Example: `x^2 - 3/2*x*y + y^3`.
Polynomial parse_polynomial(const std::string& text, const RingPtr& ring);

/// Comma-separated generator list in the same grammar.
std::vector<Polynomial> parse_generators(const std::string& text, const RingPtr& ring);

/// Comma-separated variable names, e.g. "x,y".
RingPtr parse_ring(const std::string& text);

} // namespace jetcl
