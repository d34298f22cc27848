#pragma once

#include <stdexcept>
#include <string>

namespace jetcl {

/// Input text does not conform to the polynomial grammar.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// The requested computation is refused for this input class
/// (e.g. jet support closure of a general non-monomial ideal, or an
/// infinite-dimensional quotient where an Artinian one is required).
struct UnsupportedClassError : std::runtime_error {
    explicit UnsupportedClassError(const std::string& what) : std::runtime_error(what) {}
};

/// A configured resource cap (S-pair budget, matrix size) was exceeded.
/// Always an explicit error, never a silently wrong answer.
struct ResourceLimitError : std::runtime_error {
    explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace jetcl
