#pragma once

#include <gmpxx.h>

#include <string>

#include "jetcl/errors.hpp"

namespace jetcl {

// Exact rational coefficients. mpq_class keeps values canonical (lowest
// terms, denominator >= 1) as long as raw string assignment is followed by
// canonicalize(), which parse_rational takes care of.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rational(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/// Parses "p" or "p/q". Throws ParseError on malformed text or q = 0.
inline Rational parse_rational(const std::string& text) {
    Rational r;
    if (r.set_str(text, 10) != 0)
        throw ParseError("invalid rational literal '" + text + "'");
    if (r.get_den() == 0)
        throw ParseError("zero denominator in '" + text + "'");
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

} // namespace jetcl
