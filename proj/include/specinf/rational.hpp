#pragma once

#include <gmpxx.h>

#include <string>

namespace specinf {

// Exact rational numbers. mpq_class keeps values canonicalized (lowest terms,
// positive denominator), which is exactly the invariant we need for map keys
// and golden output.
using Rational = mpq_class;

inline Rational rational(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Serialized as "p" or "p/q"; this is the one format used in all JSON output.
std::string to_string(const Rational& r);

// Parses "p" or "p/q". Throws SyntaxError on malformed input.
Rational parse_rational(const std::string& text);

// floor/ceil as integers (values are desk-scale, long is plenty).
long floor_long(const Rational& r);
long ceil_long(const Rational& r);

// Fractional part in [0,1).
Rational frac_part(const Rational& r);

} // namespace specinf
