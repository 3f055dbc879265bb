#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace eulerflag {

using Rational = mpq_class;

// Accepts /-?\d+(\/\d+)?/ and returns the canonical value. Throws ParseError.
Rational parse_rational(std::string_view text);

// "p/q" with q > 0 and gcd 1, integers without a denominator.
std::string to_string(const Rational& value);

Rational binomial(long n, long k);

inline int sign_power(long exponent) { return (exponent % 2 == 0) ? 1 : -1; }

}  // namespace eulerflag
