#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace kpasep {

// Arbitrary-precision rational, always in lowest terms with a positive
// denominator (gmpxx canonicalizes arithmetic results; parse_rational
// canonicalizes parsed input).
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed input
/// or a zero denominator.
Rational parse_rational(std::string_view text);

/// Renders as "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& value);

Integer binomial(long n, long k);
Integer factorial(long n);

}  // namespace kpasep
