#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace kmatch {

// All arithmetic in this library is exact. Integers are arbitrary-precision
// GMP integers and rationals are always kept in canonical form (lowest terms,
// positive denominator).
using Integer = mpz_class;
using Rational = mpq_class;

/// Builds a canonical rational from a numerator/denominator pair.
Rational make_rational(long numerator, long denominator = 1);
Rational make_rational(const Integer& numerator, const Integer& denominator);

/// Parses "p/q" or a bare integer literal. The input must already be in
/// lowest terms with q >= 1; anything else is rejected.
Rational rational_from_string(const std::string& text);

/// Formats as "p/q" with q >= 1 (integers render as "p/1").
std::string rational_to_string(const Rational& value);

bool is_integral(const Rational& value);

}  // namespace kmatch
