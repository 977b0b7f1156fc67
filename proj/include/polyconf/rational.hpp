#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace polyconf {

// Canonical exact rational: denominator > 0, lowest terms, zero is 0/1.
// gmpxx keeps mpq_class canonical after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

// "num/den", or "num" when the denominator is 1.
std::string to_string(const Rational& value);

// Accepts "a" or "a/b" with optional leading sign. Throws ParseError on
// malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

inline bool is_zero(const Rational& value) { return sgn(value) == 0; }

}  // namespace polyconf
