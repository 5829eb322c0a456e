#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace esg {

// Exact rational number. mpq_class keeps values canonical (reduced, positive
// denominator) after every arithmetic operation.
using Rational = mpq_class;

// Accepts "p", "p/q" (q != 0) and finite decimals such as "-12.375".
// Decimals convert exactly (denominator a power of ten). Throws
// Error{InvalidArgument} on anything else.
Rational parse_rational(std::string_view text);

// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& value);

double to_double(const Rational& value);

inline int sign(const Rational& value) { return sgn(value); }

}  // namespace esg
