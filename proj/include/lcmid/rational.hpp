#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace lcmid {

using Integer = mpz_class;
using Rational = mpq_class;

/// Canonical num/den with den > 0. Throws StructuralError on a zero denominator.
Rational make_rational(long numerator, long denominator = 1);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);

/// Inverse of to_string. Accepts "p" or "p/q".
Rational parse_rational(std::string_view text);

inline bool is_zero(const Rational& value) { return sgn(value) == 0; }

}  // namespace lcmid
