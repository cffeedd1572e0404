#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace icat {

/// Exact rational scalar used throughout the library.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "a", "-a" or "a/b" into a canonicalized rational. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// Formats as "a" when the denominator is one, else "a/b".
std::string to_string(const Rational& value);

inline bool is_zero(const Rational& value) { return sgn(value) == 0; }

/// Numerator/denominator height max(|num|, den).
Integer height(const Rational& value);

}  // namespace icat
