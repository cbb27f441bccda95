#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace affinoid {

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
using Rational = mpq_class;

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);

/// Parses "p", "-p", "p/q" with optional surrounding whitespace. Throws
/// ParseError on anything else (including a zero denominator).
Rational parse_rational(std::string_view text);

}  // namespace affinoid
