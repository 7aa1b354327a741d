#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace graphdep {

using Rational = mpq_class;

/// Parses "p/q", an integer, or a decimal literal such as "2.5" or "1e-3"
/// into an exact rational. Throws InputError on anything else.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" form, or "p" when the denominator is one.
std::string to_string(const Rational& value);

double to_double(const Rational& value);

/// Exact square root when `value` is the square of a rational.
std::optional<Rational> exact_sqrt(const Rational& value);

}  // namespace graphdep
