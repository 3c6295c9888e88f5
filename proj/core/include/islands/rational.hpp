#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace islands {

using Rational = mpq_class;
using Coords = std::vector<Rational>;

// Parses "p/q" or "p" (optional leading '-'). Decimal points, exponents and
// zero denominators are rejected with PreconditionError.
Rational parse_rational(std::string_view text);

// Canonical "p/q" form, or "p" when the denominator is one.
std::string to_string(const Rational& value);

inline int sign(const Rational& value) { return sgn(value); }

}  // namespace islands
