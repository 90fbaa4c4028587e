#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <string_view>

namespace ainf {

using Rational = mpq_class;

/// Parses "p/q" or "p" into a canonical rational. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" text ("p" when the denominator is 1).
std::string to_string(const Rational& r);

/// (-1)^e for any integer exponent.
constexpr int sign_of(long long e) { return (e & 1) ? -1 : 1; }

/// Sparse linear combination of basis elements; zero coefficients are never stored.
using Combination = std::map<int, Rational>;

void add_scaled(Combination& acc, const Combination& x, const Rational& c);
void add_term(Combination& acc, int index, const Rational& c);
Combination scaled(const Combination& x, const Rational& c);

}  // namespace ainf
