#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace gallagher {

/// Arbitrary-precision rational. Every value handled by the library is
/// kept canonical (lowest terms, positive denominator).
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p/q" or "p" (optional leading sign, no whitespace inside).
/// Throws std::invalid_argument on malformed input or zero denominator.
Rational parse_rational(std::string_view text);

/// "p/q", with "/q" omitted when q == 1.
std::string to_string(const Rational& r);

Integer floor(const Rational& r);
Rational abs(const Rational& r);
Rational min(const Rational& a, const Rational& b);
Rational max(const Rational& a, const Rational& b);

/// base^exponent for a non-negative integer exponent.
Rational pow(const Rational& base, std::uint64_t exponent);

Rational make_rational(std::int64_t num, std::int64_t den = 1);

/// Round-half-even decimal rendering with `digits` significant digits,
/// formatted like printf's %g (trailing zeros dropped, exponent form for
/// very large or very small magnitudes).
std::string to_decimal(const Rational& r, int digits = 12);

}  // namespace gallagher
