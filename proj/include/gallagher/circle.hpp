#pragma once

#include <cstdint>
#include <string>

#include "gallagher/rational.hpp"

namespace gallagher {

/// A point of the circle R/Z, stored as its unique representative in [0, 1).
class CirclePoint {
 public:
  CirclePoint() = default;

  /// Reduces any rational modulo 1.
  static CirclePoint normalize(const Rational& r);
  static CirclePoint parse(std::string_view text) { return normalize(parse_rational(text)); }

  const Rational& value() const { return value_; }

  /// Distance to the nearest integer, min(v, 1 - v). Always in [0, 1/2].
  Rational norm() const;

  /// Additive order: the reduced denominator of the representative.
  Integer add_order() const { return value_.get_den(); }

  CirclePoint operator+(const CirclePoint& other) const { return normalize(value_ + other.value_); }
  CirclePoint operator-(const CirclePoint& other) const { return normalize(value_ - other.value_); }
  CirclePoint operator-() const { return normalize(-value_); }

  friend bool operator==(const CirclePoint& a, const CirclePoint& b) { return a.value_ == b.value_; }
  friend bool operator<(const CirclePoint& a, const CirclePoint& b) { return a.value_ < b.value_; }

 private:
  explicit CirclePoint(Rational canonical) : value_(std::move(canonical)) {}

  Rational value_ = 0;
};

inline CirclePoint normalize(const Rational& r) { return CirclePoint::normalize(r); }
inline Rational norm(const CirclePoint& x) { return x.norm(); }
inline Integer add_order_of(const CirclePoint& x) { return x.add_order(); }
inline CirclePoint add(const CirclePoint& x, const CirclePoint& y) { return x + y; }
inline CirclePoint neg(const CirclePoint& x) { return -x; }

CirclePoint scalar_mul(const Integer& m, const CirclePoint& x);

/// Distance from x to the nearest point of order exactly n, i.e. the nearest
/// reduced fraction m/n. Scans all phi(n) candidates. Requires n >= 1.
Rational dist_to_order_n(const CirclePoint& x, std::uint64_t n);

inline std::string to_string(const CirclePoint& x) { return to_string(x.value()); }

}  // namespace gallagher
