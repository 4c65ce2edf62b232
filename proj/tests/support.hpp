#pragma once

// Random generators for the property tests. Fixed seeds keep every run
// reproducible.

#include <cstdint>
#include <random>
#include <vector>

#include "gallagher/arcset.hpp"
#include "gallagher/circle.hpp"

namespace gallagher::testing {

inline Rational q(std::int64_t num, std::int64_t den = 1) { return make_rational(num, den); }
inline CirclePoint pt(std::int64_t num, std::int64_t den = 1) { return CirclePoint::normalize(q(num, den)); }
inline ArcSet arc(std::int64_t sn, std::int64_t sd, std::int64_t ln, std::int64_t ld) {
  return ArcSet::from_arc(pt(sn, sd), q(ln, ld));
}

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::int64_t integer(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
  }

  /// Rational in [0, 1) with denominator at most max_den.
  Rational unit(std::int64_t max_den = 24) {
    const auto den = integer(1, max_den);
    return q(integer(0, den - 1), den);
  }

  /// Rational in (0, 1] with denominator at most max_den.
  Rational positive_unit(std::int64_t max_den = 24) {
    const auto den = integer(1, max_den);
    return q(integer(1, den), den);
  }

  CirclePoint point(std::int64_t max_den = 24) { return CirclePoint::normalize(unit(max_den)); }

  /// Any rational in [-range, range] with denominator at most max_den.
  Rational rational(std::int64_t range = 3, std::int64_t max_den = 24) {
    const auto den = integer(1, max_den);
    return q(integer(-range * den, range * den), den);
  }

  /// Raw (possibly overlapping) arcs; sometimes empty, occasionally full.
  std::vector<Arc> raw_arcs(int max_arcs = 4, std::int64_t max_den = 16) {
    std::vector<Arc> out;
    const auto count = integer(0, max_arcs);
    for (std::int64_t i = 0; i < count; ++i) {
      const auto den = integer(1, max_den);
      const auto len = integer(1, integer(0, 9) == 0 ? den : std::max<std::int64_t>(1, den / 3));
      out.push_back({point(max_den), q(len, den)});
    }
    return out;
  }

  ArcSet arcset(int max_arcs = 4, std::int64_t max_den = 16) {
    const auto arcs = raw_arcs(max_arcs, max_den);
    return ArcSet::from_arcs(arcs);
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace gallagher::testing
