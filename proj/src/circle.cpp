#include "gallagher/circle.hpp"

#include <numeric>
#include <optional>
#include <stdexcept>

namespace gallagher {

CirclePoint CirclePoint::normalize(const Rational& r) {
  Rational v = r - Rational(floor(r));
  v.canonicalize();
  return CirclePoint(std::move(v));
}

Rational CirclePoint::norm() const { return min(value_, Rational(1 - value_)); }

CirclePoint scalar_mul(const Integer& m, const CirclePoint& x) {
  return CirclePoint::normalize(Rational(m) * x.value());
}

Rational dist_to_order_n(const CirclePoint& x, std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("dist_to_order_n: n must be >= 1");
  std::optional<Rational> best;
  for (std::uint64_t m = 0; m < n; ++m) {
    if (std::gcd(m, n) != 1) continue;
    const Rational candidate(Integer(std::to_string(m)), Integer(std::to_string(n)));
    Rational d = (x - CirclePoint::normalize(candidate)).norm();
    if (!best || d < *best) best = std::move(d);
    if (*best == 0) break;
  }
  return *best;
}

}  // namespace gallagher
