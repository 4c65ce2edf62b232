#include "gallagher/density.hpp"

#include <stdexcept>

namespace gallagher {

ArcSet ball(const BallSpec& b) {
  if (b.radius < 0) throw std::invalid_argument("ball radius must be >= 0");
  return thicken(std::span<const CirclePoint>(&b.center, 1), b.radius);
}

Rational ball_measure(const Rational& eps) { return min(Rational(1), Rational(2 * eps)); }

bool doubling_check(const Rational& eps) {
  if (eps <= 0) throw std::invalid_argument("doubling_check: eps must be > 0");
  return ball_measure(2 * eps) <= 2 * ball_measure(eps);
}

Rational density_ratio(const ArcSet& s, const CirclePoint& x, const Rational& eps) {
  if (eps <= 0) throw std::invalid_argument("density_ratio: eps must be > 0");
  const ArcSet b = ball({x, eps});
  return intersection(s, b).measure() / b.measure();
}

std::vector<std::pair<Rational, Rational>> density_profile(const ArcSet& s, const CirclePoint& x,
                                                           std::span<const Rational> schedule) {
  if (schedule.empty()) throw std::invalid_argument("density_profile: schedule is empty");
  std::vector<std::pair<Rational, Rational>> out;
  out.reserve(schedule.size());
  for (std::size_t i = 0; i < schedule.size(); ++i) {
    if (schedule[i] <= 0) throw std::invalid_argument("density_profile: radii must be positive");
    if (i > 0 && !(schedule[i] < schedule[i - 1])) {
      throw std::invalid_argument("density_profile: schedule must be strictly decreasing");
    }
    out.emplace_back(schedule[i], density_ratio(s, x, schedule[i]));
  }
  return out;
}

}  // namespace gallagher
