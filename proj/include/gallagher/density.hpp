#pragma once

#include <span>
#include <utility>
#include <vector>

#include "gallagher/arcset.hpp"
#include "gallagher/circle.hpp"

namespace gallagher {

struct BallSpec {
  CirclePoint center;
  Rational radius;
};

/// Half-open arc [c - r, c + r) of measure min(1, 2r); empty for r == 0.
/// Throws std::invalid_argument for r < 0.
ArcSet ball(const BallSpec& b);

/// Haar measure of any ball of radius eps, min(1, 2 eps).
Rational ball_measure(const Rational& eps);

/// mu(B(x, 2 eps)) <= 2 mu(B(x, eps)). Rejects eps <= 0.
bool doubling_check(const Rational& eps);

/// mu(S ∩ B(x, eps)) / mu(B(x, eps)). Rejects eps <= 0.
Rational density_ratio(const ArcSet& s, const CirclePoint& x, const Rational& eps);

/// (eps, ratio) along a strictly decreasing positive schedule. Rejects an
/// empty or non-decreasing schedule.
std::vector<std::pair<Rational, Rational>> density_profile(const ArcSet& s, const CirclePoint& x,
                                                           std::span<const Rational> schedule);

}  // namespace gallagher
