#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "gallagher/arcset.hpp"
#include "gallagher/circle.hpp"

namespace gallagher {

/// The circle map y -> n y + x.
struct AffineCircleMap {
  std::uint64_t multiplier = 1;
  CirclePoint offset;

  CirclePoint operator()(const CirclePoint& y) const;
};

inline CirclePoint apply(const AffineCircleMap& t, const CirclePoint& y) { return t(y); }

/// Exact T^{-1}(S): each arc [a, b) pulls back to the n arcs
/// [(a - x + k)/n, (b - x + k)/n), k = 0..n-1. Rejects n == 0.
ArcSet preimage(const AffineCircleMap& t, const ArcSet& s);

/// True when mu(T^{-1} S) == mu(S) for every sample set. Rejects n == 0.
bool is_measure_preserving_on(const AffineCircleMap& t, std::span<const ArcSet> sample);

bool is_invariant(const AffineCircleMap& t, const ArcSet& s);

/// Union of the grid cells [j/k, (j+1)/k) whose bit j is set in mask.
ArcSet grid_cells(std::uint32_t mask, std::uint32_t k);

/// Every union of grid cells [j/k, (j+1)/k) with T^{-1}(S) == S, ordered by
/// cell bitmask (bit j <-> cell j). Requires 1 <= k <= 20. `workers` == 0
/// means one per hardware thread; the result does not depend on it.
std::vector<ArcSet> invariant_set_search(const AffineCircleMap& t, std::uint32_t k, unsigned workers = 0);

/// Checks e(g(e^{-1}(y))) == n y for every sample y, where g(y) = n y + x and
/// e is translation by [x / (n - 1)]. Rejects n < 2.
bool conjugation_check(std::uint64_t n, const CirclePoint& x, std::span<const CirclePoint> sample);

}  // namespace gallagher
