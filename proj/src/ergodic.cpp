#include "gallagher/ergodic.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

namespace gallagher {

namespace {

Rational from_u64(std::uint64_t v) { return Rational(Integer(static_cast<unsigned long>(v))); }

void require_nonconstant(const AffineCircleMap& t) {
  if (t.multiplier == 0) throw std::invalid_argument("the map y -> 0*y + x is constant; multiplier must be >= 1");
}

}  // namespace

CirclePoint AffineCircleMap::operator()(const CirclePoint& y) const {
  return CirclePoint::normalize(from_u64(multiplier) * y.value() + offset.value());
}

ArcSet preimage(const AffineCircleMap& t, const ArcSet& s) {
  require_nonconstant(t);
  const Rational n = from_u64(t.multiplier);
  std::vector<Arc> pulled;
  pulled.reserve(s.intervals().size() * t.multiplier);
  for (const auto& iv : s.intervals()) {
    const Rational shifted = CirclePoint::normalize(iv.lo - t.offset.value()).value();
    const Rational length = (iv.hi - iv.lo) / n;
    for (std::uint64_t k = 0; k < t.multiplier; ++k) {
      pulled.push_back({CirclePoint::normalize((shifted + from_u64(k)) / n), length});
    }
  }
  return ArcSet::from_arcs(pulled);
}

bool is_measure_preserving_on(const AffineCircleMap& t, std::span<const ArcSet> sample) {
  require_nonconstant(t);
  return std::all_of(sample.begin(), sample.end(),
                     [&](const ArcSet& s) { return preimage(t, s).measure() == s.measure(); });
}

bool is_invariant(const AffineCircleMap& t, const ArcSet& s) { return preimage(t, s) == s; }

ArcSet grid_cells(std::uint32_t mask, std::uint32_t k) {
  std::vector<Interval> cells;
  const Rational width(1, k);
  for (std::uint32_t j = 0; j < k; ++j) {
    if (mask & (1u << j)) cells.push_back({Rational(j) * width, Rational(j + 1) * width});
  }
  return ArcSet::from_intervals(std::move(cells));
}

std::vector<ArcSet> invariant_set_search(const AffineCircleMap& t, std::uint32_t k, unsigned workers) {
  require_nonconstant(t);
  if (k < 1 || k > 20) throw std::invalid_argument("grid denominator must satisfy 1 <= k <= 20");
  const std::uint64_t total = std::uint64_t{1} << k;
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, total));

  std::vector<std::vector<ArcSet>> found(workers);
  auto scan = [&](unsigned w) {
    const std::uint64_t begin = total * w / workers;
    const std::uint64_t end = total * (w + 1) / workers;
    for (std::uint64_t mask = begin; mask < end; ++mask) {
      ArcSet s = grid_cells(static_cast<std::uint32_t>(mask), k);
      if (is_invariant(t, s)) found[w].push_back(std::move(s));
    }
  };
  if (workers == 1) {
    scan(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(scan, w);
  }

  std::vector<ArcSet> out;
  for (auto& chunk : found) std::move(chunk.begin(), chunk.end(), std::back_inserter(out));
  return out;
}

bool conjugation_check(std::uint64_t n, const CirclePoint& x, std::span<const CirclePoint> sample) {
  if (n < 2) throw std::invalid_argument("conjugation_check: n must be >= 2 (x / (n - 1) is undefined otherwise)");
  const CirclePoint shift = CirclePoint::normalize(x.value() / from_u64(n - 1));
  const AffineCircleMap f{n, CirclePoint{}};
  const AffineCircleMap g{n, x};
  return std::all_of(sample.begin(), sample.end(), [&](const CirclePoint& y) {
    const CirclePoint conjugated = shift + g(y - shift);
    return conjugated == f(y);
  });
}

}  // namespace gallagher
