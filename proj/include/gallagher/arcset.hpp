#pragma once

#include <span>
#include <vector>

#include "gallagher/circle.hpp"
#include "gallagher/rational.hpp"

namespace gallagher {

/// Half-open arc {start + t : 0 <= t < length}, 0 < length <= 1.
struct Arc {
  CirclePoint start;
  Rational length;

  friend bool operator==(const Arc&, const Arc&) = default;
};

/// Half-open sub-interval [lo, hi) of [0, 1] used for the internal form.
struct Interval {
  Rational lo;
  Rational hi;

  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Finite union of half-open arcs of the circle in canonical form.
///
/// Internally the set is a sorted list of pairwise disjoint, non-adjacent
/// intervals [lo, hi) with 0 <= lo < hi <= 1; an arc crossing 0 is split
/// there. The arc view re-joins the wrapped piece, so two sets are equal
/// exactly when their interval lists are equal.
class ArcSet {
 public:
  ArcSet() = default;

  static ArcSet empty_set() { return {}; }
  static ArcSet full();

  /// Throws std::invalid_argument unless 0 < length <= 1.
  static ArcSet from_arc(const CirclePoint& start, const Rational& length);
  static ArcSet from_arcs(std::span<const Arc> arcs);

  /// Canonicalizes arbitrary intervals with 0 <= lo <= hi <= 1; empty ones are dropped.
  static ArcSet from_intervals(std::vector<Interval> intervals);

  const std::vector<Interval>& intervals() const { return intervals_; }

  /// Canonical arcs sorted by start, with the arc through 0 (if any) joined.
  std::vector<Arc> arcs() const;

  Rational measure() const;
  bool empty() const { return intervals_.empty(); }
  bool is_full() const;
  bool contains(const CirclePoint& x) const;
  bool subset_of(const ArcSet& other) const;

  friend bool operator==(const ArcSet&, const ArcSet&) = default;

 private:
  std::vector<Interval> intervals_;
};

ArcSet set_union(const ArcSet& s, const ArcSet& t);
ArcSet intersection(const ArcSet& s, const ArcSet& t);
ArcSet complement(const ArcSet& s);
ArcSet difference(const ArcSet& s, const ArcSet& t);

/// Union of many sets, canonicalized once.
ArcSet union_all(std::span<const ArcSet> sets);

inline Rational measure(const ArcSet& s) { return s.measure(); }

/// mu(s \ t) + mu(t \ s); zero exactly when s == t.
Rational symm_diff_measure(const ArcSet& s, const ArcSet& t);

ArcSet translate(const CirclePoint& a, const ArcSet& s);

/// Image {m y : y in s}. Requires m >= 1.
ArcSet scale_image(const Integer& m, const ArcSet& s);

/// Open delta-thickening of a finite point set, stored half-open as
/// [y - delta, y + delta). Empty when delta <= 0 or there are no points,
/// the full circle when delta >= 1/2.
ArcSet thicken(std::span<const CirclePoint> points, const Rational& delta);

}  // namespace gallagher
