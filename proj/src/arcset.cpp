#include "gallagher/arcset.hpp"

#include <algorithm>
#include <stdexcept>

namespace gallagher {

namespace {

void push_arc(std::vector<Interval>& out, const CirclePoint& start, const Rational& length) {
  const Rational& lo = start.value();
  Rational hi = lo + length;
  if (hi <= 1) {
    out.push_back({lo, std::move(hi)});
  } else {
    out.push_back({lo, Rational(1)});
    out.push_back({Rational(0), Rational(hi - 1)});
  }
}

// Sort and merge overlapping or touching intervals.
std::vector<Interval> canonicalize(std::vector<Interval> in) {
  std::erase_if(in, [](const Interval& i) { return !(i.lo < i.hi); });
  std::sort(in.begin(), in.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  std::vector<Interval> out;
  out.reserve(in.size());
  for (auto& iv : in) {
    if (!out.empty() && iv.lo <= out.back().hi) {
      if (out.back().hi < iv.hi) out.back().hi = std::move(iv.hi);
    } else {
      out.push_back(std::move(iv));
    }
  }
  return out;
}

}  // namespace

ArcSet ArcSet::full() {
  ArcSet s;
  s.intervals_.push_back({Rational(0), Rational(1)});
  return s;
}

ArcSet ArcSet::from_arc(const CirclePoint& start, const Rational& length) {
  const Arc arc{start, length};
  return from_arcs(std::span<const Arc>(&arc, 1));
}

ArcSet ArcSet::from_arcs(std::span<const Arc> arcs) {
  std::vector<Interval> raw;
  raw.reserve(arcs.size() + 1);
  for (const auto& arc : arcs) {
    if (arc.length <= 0 || arc.length > 1) {
      throw std::invalid_argument("arc length must satisfy 0 < length <= 1, got " + to_string(arc.length));
    }
    push_arc(raw, arc.start, arc.length);
  }
  ArcSet s;
  s.intervals_ = canonicalize(std::move(raw));
  return s;
}

ArcSet ArcSet::from_intervals(std::vector<Interval> intervals) {
  for (const auto& iv : intervals) {
    if (iv.lo < 0 || iv.hi > 1 || iv.hi < iv.lo) {
      throw std::invalid_argument("interval [" + to_string(iv.lo) + ", " + to_string(iv.hi) +
                                  ") is not inside [0, 1]");
    }
  }
  ArcSet s;
  s.intervals_ = canonicalize(std::move(intervals));
  return s;
}

std::vector<Arc> ArcSet::arcs() const {
  std::vector<Arc> out;
  if (intervals_.empty()) return out;
  const bool wraps = intervals_.size() >= 2 && intervals_.front().lo == 0 && intervals_.back().hi == 1;
  const std::size_t first = wraps ? 1 : 0;
  const std::size_t last = wraps ? intervals_.size() - 1 : intervals_.size();
  for (std::size_t i = first; i < last; ++i) {
    out.push_back({CirclePoint::normalize(intervals_[i].lo), intervals_[i].hi - intervals_[i].lo});
  }
  if (wraps) {
    const auto& tail = intervals_.back();
    out.push_back({CirclePoint::normalize(tail.lo), (1 - tail.lo) + intervals_.front().hi});
  }
  return out;
}

Rational ArcSet::measure() const {
  Rational total = 0;
  for (const auto& iv : intervals_) total += iv.hi - iv.lo;
  return total;
}

bool ArcSet::is_full() const {
  return intervals_.size() == 1 && intervals_[0].lo == 0 && intervals_[0].hi == 1;
}

bool ArcSet::contains(const CirclePoint& x) const {
  const Rational& v = x.value();
  auto it = std::upper_bound(intervals_.begin(), intervals_.end(), v,
                             [](const Rational& value, const Interval& iv) { return value < iv.lo; });
  if (it == intervals_.begin()) return false;
  --it;
  return v < it->hi;
}

bool ArcSet::subset_of(const ArcSet& other) const { return difference(*this, other).empty(); }

ArcSet set_union(const ArcSet& s, const ArcSet& t) {
  std::vector<Interval> all(s.intervals());
  all.insert(all.end(), t.intervals().begin(), t.intervals().end());
  return ArcSet::from_intervals(std::move(all));
}

ArcSet union_all(std::span<const ArcSet> sets) {
  std::vector<Interval> all;
  for (const auto& s : sets) all.insert(all.end(), s.intervals().begin(), s.intervals().end());
  return ArcSet::from_intervals(std::move(all));
}

ArcSet intersection(const ArcSet& s, const ArcSet& t) {
  const auto& a = s.intervals();
  const auto& b = t.intervals();
  std::vector<Interval> out;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    const Rational& lo = a[i].lo < b[j].lo ? b[j].lo : a[i].lo;
    const Rational& hi = a[i].hi < b[j].hi ? a[i].hi : b[j].hi;
    if (lo < hi) out.push_back({lo, hi});
    if (a[i].hi < b[j].hi) {
      ++i;
    } else {
      ++j;
    }
  }
  return ArcSet::from_intervals(std::move(out));
}

ArcSet complement(const ArcSet& s) {
  std::vector<Interval> out;
  Rational cursor = 0;
  for (const auto& iv : s.intervals()) {
    if (cursor < iv.lo) out.push_back({cursor, iv.lo});
    cursor = iv.hi;
  }
  if (cursor < 1) out.push_back({cursor, Rational(1)});
  return ArcSet::from_intervals(std::move(out));
}

ArcSet difference(const ArcSet& s, const ArcSet& t) { return intersection(s, complement(t)); }

Rational symm_diff_measure(const ArcSet& s, const ArcSet& t) {
  return difference(s, t).measure() + difference(t, s).measure();
}

ArcSet translate(const CirclePoint& a, const ArcSet& s) {
  std::vector<Arc> moved;
  moved.reserve(s.intervals().size());
  for (const auto& iv : s.intervals()) {
    moved.push_back({CirclePoint::normalize(iv.lo + a.value()), iv.hi - iv.lo});
  }
  return ArcSet::from_arcs(moved);
}

ArcSet scale_image(const Integer& m, const ArcSet& s) {
  if (m < 1) throw std::invalid_argument("scale_image: multiplier must be >= 1");
  std::vector<Arc> images;
  images.reserve(s.intervals().size());
  const Rational factor(m);
  for (const auto& iv : s.intervals()) {
    images.push_back({CirclePoint::normalize(factor * iv.lo), min(Rational(1), Rational(factor * (iv.hi - iv.lo)))});
  }
  return ArcSet::from_arcs(images);
}

ArcSet thicken(std::span<const CirclePoint> points, const Rational& delta) {
  if (delta <= 0 || points.empty()) return {};
  if (delta * 2 >= 1) return ArcSet::full();
  std::vector<Arc> arcs;
  arcs.reserve(points.size());
  const Rational diameter = 2 * delta;
  for (const auto& y : points) arcs.push_back({CirclePoint::normalize(y.value() - delta), diameter});
  return ArcSet::from_arcs(arcs);
}

}  // namespace gallagher
