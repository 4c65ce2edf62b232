#include <gtest/gtest.h>

#include "gallagher/arcset.hpp"
#include "oracle.hpp"
#include "support.hpp"

namespace gallagher {
namespace {

using testing::arc;
using testing::Gen;
using testing::pt;
using testing::q;

// Membership and breakpoints of a raw arc list, independent of ArcSet.
struct RawSet {
  std::vector<Arc> arcs;

  bool operator()(const Rational& x) const {
    for (const auto& a : arcs) {
      if (oracle::in_raw_arc(x, a.start.value(), a.length)) return true;
    }
    return false;
  }
  void breakpoints(std::vector<Rational>& out) const {
    for (const auto& a : arcs) {
      out.push_back(a.start.value());
      out.push_back(a.start.value() + a.length);
    }
  }
};

void expect_canonical(const ArcSet& s) {
  const auto& iv = s.intervals();
  for (std::size_t i = 0; i < iv.size(); ++i) {
    ASSERT_LE(0, iv[i].lo);
    ASSERT_LT(iv[i].lo, iv[i].hi);
    ASSERT_LE(iv[i].hi, 1);
    if (i > 0) ASSERT_LT(iv[i - 1].hi, iv[i].lo) << "adjacent or overlapping pieces";
  }
  ASSERT_EQ(ArcSet::from_arcs(s.arcs()), s) << "re-canonicalising changed the set";
  ASSERT_EQ(ArcSet::from_intervals(iv), s);
}

TEST(ArcSet, BooleanExamples) {
  EXPECT_EQ(set_union(arc(0, 1, 1, 4), arc(1, 4, 1, 4)), arc(0, 1, 1, 2));
  EXPECT_EQ(intersection(arc(0, 1, 1, 2), arc(1, 4, 1, 2)), arc(1, 4, 1, 4));
  EXPECT_TRUE(complement(ArcSet{}).is_full());
  EXPECT_EQ(complement(ArcSet{}).measure(), 1);
  EXPECT_TRUE(complement(ArcSet::full()).empty());
  EXPECT_EQ(difference(arc(0, 1, 1, 2), arc(1, 4, 1, 2)), arc(0, 1, 1, 4));
}

TEST(ArcSet, Measure) {
  EXPECT_EQ(arc(0, 1, 1, 3).measure(), q(1, 3));
  EXPECT_EQ(ArcSet{}.measure(), 0);
  EXPECT_EQ(set_union(arc(0, 1, 1, 8), arc(1, 2, 1, 4)).measure(), q(3, 8));
  EXPECT_EQ(ArcSet::full().measure(), 1);
}

TEST(ArcSet, ArcValidation) {
  EXPECT_THROW(ArcSet::from_arc(pt(0), q(0)), std::invalid_argument);
  EXPECT_THROW(ArcSet::from_arc(pt(0), q(3, 2)), std::invalid_argument);
  EXPECT_THROW(ArcSet::from_intervals({{q(-1, 2), q(1, 2)}}), std::invalid_argument);
  EXPECT_TRUE(ArcSet::from_arc(pt(1, 3), q(1)).is_full());
}

TEST(ArcSet, WrapAroundArcIsJoinedInArcView) {
  const ArcSet s = arc(3, 4, 1, 2);  // [3/4, 1) u [0, 1/4)
  ASSERT_EQ(s.intervals().size(), 2u);
  const auto arcs = s.arcs();
  ASSERT_EQ(arcs.size(), 1u);
  EXPECT_EQ(arcs[0].start, pt(3, 4));
  EXPECT_EQ(arcs[0].length, q(1, 2));
  EXPECT_TRUE(s.contains(pt(0)));
  EXPECT_TRUE(s.contains(pt(3, 4)));
  EXPECT_FALSE(s.contains(pt(1, 4)));
}

TEST(ArcSet, SymmDiffMeasure) {
  EXPECT_EQ(symm_diff_measure(arc(0, 1, 1, 2), arc(0, 1, 1, 2)), 0);
  EXPECT_EQ(symm_diff_measure(arc(0, 1, 1, 2), arc(1, 2, 1, 2)), 1);

  const RawSet s{{{pt(0), q(1, 2)}}};
  const RawSet t{{{pt(1, 4), q(1, 2)}}};
  std::vector<Rational> bp;
  s.breakpoints(bp);
  t.breakpoints(bp);
  const Rational expected = oracle::segment_measure(bp, [&](const Rational& x) { return s(x) != t(x); });
  EXPECT_EQ(expected, q(1, 2));
  EXPECT_EQ(symm_diff_measure(arc(0, 1, 1, 2), arc(1, 4, 1, 2)), expected);
}

TEST(ArcSet, Translate) {
  EXPECT_EQ(translate(pt(1, 2), arc(0, 1, 1, 4)), arc(1, 2, 1, 4));
  const ArcSet s = set_union(arc(1, 8, 1, 8), arc(5, 8, 1, 4));
  EXPECT_EQ(translate(pt(0), s), s);
  EXPECT_EQ(translate(pt(3, 4), arc(1, 2, 1, 2)), arc(1, 4, 1, 2));
}

TEST(ArcSet, ScaleImage) {
  EXPECT_EQ(scale_image(2, arc(0, 1, 1, 4)), arc(0, 1, 1, 2));
  EXPECT_TRUE(scale_image(3, arc(0, 1, 1, 2)).is_full());
  EXPECT_THROW(scale_image(0, arc(0, 1, 1, 2)), std::invalid_argument);

  const RawSet source{{{pt(1, 3) - pt(1, 100), q(2, 100)}, {pt(2, 3) - pt(1, 100), q(2, 100)}}};
  const ArcSet image = scale_image(2, ArcSet::from_arcs(source.arcs));
  const ArcSet expected = set_union(ArcSet::from_arc(pt(2, 3) - pt(2, 100), q(4, 100)),
                                    ArcSet::from_arc(pt(1, 3) - pt(2, 100), q(4, 100)));
  EXPECT_EQ(image, expected);

  // oracle: x is in 2S iff x/2 or (x+1)/2 is in S
  std::vector<Rational> bp;
  for (const auto& iv : image.intervals()) {
    bp.push_back(iv.lo);
    bp.push_back(iv.hi);
  }
  for (const auto& a : source.arcs) {
    bp.push_back(2 * a.start.value());
    bp.push_back(2 * (a.start.value() + a.length));
  }
  const Rational mismatch = oracle::segment_measure(bp, [&](const Rational& x) {
    const bool in_image = source(x / 2) || source((x + 1) / 2);
    return in_image != image.contains(CirclePoint::normalize(x));
  });
  EXPECT_EQ(mismatch, 0);
  EXPECT_EQ(image.measure(), q(8, 100));
}

TEST(ArcSet, Thicken) {
  const std::vector<CirclePoint> origin{pt(0)};
  const ArcSet t = thicken(origin, q(1, 4));
  EXPECT_EQ(t, set_union(arc(3, 4, 1, 4), arc(0, 1, 1, 4)));
  EXPECT_EQ(t.measure(), q(1, 2));

  const std::vector<CirclePoint> third{pt(1, 3)};
  EXPECT_TRUE(thicken(third, q(0)).empty());
  EXPECT_TRUE(thicken(third, q(-1, 5)).empty());
  EXPECT_TRUE(thicken(third, q(1, 2)).is_full());
  EXPECT_TRUE(thicken(std::vector<CirclePoint>{}, q(1, 2)).empty());

  const std::vector<CirclePoint> two{pt(1, 4), pt(3, 4)};
  const ArcSet pair = thicken(two, q(1, 100));
  EXPECT_EQ(pair.arcs().size(), 2u);
  std::vector<Rational> bp;
  oracle::add_approx_order_breakpoints(bp, 4, q(1, 100));
  const Rational expected = oracle::segment_measure(bp, [](const Rational& x) {
    return oracle::circle_distance(x, q(1, 4)) < q(1, 100) || oracle::circle_distance(x, q(3, 4)) < q(1, 100);
  });
  EXPECT_EQ(expected, q(4, 100));
  EXPECT_EQ(pair.measure(), expected);
}

TEST(ArcSetProperty, MeasureMatchesOracle) {
  Gen gen(21);
  for (int i = 0; i < 1000; ++i) {
    const RawSet s{gen.raw_arcs(5)};
    const RawSet t{gen.raw_arcs(5)};
    const ArcSet cs = ArcSet::from_arcs(s.arcs);
    const ArcSet ct = ArcSet::from_arcs(t.arcs);
    expect_canonical(cs);
    std::vector<Rational> bp;
    s.breakpoints(bp);
    t.breakpoints(bp);
    ASSERT_EQ(cs.measure(), oracle::segment_measure(bp, s));
    ASSERT_EQ(set_union(cs, ct).measure(), oracle::segment_measure(bp, [&](auto& x) { return s(x) || t(x); }));
    ASSERT_EQ(intersection(cs, ct).measure(), oracle::segment_measure(bp, [&](auto& x) { return s(x) && t(x); }));
    ASSERT_EQ(difference(cs, ct).measure(), oracle::segment_measure(bp, [&](auto& x) { return s(x) && !t(x); }));
    ASSERT_EQ(complement(cs).measure(), oracle::segment_measure(bp, [&](auto& x) { return !s(x); }));
  }
}

TEST(ArcSetProperty, BooleanAlgebraLaws) {
  Gen gen(22);
  for (int i = 0; i < 1000; ++i) {
    const ArcSet a = gen.arcset();
    const ArcSet b = gen.arcset();
    const ArcSet c = gen.arcset();
    ASSERT_EQ(set_union(a, b), set_union(b, a));
    ASSERT_EQ(intersection(a, b), intersection(b, a));
    ASSERT_EQ(set_union(a, set_union(b, c)), set_union(set_union(a, b), c));
    ASSERT_EQ(intersection(a, intersection(b, c)), intersection(intersection(a, b), c));
    ASSERT_EQ(intersection(a, set_union(b, c)), set_union(intersection(a, b), intersection(a, c)));
    ASSERT_EQ(set_union(a, intersection(b, c)), intersection(set_union(a, b), set_union(a, c)));
    ASSERT_EQ(complement(set_union(a, b)), intersection(complement(a), complement(b)));
    ASSERT_EQ(complement(intersection(a, b)), set_union(complement(a), complement(b)));
    ASSERT_EQ(set_union(a, intersection(a, b)), a);
    ASSERT_EQ(intersection(a, set_union(a, b)), a);
    ASSERT_EQ(complement(complement(a)), a);
    expect_canonical(set_union(a, b));
    expect_canonical(intersection(a, b));
    expect_canonical(complement(a));
  }
}

TEST(ArcSetProperty, InclusionExclusionAndTranslationInvariance) {
  Gen gen(23);
  for (int i = 0; i < 1000; ++i) {
    const ArcSet a = gen.arcset();
    const ArcSet b = gen.arcset();
    ASSERT_EQ(set_union(a, b).measure() + intersection(a, b).measure(), a.measure() + b.measure());
    const CirclePoint shift = gen.point(30);
    const ArcSet moved = translate(shift, a);
    ASSERT_EQ(moved.measure(), a.measure());
    ASSERT_EQ(translate(neg(shift), moved), a);
    ASSERT_EQ(symm_diff_measure(a, b) == 0, a == b);
    expect_canonical(moved);
  }
}

TEST(ArcSetProperty, ThickeningIsMonotone) {
  Gen gen(24);
  for (int i = 0; i < 500; ++i) {
    std::vector<CirclePoint> points;
    for (auto k = gen.integer(1, 5); k > 0; --k) points.push_back(gen.point(20));
    const Rational d1 = gen.positive_unit(40) / 2;
    const Rational d2 = d1 + gen.unit(40) / 4;
    ASSERT_TRUE(thicken(points, d1).subset_of(thicken(points, d2)));
  }
}

TEST(ArcSetProperty, ScaleImageMatchesOracle) {
  Gen gen(25);
  for (int i = 0; i < 300; ++i) {
    const RawSet s{gen.raw_arcs(3, 12)};
    const auto m = gen.integer(1, 5);
    const ArcSet image = scale_image(m, ArcSet::from_arcs(s.arcs));
    expect_canonical(image);
    std::vector<Rational> bp;
    for (const auto& a : s.arcs) {
      bp.push_back(m * a.start.value());
      bp.push_back(m * (a.start.value() + a.length));
    }
    for (const auto& iv : image.intervals()) {
      bp.push_back(iv.lo);
      bp.push_back(iv.hi);
    }
    const Rational mismatch = oracle::segment_measure(bp, [&](const Rational& x) {
      bool in_image = false;
      for (std::int64_t k = 0; k < m && !in_image; ++k) in_image = s((x + k) / m);
      return in_image != image.contains(CirclePoint::normalize(x));
    });
    ASSERT_EQ(mismatch, 0);
  }
}

}  // namespace
}  // namespace gallagher
