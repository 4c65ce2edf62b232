#include <gtest/gtest.h>

#include "gallagher/ergodic.hpp"
#include "oracle.hpp"
#include "support.hpp"

namespace gallagher {
namespace {

using testing::arc;
using testing::Gen;
using testing::pt;
using testing::q;

// Mismatch measure between preimage(t, s) and {y : t(y) in s}, with membership
// of the latter decided by applying t pointwise.
Rational preimage_mismatch(const AffineCircleMap& t, const ArcSet& s) {
  const ArcSet pre = preimage(t, s);
  std::vector<Rational> bp;
  const Rational n(Integer(static_cast<unsigned long>(t.multiplier)));
  for (const auto& iv : s.intervals()) {
    for (const Rational& e : {iv.lo, iv.hi}) {
      for (std::uint64_t k = 0; k < t.multiplier; ++k) bp.push_back((e - t.offset.value() + k) / n);
    }
  }
  for (const auto& iv : pre.intervals()) {
    bp.push_back(iv.lo);
    bp.push_back(iv.hi);
  }
  return oracle::segment_measure(bp, [&](const Rational& y) {
    const CirclePoint image = CirclePoint::normalize(n * y + t.offset.value());
    return s.contains(image) != pre.contains(CirclePoint::normalize(y));
  });
}

// Grid-cell invariance decided at the midpoints of a grid fine enough that
// both 1_S and 1_S o T are constant on each of its cells.
std::vector<std::uint32_t> brute_invariant_masks(const AffineCircleMap& t, std::uint32_t k) {
  const auto offset_den = t.offset.value().get_den().get_ui();
  const std::uint64_t fine = std::uint64_t{k} * t.multiplier * offset_den;
  std::vector<std::uint32_t> masks;
  for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
    auto member = [&](const Rational& v) {
      const auto cell = floor(Rational(oracle::frac(v) * k)).get_ui();
      return (mask >> cell) & 1u;
    };
    bool invariant = true;
    for (std::uint64_t j = 0; j < fine && invariant; ++j) {
      const Rational y = oracle::ratio(2 * j + 1, 2 * fine);
      const Rational ty = Rational(Integer(static_cast<unsigned long>(t.multiplier))) * y + t.offset.value();
      invariant = member(y) == member(ty);
    }
    if (invariant) masks.push_back(mask);
  }
  return masks;
}

TEST(AffineMap, Apply) {
  EXPECT_EQ(apply({2, pt(0)}, pt(3, 8)), pt(3, 4));
  EXPECT_EQ(apply({1, pt(0)}, pt(5, 11)), pt(5, 11));
  EXPECT_EQ(apply({3, pt(1, 2)}, pt(1, 6)), pt(0));
}

TEST(Preimage, Examples) {
  const ArcSet quarter = arc(0, 1, 1, 4);
  const ArcSet pre = preimage({2, pt(0)}, quarter);
  EXPECT_EQ(pre, set_union(arc(0, 1, 1, 8), arc(1, 2, 1, 8)));
  EXPECT_EQ(pre.measure(), q(1, 4));

  Gen gen(41);
  const ArcSet s = gen.arcset();
  EXPECT_EQ(preimage({1, pt(0)}, s), s);

  const AffineCircleMap t{3, pt(1, 3)};
  const ArcSet third = preimage(t, arc(0, 1, 1, 3));
  EXPECT_EQ(third.arcs().size(), 3u);
  for (const auto& a : third.arcs()) EXPECT_EQ(a.length, q(1, 9));
  EXPECT_EQ(third.measure(), q(1, 3));
  EXPECT_EQ(preimage_mismatch(t, arc(0, 1, 1, 3)), 0);

  EXPECT_THROW(preimage({0, pt(1, 2)}, quarter), std::invalid_argument);
}

TEST(Preimage, MeasurePreservingSelfCheck) {
  EXPECT_TRUE(is_measure_preserving_on({2, pt(0)}, std::vector<ArcSet>{arc(0, 1, 1, 4)}));
  Gen gen(42);
  std::vector<ArcSet> sample;
  for (int i = 0; i < 100; ++i) sample.push_back(gen.arcset());
  EXPECT_TRUE(is_measure_preserving_on({1, pt(1, 7)}, sample));
  EXPECT_TRUE(is_measure_preserving_on({5, pt(2, 3)}, sample));
  EXPECT_THROW(is_measure_preserving_on({0, pt(0)}, sample), std::invalid_argument);
}

TEST(PreimageProperty, AgreesWithPointwiseOracleAndCommutesWithBooleanOps) {
  Gen gen(43);
  for (int i = 0; i < 300; ++i) {
    const AffineCircleMap t{static_cast<std::uint64_t>(gen.integer(1, 6)), gen.point(12)};
    const ArcSet s = gen.arcset(3, 12);
    const ArcSet u = gen.arcset(3, 12);
    ASSERT_EQ(preimage_mismatch(t, s), 0);
    ASSERT_EQ(preimage(t, s).measure(), s.measure());
    ASSERT_EQ(preimage(t, complement(s)), complement(preimage(t, s)));
    ASSERT_EQ(preimage(t, set_union(s, u)), set_union(preimage(t, s), preimage(t, u)));
    ASSERT_EQ(preimage(t, intersection(s, u)), intersection(preimage(t, s), preimage(t, u)));
  }
}

TEST(Invariance, Examples) {
  const AffineCircleMap doubling{2, pt(0)};
  EXPECT_TRUE(is_invariant(doubling, ArcSet{}));
  EXPECT_TRUE(is_invariant(doubling, ArcSet::full()));
  EXPECT_FALSE(is_invariant(doubling, arc(0, 1, 1, 2)));
  EXPECT_EQ(preimage(doubling, arc(0, 1, 1, 2)), set_union(arc(0, 1, 1, 4), arc(1, 2, 1, 4)));
}

TEST(InvariantSetSearch, Examples) {
  const auto doubling = invariant_set_search({2, pt(0)}, 8);
  EXPECT_EQ(doubling, (std::vector<ArcSet>{ArcSet{}, ArcSet::full()}));
  EXPECT_EQ(brute_invariant_masks({2, pt(0)}, 8), (std::vector<std::uint32_t>{0u, 255u}));

  EXPECT_EQ(invariant_set_search({1, pt(0)}, 2).size(), 4u);

  const auto half_turn = invariant_set_search({1, pt(1, 2)}, 4);
  const std::vector<ArcSet> expected{ArcSet{}, set_union(arc(0, 1, 1, 4), arc(1, 2, 1, 4)),
                                     set_union(arc(1, 4, 1, 4), arc(3, 4, 1, 4)), ArcSet::full()};
  EXPECT_EQ(half_turn, expected);
  EXPECT_EQ(brute_invariant_masks({1, pt(1, 2)}, 4), (std::vector<std::uint32_t>{0u, 5u, 10u, 15u}));

  EXPECT_THROW(invariant_set_search({2, pt(0)}, 0), std::invalid_argument);
  EXPECT_THROW(invariant_set_search({2, pt(0)}, 21), std::invalid_argument);
}

TEST(InvariantSetSearch, AgreesWithMidpointOracle) {
  const std::vector<AffineCircleMap> maps{{2, pt(0)}, {3, pt(0)}, {2, pt(1, 2)}, {1, pt(1, 3)}, {1, pt(1, 4)},
                                          {3, pt(1, 2)}, {2, pt(1, 3)}, {4, pt(0)}};
  for (const auto& t : maps) {
    for (std::uint32_t k : {2u, 3u, 4u, 6u}) {
      const auto found = invariant_set_search(t, k, 1);
      const auto masks = brute_invariant_masks(t, k);
      ASSERT_EQ(found.size(), masks.size()) << t.multiplier << " " << to_string(t.offset) << " k=" << k;
      for (std::size_t i = 0; i < masks.size(); ++i) ASSERT_EQ(found[i], grid_cells(masks[i], k));
    }
  }
}

TEST(InvariantSetSearch, ResultIndependentOfWorkerCount) {
  const AffineCircleMap t{1, pt(1, 3)};
  const auto serial = invariant_set_search(t, 9, 1);
  EXPECT_EQ(invariant_set_search(t, 9, 3), serial);
  EXPECT_EQ(invariant_set_search(t, 9, 7), serial);
  EXPECT_EQ(serial.size(), 8u);  // unions of the three rotation orbits of cells
}

TEST(Conjugation, Examples) {
  const std::vector<CirclePoint> one{pt(1, 5)};
  EXPECT_TRUE(conjugation_check(3, pt(1, 2), one));
  Gen gen(44);
  std::vector<CirclePoint> sample;
  for (int i = 0; i < 50; ++i) sample.push_back(gen.point(100));
  EXPECT_TRUE(conjugation_check(2, pt(0), sample));
  EXPECT_TRUE(conjugation_check(5, pt(1, 3), sample));
  EXPECT_THROW(conjugation_check(1, pt(1, 3), sample), std::invalid_argument);
}

TEST(ConjugationProperty, HoldsAcrossMultipliersAndOffsets) {
  Gen gen(45);
  for (std::uint64_t n = 2; n <= 6; ++n) {
    for (int i = 0; i < 20; ++i) {
      const CirclePoint x = gen.point(60);
      std::vector<CirclePoint> ys;
      for (int j = 0; j < 20; ++j) ys.push_back(gen.point(60));
      ASSERT_TRUE(conjugation_check(n, x, ys));
    }
  }
}

}  // namespace
}  // namespace gallagher
