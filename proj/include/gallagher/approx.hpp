#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "gallagher/arcset.hpp"
#include "gallagher/circle.hpp"
#include "gallagher/numtheory.hpp"

namespace gallagher {

/// delta_n = c * n^(-a).
struct PowerDelta {
  Rational c;
  std::uint64_t a = 0;
};

/// delta_n = c for every n.
struct ConstantDelta {
  Rational c;
};

/// delta_n = values[n - 1]; indices past the end evaluate to 0.
struct TableDelta {
  std::vector<Rational> values;
};

/// Rational-valued radius sequence n -> delta_n, defined for every n >= 1.
class DeltaSequence {
 public:
  using Variant = std::variant<PowerDelta, ConstantDelta, TableDelta>;

  /// Throws std::invalid_argument unless c > 0.
  static DeltaSequence power(Rational c, std::uint64_t a);
  static DeltaSequence constant(Rational c) { return DeltaSequence(ConstantDelta{std::move(c)}); }
  static DeltaSequence table(std::vector<Rational> values) { return DeltaSequence(TableDelta{std::move(values)}); }

  /// Inline forms: "power:C:A", "constant:C", "table:V1,V2,...", or a bare
  /// rational which is read as a constant sequence.
  static DeltaSequence parse_inline(std::string_view text);

  /// Requires n >= 1.
  Rational at(std::uint64_t n) const;

  /// The sequence M * delta_n.
  DeltaSequence scaled(const Rational& factor) const;

  const Variant& variant() const { return value_; }
  std::string describe() const;

 private:
  explicit DeltaSequence(Variant v) : value_(std::move(v)) {}

  Variant value_;
};

/// Finite truncation of a predicate-bounded tail union: the union of
/// AO(i, delta_i) over n_min <= i <= n_max with pred(i).
struct TailUnionSpec {
  std::uint64_t n_min = 1;
  std::uint64_t n_max = 1;
  IndexPredicate pred;
  DeltaSequence delta = DeltaSequence::constant(0);
};

/// The phi(n) points [m/n] with gcd(m, n) = 1, sorted.
std::vector<CirclePoint> finite_order_points(std::uint64_t n);

/// Points within open distance delta of a point of order exactly n.
ArcSet approx_order_set(std::uint64_t n, const Rational& delta);

ArcSet tail_union(const TailUnionSpec& spec);

/// Exact sum over the range of 2 * phi(i) * max(delta_i, 0) for indices
/// passing pred; an upper bound for the tail-union measure.
Rational subadditive_bound(const TailUnionSpec& spec);

/// m * AO(n, delta) is contained in AO(n, m * delta). Requires gcd(m, n) = 1.
bool check_inclusion_i(std::uint64_t m, std::uint64_t n, const Rational& delta);

/// m * AO(n * m, delta) is contained in AO(n, m * delta).
bool check_inclusion_ii(std::uint64_t m, std::uint64_t n, const Rational& delta);

/// a + AO(n, delta) is contained in AO(o(a) * n, delta). Requires gcd(o(a), n) = 1.
bool check_inclusion_iii(const CirclePoint& a, std::uint64_t n, const Rational& delta);

/// a + AO(n, delta) equals AO(n, delta). Requires o(a)^2 | n.
bool check_inclusion_iv(const CirclePoint& a, std::uint64_t n, const Rational& delta);

/// Split of a tail union by how often the prime p divides the index.
struct Decomposition {
  ArcSet coprime;       // p does not divide n
  ArcSet exactly_once;  // p divides n exactly once
  ArcSet square;        // p^2 divides n
  ArcSet whole;         // no restriction
};

/// Throws std::invalid_argument when p is not prime or n_min > n_max.
Decomposition gallagher_decomposition(std::uint64_t p, std::uint64_t n_min, std::uint64_t n_max,
                                      const DeltaSequence& delta);

}  // namespace gallagher
