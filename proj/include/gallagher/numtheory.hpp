#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace gallagher {

bool is_prime(std::uint64_t n);

/// Euler's totient by trial division. Requires n >= 1.
std::uint64_t totient(std::uint64_t n);

/// Product of the distinct primes dividing n; radical(1) == 1.
std::uint64_t radical(std::uint64_t n);

/// phi(1..limit) by sieve; index 0 is unused and holds 0.
std::vector<std::uint64_t> totient_table(std::uint64_t limit);

/// Divisibility-shaped predicate on positive integers, used to split a
/// tail union into the p-coprime, p-exactly-once and p-squared parts.
///
/// Textual form: "all", "ndvd:p", "exact:p", "sq:p", "or(a,b,...)",
/// "and(a,b,...)".
class IndexPredicate {
 public:
  enum class Kind { All, NotDiv, ExactlyOnce, DivBySquare, Or, And };

  IndexPredicate() = default;

  static IndexPredicate all() { return {}; }
  /// The prime-parameterized kinds throw std::invalid_argument for non-prime p.
  static IndexPredicate not_div(std::uint64_t p);
  static IndexPredicate exactly_once(std::uint64_t p);
  static IndexPredicate div_by_square(std::uint64_t p);
  static IndexPredicate any_of(IndexPredicate a, IndexPredicate b);
  static IndexPredicate both(IndexPredicate a, IndexPredicate b);

  static IndexPredicate parse(std::string_view text);

  Kind kind() const { return kind_; }
  std::uint64_t prime() const { return prime_; }

  /// Requires n >= 1.
  bool operator()(std::uint64_t n) const;

  std::string to_string() const;

 private:
  IndexPredicate(Kind kind, std::uint64_t p) : kind_(kind), prime_(p) {}

  Kind kind_ = Kind::All;
  std::uint64_t prime_ = 0;
  std::shared_ptr<const IndexPredicate> lhs_;
  std::shared_ptr<const IndexPredicate> rhs_;
};

inline bool evaluate(const IndexPredicate& pred, std::uint64_t n) { return pred(n); }

}  // namespace gallagher
