#include "gallagher/numtheory.hpp"

#include <charconv>
#include <stdexcept>

namespace gallagher {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint64_t totient(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("totient: n must be >= 1");
  std::uint64_t result = n;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

std::uint64_t radical(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("radical: n must be >= 1");
  std::uint64_t result = 1;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    result *= p;
    while (n % p == 0) n /= p;
  }
  return n > 1 ? result * n : result;
}

std::vector<std::uint64_t> totient_table(std::uint64_t limit) {
  std::vector<std::uint64_t> phi(limit + 1);
  for (std::uint64_t i = 0; i <= limit; ++i) phi[i] = i;
  for (std::uint64_t p = 2; p <= limit; ++p) {
    if (phi[p] != p) continue;
    for (std::uint64_t k = p; k <= limit; k += p) phi[k] -= phi[k] / p;
  }
  return phi;
}

namespace {

std::uint64_t require_prime(std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("predicate parameter " + std::to_string(p) + " is not prime");
  return p;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

std::uint64_t parse_prime(std::string_view digits, std::string_view whole) {
  std::uint64_t p = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) {
    throw std::invalid_argument("bad predicate parameter in '" + std::string(whole) + "'");
  }
  return p;
}

// Splits "a,b,c" at top-level commas.
std::vector<std::string_view> split_args(std::string_view body) {
  std::vector<std::string_view> parts;
  int depth = 0;
  std::size_t begin = 0;
  for (std::size_t i = 0; i < body.size(); ++i) {
    if (body[i] == '(') ++depth;
    if (body[i] == ')') --depth;
    if (depth < 0) throw std::invalid_argument("unbalanced parentheses in predicate");
    if (body[i] == ',' && depth == 0) {
      parts.push_back(trim(body.substr(begin, i - begin)));
      begin = i + 1;
    }
  }
  if (depth != 0) throw std::invalid_argument("unbalanced parentheses in predicate");
  parts.push_back(trim(body.substr(begin)));
  return parts;
}

}  // namespace

IndexPredicate IndexPredicate::not_div(std::uint64_t p) { return {Kind::NotDiv, require_prime(p)}; }
IndexPredicate IndexPredicate::exactly_once(std::uint64_t p) { return {Kind::ExactlyOnce, require_prime(p)}; }
IndexPredicate IndexPredicate::div_by_square(std::uint64_t p) { return {Kind::DivBySquare, require_prime(p)}; }

IndexPredicate IndexPredicate::any_of(IndexPredicate a, IndexPredicate b) {
  IndexPredicate out(Kind::Or, 0);
  out.lhs_ = std::make_shared<const IndexPredicate>(std::move(a));
  out.rhs_ = std::make_shared<const IndexPredicate>(std::move(b));
  return out;
}

IndexPredicate IndexPredicate::both(IndexPredicate a, IndexPredicate b) {
  IndexPredicate out(Kind::And, 0);
  out.lhs_ = std::make_shared<const IndexPredicate>(std::move(a));
  out.rhs_ = std::make_shared<const IndexPredicate>(std::move(b));
  return out;
}

IndexPredicate IndexPredicate::parse(std::string_view text) {
  const auto s = trim(text);
  if (s == "all") return all();
  for (auto [prefix, make] : {std::pair{std::string_view("ndvd:"), &IndexPredicate::not_div},
                              std::pair{std::string_view("exact:"), &IndexPredicate::exactly_once},
                              std::pair{std::string_view("sq:"), &IndexPredicate::div_by_square}}) {
    if (s.starts_with(prefix)) return make(parse_prime(s.substr(prefix.size()), s));
  }
  for (std::string_view head : {"or(", "and("}) {
    if (!s.starts_with(head) || !s.ends_with(")")) continue;
    const auto args = split_args(s.substr(head.size(), s.size() - head.size() - 1));
    if (args.size() < 2) throw std::invalid_argument("'" + std::string(s) + "' needs at least two operands");
    IndexPredicate acc = parse(args[0]);
    for (std::size_t i = 1; i < args.size(); ++i) {
      acc = head == "or(" ? any_of(std::move(acc), parse(args[i])) : both(std::move(acc), parse(args[i]));
    }
    return acc;
  }
  throw std::invalid_argument("unrecognized predicate '" + std::string(s) + "'");
}

bool IndexPredicate::operator()(std::uint64_t n) const {
  if (n == 0) throw std::invalid_argument("index predicates are defined for n >= 1");
  switch (kind_) {
    case Kind::All:
      return true;
    case Kind::NotDiv:
      return n % prime_ != 0;
    case Kind::ExactlyOnce:
      return n % prime_ == 0 && (n / prime_) % prime_ != 0;
    case Kind::DivBySquare:
      return n % prime_ == 0 && (n / prime_) % prime_ == 0;
    case Kind::Or:
      return (*lhs_)(n) || (*rhs_)(n);
    case Kind::And:
      return (*lhs_)(n) && (*rhs_)(n);
  }
  return false;
}

std::string IndexPredicate::to_string() const {
  switch (kind_) {
    case Kind::All:
      return "all";
    case Kind::NotDiv:
      return "ndvd:" + std::to_string(prime_);
    case Kind::ExactlyOnce:
      return "exact:" + std::to_string(prime_);
    case Kind::DivBySquare:
      return "sq:" + std::to_string(prime_);
    case Kind::Or:
      return "or(" + lhs_->to_string() + "," + rhs_->to_string() + ")";
    case Kind::And:
      return "and(" + lhs_->to_string() + "," + rhs_->to_string() + ")";
  }
  return {};
}

}  // namespace gallagher
