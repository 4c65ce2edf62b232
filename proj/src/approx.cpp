#include "gallagher/approx.hpp"

#include <charconv>
#include <numeric>
#include <stdexcept>

namespace gallagher {

namespace {

Rational from_u64(std::uint64_t v) { return Rational(Integer(static_cast<unsigned long>(v))); }

void require_range(std::uint64_t n_min, std::uint64_t n_max) {
  if (n_min < 1) throw std::invalid_argument("n_min must be >= 1");
  if (n_min > n_max) throw std::invalid_argument("n_min must not exceed n_max");
}

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

}  // namespace

DeltaSequence DeltaSequence::power(Rational c, std::uint64_t a) {
  if (c <= 0) throw std::invalid_argument("power sequence needs c > 0, got " + to_string(c));
  return DeltaSequence(PowerDelta{std::move(c), a});
}

DeltaSequence DeltaSequence::parse_inline(std::string_view text) {
  auto body_after = [&](std::string_view prefix) { return text.substr(prefix.size()); };
  if (text.starts_with("power:")) {
    const auto body = body_after("power:");
    const auto colon = body.rfind(':');
    if (colon == std::string_view::npos) throw std::invalid_argument("expected power:C:A, got '" + std::string(text) + "'");
    const auto exp_text = body.substr(colon + 1);
    std::uint64_t a = 0;
    auto [ptr, ec] = std::from_chars(exp_text.data(), exp_text.data() + exp_text.size(), a);
    if (ec != std::errc() || ptr != exp_text.data() + exp_text.size()) {
      throw std::invalid_argument("bad exponent in '" + std::string(text) + "'");
    }
    return power(parse_rational(body.substr(0, colon)), a);
  }
  if (text.starts_with("constant:")) return constant(parse_rational(body_after("constant:")));
  if (text.starts_with("table:")) {
    std::vector<Rational> values;
    auto body = body_after("table:");
    while (!body.empty()) {
      const auto comma = body.find(',');
      values.push_back(parse_rational(body.substr(0, comma)));
      if (comma == std::string_view::npos) break;
      body.remove_prefix(comma + 1);
    }
    return table(std::move(values));
  }
  return constant(parse_rational(text));
}

Rational DeltaSequence::at(std::uint64_t n) const {
  if (n == 0) throw std::invalid_argument("delta sequences are indexed from 1");
  return std::visit(overloaded{
                        [&](const PowerDelta& d) { return Rational(d.c / pow(from_u64(n), d.a)); },
                        [&](const ConstantDelta& d) { return d.c; },
                        [&](const TableDelta& d) { return n <= d.values.size() ? d.values[n - 1] : Rational(0); },
                    },
                    value_);
}

DeltaSequence DeltaSequence::scaled(const Rational& factor) const {
  return std::visit(overloaded{
                        [&](const PowerDelta& d) {
                          if (factor <= 0) throw std::invalid_argument("power sequence can only be scaled by a positive factor");
                          return power(d.c * factor, d.a);
                        },
                        [&](const ConstantDelta& d) { return constant(d.c * factor); },
                        [&](const TableDelta& d) {
                          std::vector<Rational> values;
                          values.reserve(d.values.size());
                          for (const auto& v : d.values) values.push_back(v * factor);
                          return table(std::move(values));
                        },
                    },
                    value_);
}

std::string DeltaSequence::describe() const {
  return std::visit(overloaded{
                        [](const PowerDelta& d) { return "power:" + to_string(d.c) + ":" + std::to_string(d.a); },
                        [](const ConstantDelta& d) { return "constant:" + to_string(d.c); },
                        [](const TableDelta& d) {
                          std::string out = "table:";
                          for (std::size_t i = 0; i < d.values.size(); ++i) {
                            if (i) out += ",";
                            out += to_string(d.values[i]);
                          }
                          return out;
                        },
                    },
                    value_);
}

std::vector<CirclePoint> finite_order_points(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("finite_order_points: n must be >= 1");
  std::vector<CirclePoint> points;
  for (std::uint64_t m = 0; m < n; ++m) {
    if (std::gcd(m, n) == 1) points.push_back(CirclePoint::normalize(from_u64(m) / from_u64(n)));
  }
  return points;
}

ArcSet approx_order_set(std::uint64_t n, const Rational& delta) {
  if (delta <= 0) return {};
  return thicken(finite_order_points(n), delta);
}

ArcSet tail_union(const TailUnionSpec& spec) {
  require_range(spec.n_min, spec.n_max);
  std::vector<Arc> arcs;
  for (std::uint64_t n = spec.n_min; n <= spec.n_max; ++n) {
    if (!spec.pred(n)) continue;
    const Rational delta = spec.delta.at(n);
    if (delta <= 0) continue;
    if (delta * 2 >= 1) return ArcSet::full();
    const Rational diameter = 2 * delta;
    for (const auto& y : finite_order_points(n)) arcs.push_back({CirclePoint::normalize(y.value() - delta), diameter});
  }
  return ArcSet::from_arcs(arcs);
}

Rational subadditive_bound(const TailUnionSpec& spec) {
  require_range(spec.n_min, spec.n_max);
  Rational total = 0;
  for (std::uint64_t n = spec.n_min; n <= spec.n_max; ++n) {
    if (!spec.pred(n)) continue;
    const Rational delta = spec.delta.at(n);
    if (delta > 0) total += 2 * from_u64(totient(n)) * delta;
  }
  return total;
}

bool check_inclusion_i(std::uint64_t m, std::uint64_t n, const Rational& delta) {
  if (m == 0 || n == 0) throw std::invalid_argument("check_inclusion_i: m and n must be >= 1");
  if (std::gcd(m, n) != 1) throw std::invalid_argument("check_inclusion_i: m and n must be coprime");
  const Integer factor(static_cast<unsigned long>(m));
  return scale_image(factor, approx_order_set(n, delta)).subset_of(approx_order_set(n, from_u64(m) * delta));
}

bool check_inclusion_ii(std::uint64_t m, std::uint64_t n, const Rational& delta) {
  if (m == 0 || n == 0) throw std::invalid_argument("check_inclusion_ii: m and n must be >= 1");
  const Integer factor(static_cast<unsigned long>(m));
  return scale_image(factor, approx_order_set(n * m, delta)).subset_of(approx_order_set(n, from_u64(m) * delta));
}

bool check_inclusion_iii(const CirclePoint& a, std::uint64_t n, const Rational& delta) {
  if (n == 0) throw std::invalid_argument("check_inclusion_iii: n must be >= 1");
  const std::uint64_t order = a.add_order().get_ui();
  if (std::gcd(order, n) != 1) throw std::invalid_argument("check_inclusion_iii: o(a) and n must be coprime");
  return translate(a, approx_order_set(n, delta)).subset_of(approx_order_set(order * n, delta));
}

bool check_inclusion_iv(const CirclePoint& a, std::uint64_t n, const Rational& delta) {
  if (n == 0) throw std::invalid_argument("check_inclusion_iv: n must be >= 1");
  const std::uint64_t order = a.add_order().get_ui();
  if (n % (order * order) != 0) throw std::invalid_argument("check_inclusion_iv: o(a)^2 must divide n");
  const ArcSet base = approx_order_set(n, delta);
  return translate(a, base) == base;
}

Decomposition gallagher_decomposition(std::uint64_t p, std::uint64_t n_min, std::uint64_t n_max,
                                      const DeltaSequence& delta) {
  if (!is_prime(p)) throw std::invalid_argument("gallagher_decomposition: " + std::to_string(p) + " is not prime");
  require_range(n_min, n_max);
  auto part = [&](IndexPredicate pred) { return tail_union({n_min, n_max, std::move(pred), delta}); };
  return {part(IndexPredicate::not_div(p)), part(IndexPredicate::exactly_once(p)),
          part(IndexPredicate::div_by_square(p)), part(IndexPredicate::all())};
}

}  // namespace gallagher
