#include "gallagher/experiments.hpp"

#include <algorithm>
#include <stdexcept>

namespace gallagher {

namespace {

Rational from_u64(std::uint64_t v) { return Rational(Integer(static_cast<unsigned long>(v))); }

}  // namespace

void ExperimentReport::add_row(std::string label, const Rational& value) {
  rows.push_back({std::move(label), value, to_decimal(value, 12)});
}

bool ExperimentReport::all_pass() const {
  return std::all_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return v.pass; });
}

const Rational& ExperimentReport::value(const std::string& label) const {
  for (const auto& row : rows) {
    if (row.label == label) return row.exact;
  }
  throw std::out_of_range("no report row labelled '" + label + "'");
}

ExperimentReport gallagher_experiment(const DeltaSequence& delta, std::span<const std::uint64_t> n_min_schedule,
                                      std::uint64_t n_max) {
  if (n_min_schedule.empty()) throw std::invalid_argument("gallagher_experiment: empty N schedule");
  for (std::size_t i = 0; i < n_min_schedule.size(); ++i) {
    const auto n = n_min_schedule[i];
    if (n < 1 || n > n_max) throw std::invalid_argument("gallagher_experiment: schedule entries must lie in [1, n_max]");
    if (i > 0 && n <= n_min_schedule[i - 1]) {
      throw std::invalid_argument("gallagher_experiment: schedule must be strictly increasing");
    }
  }

  ExperimentReport report;
  report.experiment = "gallagher";
  report.params["delta"] = delta.describe();
  report.params["n_min_schedule"] = std::vector<std::uint64_t>(n_min_schedule.begin(), n_min_schedule.end());
  report.params["n_max"] = n_max;

  std::vector<Rational> measures;
  bool within_bound = true;
  for (const auto n_min : n_min_schedule) {
    const TailUnionSpec spec{n_min, n_max, IndexPredicate::all(), delta};
    const Rational m = tail_union(spec).measure();
    const Rational bound = subadditive_bound(spec);
    within_bound = within_bound && m <= bound;
    report.add_row("measure N=" + std::to_string(n_min), m);
    report.add_row("bound N=" + std::to_string(n_min), bound);
    measures.push_back(m);
  }
  const bool monotone = std::is_sorted(measures.rbegin(), measures.rend());
  report.add_verdict("monotone_non_increasing", monotone);
  report.add_verdict("measure_le_bound", within_bound);
  return report;
}

ExperimentReport cassels_experiment(const DeltaSequence& delta, const Rational& scale, const IndexPredicate& pred,
                                    std::uint64_t n_min, std::uint64_t n_max) {
  if (scale <= 0) throw std::invalid_argument("cassels_experiment: M must be > 0");
  const ArcSet base = tail_union({n_min, n_max, pred, delta});
  const ArcSet scaled = tail_union({n_min, n_max, pred, delta.scaled(scale)});

  ExperimentReport report;
  report.experiment = "cassels";
  report.params["delta"] = delta.describe();
  report.params["M"] = to_string(scale);
  report.params["pred"] = pred.to_string();
  report.params["n_min"] = n_min;
  report.params["n_max"] = n_max;
  report.add_row("measure W_1", base.measure());
  report.add_row("measure W_M", scaled.measure());
  report.add_row("symmetric difference", symm_diff_measure(base, scaled));
  if (scale >= 1) report.add_verdict("W_1 subset W_M", base.subset_of(scaled));
  if (scale <= 1) report.add_verdict("W_M subset W_1", scaled.subset_of(base));
  return report;
}

ExperimentReport duffin_schaeffer_classify(const DeltaSequence& delta, std::uint64_t partial_sum_cap) {
  if (partial_sum_cap < 1) throw std::invalid_argument("duffin_schaeffer_classify: cap must be >= 1");

  ExperimentReport report;
  report.experiment = "duffin-schaeffer";
  report.params["delta"] = delta.describe();
  report.params["partial_sum_cap"] = partial_sum_cap;

  const auto phi = totient_table(partial_sum_cap);
  Rational sum = 0;
  std::vector<Rational> partials;
  std::uint64_t next_checkpoint = 1;
  for (std::uint64_t n = 1; n <= partial_sum_cap; ++n) {
    const Rational d = delta.at(n);
    if (d > 0) sum += from_u64(phi[n]) * d;
    if (n == next_checkpoint) {
      report.add_row("partial sum M=" + std::to_string(n), sum);
      partials.push_back(sum);
      next_checkpoint *= 2;
    }
  }
  report.add_verdict("partial_sums_monotone", std::is_sorted(partials.begin(), partials.end()));

  std::string series = "undetermined";
  if (const auto* p = std::get_if<PowerDelta>(&delta.variant())) {
    series = p->a <= 2 ? "divergent" : "convergent";
  } else if (const auto* c = std::get_if<ConstantDelta>(&delta.variant())) {
    // c <= 0 makes every term max(delta_n, 0) vanish
    series = c->c > 0 ? "divergent" : "convergent";
  }
  report.findings["series"] = series;
  report.findings["predicted_class"] = series == "divergent" ? "full" : series == "convergent" ? "null" : "undetermined";
  return report;
}

std::vector<std::uint64_t> membership_witnesses(const CirclePoint& x, const DeltaSequence& delta, std::uint64_t n_max) {
  if (n_max < 1) throw std::invalid_argument("membership_witnesses: n_max must be >= 1");
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    const Rational d = delta.at(n);
    if (d <= 0) continue;
    if (dist_to_order_n(x, n) < d) out.push_back(n);
  }
  return out;
}

ExperimentReport witness_report(const CirclePoint& x, const DeltaSequence& delta, std::uint64_t n_max) {
  ExperimentReport report;
  report.experiment = "witnesses";
  report.params["x"] = to_string(x);
  report.params["delta"] = delta.describe();
  report.params["n_max"] = n_max;
  const auto witnesses = membership_witnesses(x, delta, n_max);
  for (const auto n : witnesses) report.add_row("n=" + std::to_string(n), dist_to_order_n(x, n));
  report.findings["witness_count"] = std::to_string(witnesses.size());
  return report;
}

}  // namespace gallagher
