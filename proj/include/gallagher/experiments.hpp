#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "gallagher/approx.hpp"
#include "gallagher/circle.hpp"
#include "gallagher/numtheory.hpp"

namespace gallagher {

struct ReportRow {
  std::string label;
  Rational exact;
  std::string decimal;  // 12 significant digits, round-half-even
};

struct Verdict {
  std::string name;
  bool pass = false;
};

struct ExperimentReport {
  std::string experiment;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  std::vector<ReportRow> rows;
  std::vector<Verdict> verdicts;
  /// Named string-valued conclusions (e.g. series classification).
  nlohmann::ordered_json findings = nlohmann::ordered_json::object();

  void add_row(std::string label, const Rational& value);
  void add_verdict(std::string name, bool pass) { verdicts.push_back({std::move(name), pass}); }
  bool all_pass() const;
  /// Exact value of the row with this label; throws std::out_of_range if absent.
  const Rational& value(const std::string& label) const;
};

/// Measures of the truncated tail unions over [N, n_max] for each N in the
/// schedule, next to the subadditive bound sum 2 phi(n) max(delta_n, 0).
/// Rows are labelled "measure N=<N>" and "bound N=<N>".
/// The schedule must be non-empty, strictly increasing, within [1, n_max].
ExperimentReport gallagher_experiment(const DeltaSequence& delta, std::span<const std::uint64_t> n_min_schedule,
                                      std::uint64_t n_max);

/// Compares the tail union W_1 with radii delta_n to W_M with radii M delta_n.
/// Rejects M <= 0.
ExperimentReport cassels_experiment(const DeltaSequence& delta, const Rational& scale, const IndexPredicate& pred,
                                    std::uint64_t n_min, std::uint64_t n_max);

/// Exact partial sums of phi(n) max(delta_n, 0) for M = 1, 2, 4, ... <= cap,
/// plus the analytic convergence verdict where one is known.
ExperimentReport duffin_schaeffer_classify(const DeltaSequence& delta, std::uint64_t partial_sum_cap);

/// All n <= n_max with dist_to_order_n(x, n) < delta_n.
std::vector<std::uint64_t> membership_witnesses(const CirclePoint& x, const DeltaSequence& delta, std::uint64_t n_max);

/// Report form of membership_witnesses: one row "n=<n>" per witness, holding
/// the distance to the nearest point of order n.
ExperimentReport witness_report(const CirclePoint& x, const DeltaSequence& delta, std::uint64_t n_max);

}  // namespace gallagher
