// Command-line front end for the experiment drivers and set computations.
//
// Exit codes: 0 on success with every verdict true, 2 if any verdict is
// false, 1 on usage or input errors.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gallagher/approx.hpp"
#include "gallagher/density.hpp"
#include "gallagher/ergodic.hpp"
#include "gallagher/experiments.hpp"
#include "gallagher/io.hpp"

namespace {

using namespace gallagher;

constexpr int kVerdictFailed = 2;
constexpr int kUsageError = 1;

struct Common {
  std::string output = "json";
  std::string out_path;
};

void add_common(CLI::App* cmd, Common& common, const std::string& default_output = "json") {
  common.output = default_output;
  cmd->add_option("--output", common.output, "Output format")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  cmd->add_option("--out", common.out_path, "Write output to this path instead of stdout");
}

void emit(const Common& common, const std::string& text) {
  if (common.out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(common.out_path);
  if (!file) throw std::invalid_argument("cannot open output file '" + common.out_path + "'");
  file << text;
}

int emit_report(const Common& common, const ExperimentReport& report) {
  emit(common, common.output == "csv" ? to_csv(report) : to_json(report).dump(2) + "\n");
  return report.all_pass() ? 0 : kVerdictFailed;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, sep);) {
    if (!item.empty()) parts.push_back(item);
  }
  return parts;
}

std::vector<std::uint64_t> parse_schedule(const std::string& text) {
  std::vector<std::uint64_t> out;
  for (const auto& part : split(text, ',')) {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(part, &used);
    if (used != part.size()) throw std::invalid_argument("bad integer '" + part + "' in --n-min");
    out.push_back(v);
  }
  return out;
}

ArcSet read_arcset(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read set file '" + path + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument("malformed set file '" + path + "': " + e.what());
  }
  return arcset_from_json(j);
}

int emit_set(const Common& common, const ArcSet& s) {
  if (common.output == "csv") {
    std::string text = "start,length\n";
    for (const auto& a : s.arcs()) text += to_string(a.start) + "," + to_string(a.length) + "\n";
    text += "\nmeasure,decimal\n" + to_string(s.measure()) + "," + to_decimal(s.measure()) + "\n";
    emit(common, text);
  } else {
    Json j = to_json(s);
    j["measure"] = to_string(s.measure());
    j["decimal"] = to_decimal(s.measure());
    emit(common, j.dump(2) + "\n");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact circle-measure experiments for Diophantine approximation by points of finite order"};
  app.require_subcommand(1);

  // gallagher
  Common gallagher_opts;
  std::string g_delta, g_schedule;
  std::uint64_t g_n_max = 0;
  auto* gallagher_cmd = app.add_subcommand("gallagher", "Tail-union measures and subadditive bounds over an N schedule");
  gallagher_cmd->add_option("--delta", g_delta, "Radius sequence (JSON or inline)")->required();
  gallagher_cmd->add_option("--n-min", g_schedule, "Comma-separated increasing list of N")->required();
  gallagher_cmd->add_option("--n-max", g_n_max, "Truncation index")->required();
  add_common(gallagher_cmd, gallagher_opts);

  // cassels
  Common cassels_opts;
  std::string c_delta, c_scale, c_pred = "all";
  std::uint64_t c_n_min = 1, c_n_max = 0;
  auto* cassels_cmd = app.add_subcommand("cassels", "Compare tail unions with radii delta_n and M * delta_n");
  cassels_cmd->add_option("--delta", c_delta, "Radius sequence (JSON or inline)")->required();
  cassels_cmd->add_option("--m", c_scale, "Scale factor M > 0 as p/q")->required();
  cassels_cmd->add_option("--pred", c_pred, "Index predicate")->capture_default_str();
  cassels_cmd->add_option("--n-min", c_n_min)->capture_default_str();
  cassels_cmd->add_option("--n-max", c_n_max)->required();
  add_common(cassels_cmd, cassels_opts);

  // duffin-schaeffer
  Common ds_opts;
  std::string ds_delta;
  std::uint64_t ds_cap = 1024;
  auto* ds_cmd = app.add_subcommand("duffin-schaeffer", "Partial sums of phi(n) delta_n and convergence verdict");
  ds_cmd->add_option("--delta", ds_delta, "Radius sequence (JSON or inline)")->required();
  ds_cmd->add_option("--cap", ds_cap, "Largest partial-sum index")->capture_default_str();
  add_common(ds_cmd, ds_opts);

  // witnesses
  Common w_opts;
  std::string w_x, w_delta;
  std::uint64_t w_n_max = 0;
  auto* w_cmd = app.add_subcommand("witnesses", "Indices n <= n-max with dist(x, order n) < delta_n");
  w_cmd->add_option("--x", w_x, "Circle point as p/q")->required();
  w_cmd->add_option("--delta", w_delta, "Radius sequence (JSON or inline)")->required();
  w_cmd->add_option("--n-max", w_n_max)->required();
  add_common(w_cmd, w_opts);

  // ao
  Common ao_opts;
  std::uint64_t ao_n = 1;
  std::string ao_delta;
  auto* ao_cmd = app.add_subcommand("ao", "Approximate-order set AO(n, delta_n)");
  ao_cmd->add_option("--n", ao_n, "Order n >= 1")->required();
  ao_cmd->add_option("--delta", ao_delta, "Radius sequence or bare rational radius")->required();
  add_common(ao_cmd, ao_opts);

  // measure
  Common m_opts;
  std::string m_set, m_delta, m_pred = "all";
  std::uint64_t m_n_min = 1, m_n_max = 0;
  auto* m_cmd = app.add_subcommand("measure", "Measure of an arc-set file, or of a truncated tail union");
  m_cmd->add_option("--set", m_set, "Arc-set JSON file");
  m_cmd->add_option("--delta", m_delta, "Radius sequence for a tail union");
  m_cmd->add_option("--pred", m_pred, "Index predicate for a tail union")->capture_default_str();
  m_cmd->add_option("--n-min", m_n_min)->capture_default_str();
  m_cmd->add_option("--n-max", m_n_max);
  add_common(m_cmd, m_opts);

  // ergodic-search
  Common e_opts;
  std::uint64_t e_n = 2;
  std::string e_x = "0";
  std::uint32_t e_grid = 8;
  unsigned e_workers = 0;
  auto* e_cmd = app.add_subcommand("ergodic-search", "Grid-cell unions invariant under y -> n y + x");
  e_cmd->add_option("--n", e_n, "Multiplier n >= 1")->capture_default_str();
  e_cmd->add_option("--x", e_x, "Offset as p/q")->capture_default_str();
  e_cmd->add_option("--grid", e_grid, "Grid denominator k, 1 <= k <= 20")->capture_default_str();
  e_cmd->add_option("--workers", e_workers, "Worker threads (0 = hardware)")->capture_default_str();
  add_common(e_cmd, e_opts);

  // density
  Common d_opts;
  std::string d_set, d_x, d_eps;
  auto* d_cmd = app.add_subcommand("density", "Density ratios of a set at x along a decreasing radius schedule");
  d_cmd->add_option("--set", d_set, "Arc-set JSON file")->required();
  d_cmd->add_option("--x", d_x, "Centre as p/q")->required();
  d_cmd->add_option("--eps", d_eps, "Comma-separated strictly decreasing radii")->required();
  add_common(d_cmd, d_opts, "csv");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  try {
    if (*gallagher_cmd) {
      const auto schedule = parse_schedule(g_schedule);
      return emit_report(gallagher_opts, gallagher_experiment(parse_delta(g_delta), schedule, g_n_max));
    }
    if (*cassels_cmd) {
      return emit_report(cassels_opts, cassels_experiment(parse_delta(c_delta), parse_rational(c_scale),
                                                          IndexPredicate::parse(c_pred), c_n_min, c_n_max));
    }
    if (*ds_cmd) return emit_report(ds_opts, duffin_schaeffer_classify(parse_delta(ds_delta), ds_cap));
    if (*w_cmd) return emit_report(w_opts, witness_report(CirclePoint::parse(w_x), parse_delta(w_delta), w_n_max));
    if (*ao_cmd) {
      if (ao_n < 1) throw std::invalid_argument("--n must be >= 1");
      return emit_set(ao_opts, approx_order_set(ao_n, parse_delta(ao_delta).at(ao_n)));
    }
    if (*m_cmd) {
      if (!m_set.empty()) return emit_set(m_opts, read_arcset(m_set));
      if (m_delta.empty() || m_n_max == 0) throw std::invalid_argument("measure needs --set, or --delta with --n-max");
      return emit_set(m_opts, tail_union({m_n_min, m_n_max, IndexPredicate::parse(m_pred), parse_delta(m_delta)}));
    }
    if (*e_cmd) {
      const auto found = invariant_set_search({e_n, CirclePoint::parse(e_x)}, e_grid, e_workers);
      if (e_opts.output == "csv") {
        std::string text = "index,start,length\n";
        for (std::size_t i = 0; i < found.size(); ++i) {
          if (found[i].empty()) text += std::to_string(i) + ",,\n";
          for (const auto& a : found[i].arcs()) {
            text += std::to_string(i) + "," + to_string(a.start) + "," + to_string(a.length) + "\n";
          }
        }
        emit(e_opts, text);
      } else {
        Json list = Json::array();
        for (const auto& s : found) list.push_back(to_json(s));
        emit(e_opts, list.dump(2) + "\n");
      }
      return 0;
    }
    if (*d_cmd) {
      std::vector<Rational> schedule;
      for (const auto& part : split(d_eps, ',')) schedule.push_back(parse_rational(part));
      const auto profile = density_profile(read_arcset(d_set), CirclePoint::parse(d_x), schedule);
      if (d_opts.output == "csv") {
        std::string text = "eps,ratio\n";
        for (const auto& [eps, ratio] : profile) text += to_string(eps) + "," + to_string(ratio) + "\n";
        emit(d_opts, text);
      } else {
        Json rows = Json::array();
        for (const auto& [eps, ratio] : profile) {
          rows.push_back({{"eps", to_string(eps)}, {"ratio", to_string(ratio)}, {"decimal", to_decimal(ratio)}});
        }
        emit(d_opts, Json{{"x", d_x}, {"rows", std::move(rows)}}.dump(2) + "\n");
      }
      return 0;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}
