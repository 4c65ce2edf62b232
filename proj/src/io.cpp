#include "gallagher/io.hpp"

#include <sstream>
#include <stdexcept>

namespace gallagher {

namespace {

Rational rational_from_json(const Json& j, const char* what) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return parse_rational(std::to_string(j.get<std::int64_t>()));
  throw std::invalid_argument(std::string(what) + " must be a \"p/q\" string");
}

const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw std::invalid_argument(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

Json to_json(const ArcSet& s) {
  Json arcs = Json::array();
  for (const auto& arc : s.arcs()) {
    arcs.push_back({{"start", to_string(arc.start)}, {"length", to_string(arc.length)}});
  }
  return {{"arcs", std::move(arcs)}};
}

ArcSet arcset_from_json(const Json& j) {
  const Json& arcs = require(j, "arcs");
  if (!arcs.is_array()) throw std::invalid_argument("'arcs' must be an array");
  std::vector<Arc> parsed;
  parsed.reserve(arcs.size());
  for (const auto& a : arcs) {
    parsed.push_back({CirclePoint::normalize(rational_from_json(require(a, "start"), "start")),
                      rational_from_json(require(a, "length"), "length")});
  }
  return ArcSet::from_arcs(parsed);
}

Json to_json(const DeltaSequence& d) {
  if (const auto* p = std::get_if<PowerDelta>(&d.variant())) {
    return {{"kind", "power"}, {"c", to_string(p->c)}, {"a", p->a}};
  }
  if (const auto* c = std::get_if<ConstantDelta>(&d.variant())) {
    return {{"kind", "constant"}, {"c", to_string(c->c)}};
  }
  const auto& t = std::get<TableDelta>(d.variant());
  Json values = Json::array();
  for (const auto& v : t.values) values.push_back(to_string(v));
  return {{"kind", "table"}, {"values", std::move(values)}};
}

DeltaSequence delta_from_json(const Json& j) {
  const auto kind = require(j, "kind").get<std::string>();
  if (kind == "power") {
    const Json& a = require(j, "a");
    if (!a.is_number_integer() || a.get<std::int64_t>() < 0) throw std::invalid_argument("'a' must be a non-negative integer");
    return DeltaSequence::power(rational_from_json(require(j, "c"), "c"), a.get<std::uint64_t>());
  }
  if (kind == "constant") return DeltaSequence::constant(rational_from_json(require(j, "c"), "c"));
  if (kind == "table") {
    const Json& values = require(j, "values");
    if (!values.is_array()) throw std::invalid_argument("'values' must be an array");
    std::vector<Rational> parsed;
    for (const auto& v : values) parsed.push_back(rational_from_json(v, "table value"));
    return DeltaSequence::table(std::move(parsed));
  }
  throw std::invalid_argument("unknown delta kind '" + kind + "'");
}

DeltaSequence parse_delta(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\n");
  if (first != std::string_view::npos && text[first] == '{') {
    Json j;
    try {
      j = Json::parse(text);
    } catch (const Json::parse_error& e) {
      throw std::invalid_argument(std::string("malformed delta JSON: ") + e.what());
    }
    return delta_from_json(j);
  }
  return DeltaSequence::parse_inline(text);
}

Json to_json(const ExperimentReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    rows.push_back({{"label", row.label}, {"exact", to_string(row.exact)}, {"decimal", row.decimal}});
  }
  Json verdicts = Json::array();
  for (const auto& v : r.verdicts) verdicts.push_back({{"name", v.name}, {"pass", v.pass}});
  Json out = {{"experiment", r.experiment}, {"params", r.params}, {"rows", std::move(rows)},
              {"verdicts", std::move(verdicts)}};
  if (!r.findings.empty()) out["findings"] = r.findings;
  return out;
}

std::string to_csv(const ExperimentReport& r) {
  std::ostringstream out;
  out << "label,exact,decimal\n";
  for (const auto& row : r.rows) {
    out << csv_field(row.label) << ',' << to_string(row.exact) << ',' << row.decimal << '\n';
  }
  if (!r.verdicts.empty()) {
    out << "\nverdict,pass\n";
    for (const auto& v : r.verdicts) out << csv_field(v.name) << ',' << (v.pass ? "true" : "false") << '\n';
  }
  if (!r.findings.empty()) {
    out << "\nfinding,value\n";
    for (const auto& [key, value] : r.findings.items()) {
      out << csv_field(key) << ',' << csv_field(value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
    }
  }
  return out.str();
}

}  // namespace gallagher
