#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "gallagher/approx.hpp"
#include "gallagher/arcset.hpp"
#include "gallagher/experiments.hpp"

namespace gallagher {

using Json = nlohmann::ordered_json;

/// {"arcs":[{"start":"p/q","length":"p/q"}, ...]}, arcs sorted by start.
Json to_json(const ArcSet& s);
/// Accepts any (possibly overlapping) list of arcs and canonicalizes it.
ArcSet arcset_from_json(const Json& j);

/// {"kind":"power","c":"1","a":2} | {"kind":"constant","c":"1/10"} |
/// {"kind":"table","values":["1/4","1/9"]}.
Json to_json(const DeltaSequence& d);
DeltaSequence delta_from_json(const Json& j);

/// JSON text when it starts with '{', otherwise DeltaSequence::parse_inline.
DeltaSequence parse_delta(std::string_view text);

/// {"experiment", "params", "rows":[{"label","exact","decimal"}],
///  "verdicts":[{"name","pass"}], "findings"}
Json to_json(const ExperimentReport& r);

/// "label,exact,decimal" table, then (each after a blank line) a
/// "verdict,pass" table and a "finding,value" table when non-empty.
std::string to_csv(const ExperimentReport& r);

}  // namespace gallagher
