#pragma once

#include <string>

#include <json.hpp>

#include "wlp/compops.hpp"
#include "wlp/group.hpp"
#include "wlp/groupalg.hpp"
#include "wlp/seqalg.hpp"
#include "wlp/weights.hpp"

namespace wlp {

using json = nlohmann::ordered_json;

/// Built-in groups by name: "Z_n" for 1 <= n <= 12, and "S3".
GroupPtr builtin_group(const std::string& name);

/// {"builtin": "Z_5"} or {"order": n, "table": [[...], ...], "name": "..."}.
GroupPtr group_from_json(const json& j);
json group_to_json(const FiniteGroup& G);

/// {"family": "polynomial", "params": {"a": 2}, "domain": "Z"}. Group weights
/// carry {"domain": {"group": <group descriptor>}}; tabulated weights on Z
/// carry {"params": {"lo": ..., "values": [...]}}.
Weight weight_from_json(const json& j);
json weight_to_json(const Weight& w);

/// {"lo": n, "values": [[re, im], ...]}.
TruncSeq truncseq_from_json(const json& j);
json truncseq_to_json(const TruncSeq& f);

json to_json(const SubmultiplicativityReport& r);
json to_json(const AlgebraConstant& c);
json to_json(const BlowupRow& row);
json to_json(const DistortionReport& rep);
json to_json(const ChainRuleReport& rep);
json to_json(const AutomorphismCensus& census);
json to_json(const KaltonWoodReport& rep);

/// Finite doubles as numbers; infinities and NaN as strings so reports
/// round-trip through strict JSON parsers.
json number(double v);

} // namespace wlp
