#pragma once

#include <json.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tropmat/clp.hpp"
#include "tropmat/clutter.hpp"
#include "tropmat/euclid.hpp"
#include "tropmat/matroid.hpp"
#include "tropmat/tropical.hpp"

// JSON wire formats. Rationals travel as integers, decimal strings or "p/q"
// strings; tropical scalars additionally allow "-inf". Element references in
// emitted reports are always label strings ("0", "1", ... when no labels were
// given). Object key order is meaningful where points define element order,
// hence ordered_json throughout.

namespace tropmat {

using json = nlohmann::ordered_json;

Rational rational_from_json(const json& j);
json rational_to_json(const Rational& r);

Trop trop_from_json(const json& j);
json trop_to_json(const Trop& t);

/// Matroid descriptor {"n": int, "kind": {...}}; kinds: {"partition":
/// [[ints]]}, {"uniform": r}, {"graphic": [[u,v]]}, {"explicit": [[ints]]},
/// {"truncation": {"inner": descriptor, "k": int}}.
Matroid matroid_from_json(const json& descriptor, GroundSet ground);
json matroid_to_json(const Matroid& m);

/// {"d": int, "points": {label: [scalar,...]}}. When expected_labels is
/// given, the points must be keyed exactly by them and take their order;
/// otherwise the key insertion order defines the element order.
std::pair<TropConfig, std::vector<std::string>> trop_config_from_json(
    const json& cfg, const std::optional<std::vector<std::string>>& expected_labels);
json trop_config_to_json(const TropConfig& config, const std::vector<std::string>& labels);

/// {"d": int, "points": {...}, "origin": [rational,...]?}; the origin, when
/// present, translates all points so the membership target becomes 0.
std::pair<RatConfig, std::vector<std::string>> rat_config_from_json(
    const json& cfg, const std::optional<std::vector<std::string>>& expected_labels);

/// {"n": int, "facets": [[ints]]}
SupportComplex complex_from_json(const json& j);
json complex_to_json(const SupportComplex& complex);

/// {"A": [[scalar,...],...], "classes": [[ints],...]}
ColorfulLP clp_from_json(const json& j);
json clp_to_json(const ColorfulLP& inst);

/// {"k": int, "edges": [["a1","b1","c1"],...]}; nodes use the canonical
/// labels a1..ak, b1..bk, c1..ck by triple position.
ThreeDM threedm_from_json(const json& j);
json threedm_to_json(const ThreeDM& h);

/// {"n": int, "constraints": [{"eq": [ints]} | {"le": {"lhs": int, "rhs": [ints]}}]}
DualHornSystem horn_from_json(const json& j);

/// {"n": int, "members": [[ints]]}
Clutter clutter_from_json(const json& j);

json set_to_labels(SmallSet s, const std::vector<std::string>& labels);
json sets_to_labels(const std::vector<SmallSet>& sets, const std::vector<std::string>& labels);
/// 0-based internal sector set -> 1-based JSON list
json sectors_to_json(SmallSet sectors);

}  // namespace tropmat
