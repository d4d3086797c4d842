#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "tropmat/json_io.hpp"

// Batch operations: each takes a parsed JSON instance and returns a JSON
// report with a "schema_version" and a "status" field. InputError propagates
// for malformed instances. The CLI and the Python bindings both sit on top of
// this layer, so their semantics agree by construction.

namespace tropmat::ops {

/// {"config": {...}, "target": [rational,...]?} -> inside/outside
json membership(const json& instance);

/// {"matroid": {...}, "labels"?: [...], "config": {...}} -> found/violated/not-found
json colorful_basis(const json& instance, const std::optional<std::string>& pin, bool want_trace);

/// Basis/cocircuit coverage condition, or the two-cocircuit variant.
json verify_condition(const json& instance, bool two_cocircuit);

/// Two-cocircuit driven basis search (rank = d+1).
json two_cocircuit_basis(const json& instance, bool want_trace);

/// Euclidean condition check; corank2 checks minimal sets meeting every
/// basis twice instead of basis/cocircuit pairs.
json km_verify(const json& instance, bool corank2);

json km_basis(const json& instance, const std::optional<std::string>& pin);

/// Generic-position transversal check.
json rado_check(const json& instance);

json clp_solve(const json& instance);
json clp_from_3dm(const json& instance);
json horn_solve(const json& instance);
json realize_complex_op(const json& instance);
json support_complex_op(const json& instance);
json matroid_info(const json& instance);
json clutter_check(const json& instance);

/// Deterministic instance generation; kinds: fig1, fig2, random-3dm,
/// random-clp, random-config.
json gen_instance(const std::string& kind, const json& params, std::uint64_t seed);

/// 0 for ok/found/inside/feasible statuses, 1 for violated/outside/
/// infeasible/not-found; reports without a status map to 0.
int exit_code_for(const json& report);

}  // namespace tropmat::ops
