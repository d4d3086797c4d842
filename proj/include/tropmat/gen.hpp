#pragma once

#include <optional>
#include <string>

#include "tropmat/clp.hpp"
#include "tropmat/json_io.hpp"
#include "tropmat/matroid.hpp"
#include "tropmat/rng.hpp"

// Deterministic random instances (and the two fixed plane fixtures) used by
// the CLI's gen-instance command and by the test corpora.

namespace tropmat::gen {

/// Three color classes in the plane whose basis/cocircuit coverage condition
/// holds: red {(-2,1),(-2,0)}, green {(2,1),(2,2)}, blue {(0,-1)}, origin
/// (0,0), under the partition matroid of the classes.
json fig1();

/// Three color classes in the plane where every union of two classes covers
/// the origin (0,1/2) but the basis/cocircuit condition fails: red
/// {(-2,1),(-2,-1)}, green {(2,1),(2,-1)}, blue {(1,1),(1,0),(-1,1),(-1,0)}.
json fig2();

/// Matroid of a random kind; rank bounded by max_rank when the kind allows
/// steering it. kind: partition|uniform|graphic|explicit|truncation|any.
Matroid random_matroid(int n, Rng& rng, int max_rank = SmallSet::max_elements,
                       const std::string& kind = "any");

/// Entries are -inf with probability ninf_pct/100, otherwise halves in
/// [-2, 2].
TropConfig random_trop_config(int n, int d, Rng& rng, int ninf_pct = 30);

/// Every element gets exactly one sector of the zero target (degree-1
/// covector graph).
TropConfig random_generic_config(int n, int d, Rng& rng);

/// Entries are halves in [-2, 2]; with_origin_point plants an exact origin
/// point now and then to make captured-origin instances common.
RatConfig random_rat_config(int n, int d, Rng& rng, bool with_origin_point = false);

/// Every part-A node is covered by at least one hyperedge.
ThreeDM random_threedm(int k, int num_edges, Rng& rng);

DualHornSystem random_horn(int n, int num_constraints, Rng& rng);

ColorfulLP random_clp(int rows, int cols, int num_classes, Rng& rng);

}  // namespace tropmat::gen
