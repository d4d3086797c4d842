#pragma once

#include <optional>
#include <vector>

#include "tropmat/matroid.hpp"
#include "tropmat/tropical.hpp"

namespace tropmat {

/// Witness of a violated coverage condition: a pair of element sets whose
/// union misses a sector of the target. For the basis/cocircuit condition the
/// pair is (basis, cocircuit); for the two-cocircuit condition it is a pair
/// of distinct cocircuits.
struct ConditionWitness {
    SmallSet first;
    SmallSet second;
    int sector = -1;  // 0-based; re-running membership on the union reproduces it
};

struct ConditionReport {
    bool ok = true;
    std::optional<ConditionWitness> witness;
};

/// Checks that 0 lies in the max-plus hull of V(B u C) for every basis B and
/// cocircuit C, by full enumeration; reports the lexicographically first
/// violating pair otherwise.
ConditionReport verify_bc_condition(const Matroid& m, const TropConfig& config);

/// Checks 0 in hull of V(C u D) for all distinct cocircuit pairs; requires
/// rank = d+1.
ConditionReport verify_two_cocircuit_condition(const Matroid& m, const TropConfig& config);

/// One exchange step of the greedy search. Coverage grows strictly with each
/// step, so a trace has at most d entries.
struct TraceStep {
    SmallSet basis;     // before the exchange
    SmallSet covered;   // sectors hit by the basis (0-based)
    int leaving;        // removed element (redundant: coverage is preserved)
    SmallSet cocircuit; // fundamental cocircuit of (basis, leaving)
    std::optional<SmallSet> cocircuit2;  // second cocircuit, two-cocircuit variant only
    int entering;       // inserted element
    int sector;         // 0-based sector gained
};

struct ColorfulOutcome {
    enum class Status { found, violated, not_found } status = Status::not_found;
    SmallSet basis;          // on found
    Membership certificate;  // on found: membership of 0 in V(basis)
    std::vector<TraceStep> trace;
    std::optional<ConditionWitness> witness;  // on violated
};

/// Greedy covering-basis search. Starting from the lexicographic greedy basis
/// (seeded with the pinned element when given), each step drops the smallest
/// redundant element b (never the pin), takes the fundamental cocircuit of
/// (B, b) and inserts its smallest element adjacent to the smallest uncovered
/// sector. On a stall it falls back to exhaustive search over bases, and only
/// failing that reports a violated pair; when even full enumeration finds no
/// violated pair the status is not_found.
ColorfulOutcome colorful_basis(const Matroid& m, const TropConfig& config,
                               std::optional<int> pin = std::nullopt);

/// Covering-basis search driven by cocircuit pairs; requires rank = d+1.
/// Each round picks the two smallest redundant elements p, q of the current
/// basis, scans their fundamental cocircuits for an element r with a new
/// sector and exchanges r for whichever of p, q owns the cocircuit of r.
ColorfulOutcome colorful_basis_two_cocircuit(const Matroid& m, const TropConfig& config);

struct RadoReport {
    bool generic = false;              // every element lies in exactly one sector
    std::optional<bool> rado_holds;    // absent when not generic
    std::optional<SmallSet> violating_sectors;  // 0-based sector set J with rank(preimage) < |J|
    std::optional<SmallSet> transversal;        // independent set covering all sectors
};

/// For a target in generic position (all covector degrees 1) the origin lies
/// in the hull of an independent set iff the rank of every union of sector
/// preimages is at least the number of sectors taken. Checks all sector
/// subsets J of {0..d} and reports the first violation, or an independent
/// covering transversal on success.
RadoReport generic_rado_check(const Matroid& m, const TropConfig& config);

}  // namespace tropmat
