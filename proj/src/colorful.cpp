#include "tropmat/colorful.hpp"

#include <algorithm>

namespace tropmat {

namespace {

std::vector<Rational> zero_target(int d) {
    return std::vector<Rational>(static_cast<std::size_t>(d));
}

void check_config(const Matroid& m, const TropConfig& config) {
    if (config.n() != m.n())
        throw InputError("configuration must assign a point to every matroid element");
}

ConditionReport check_pairs(const TropConfig& config, const std::vector<SmallSet>& firsts,
                            const std::vector<SmallSet>& seconds, bool skip_equal) {
    CovectorGraph g = covector_graph(config, zero_target(config.d));
    SmallSet all = g.all_sectors();
    for (SmallSet a : firsts) {
        for (SmallSet b : seconds) {
            if (skip_equal && a == b) continue;
            SmallSet covered = g.neighborhood(a | b);
            if (covered != all)
                return ConditionReport{false, ConditionWitness{a, b, (all - covered).min()}};
        }
    }
    return ConditionReport{true, std::nullopt};
}

SmallSet lex_greedy_basis(const Matroid& m, std::optional<int> pin) {
    SmallSet b;
    if (pin) b.insert(*pin);
    for (int e = 0; e < m.n(); ++e)
        if (!b.contains(e) && m.is_independent(b.with(e))) b.insert(e);
    return b;
}

/// First covering basis in lexicographic order, restricted to bases
/// containing the pin when given.
std::optional<SmallSet> exhaustive_covering_basis(const Matroid& m, const CovectorGraph& g,
                                                  std::optional<int> pin) {
    for (SmallSet b : m.bases()) {
        if (pin && !b.contains(*pin)) continue;
        if (g.neighborhood(b) == g.all_sectors()) return b;
    }
    return std::nullopt;
}

ColorfulOutcome found_outcome(SmallSet basis, const TropConfig& config,
                              std::vector<TraceStep> trace) {
    ColorfulOutcome out;
    out.status = ColorfulOutcome::Status::found;
    out.basis = basis;
    out.certificate = tropical_membership(zero_target(config.d), config.restrict(basis));
    out.trace = std::move(trace);
    return out;
}

/// Elements whose removal keeps the covered sector set, ascending.
std::vector<int> redundant_elements(const CovectorGraph& g, SmallSet basis, SmallSet covered) {
    std::vector<int> out;
    for (int b : basis)
        if (g.neighborhood(basis.without(b)) == covered) out.push_back(b);
    return out;
}

}  // namespace

ConditionReport verify_bc_condition(const Matroid& m, const TropConfig& config) {
    check_config(m, config);
    return check_pairs(config, m.bases(), m.cocircuits(), false);
}

ConditionReport verify_two_cocircuit_condition(const Matroid& m, const TropConfig& config) {
    check_config(m, config);
    if (m.rank() != config.d + 1)
        throw InputError("the two-cocircuit condition needs rank = d+1");
    auto cocircuits = m.cocircuits();
    return check_pairs(config, cocircuits, cocircuits, true);
}

ColorfulOutcome colorful_basis(const Matroid& m, const TropConfig& config, std::optional<int> pin) {
    check_config(m, config);
    if (pin) {
        if (*pin < 0 || *pin >= m.n()) throw InputError("pinned element out of range");
        if (!m.is_independent(SmallSet::of({*pin}))) throw InputError("pinned element is a loop");
    }

    CovectorGraph g = covector_graph(config, zero_target(config.d));
    SmallSet all = g.all_sectors();
    SmallSet basis = lex_greedy_basis(m, pin);
    std::vector<TraceStep> trace;
    std::optional<ConditionWitness> stall_witness;

    while (true) {
        SmallSet covered = g.neighborhood(basis);
        if (covered == all) return found_outcome(basis, config, std::move(trace));
        int sector = (all - covered).min();

        int leaving = -1;
        for (int b : basis) {
            if (pin && b == *pin) continue;
            if (g.neighborhood(basis.without(b)) == covered) {
                leaving = b;
                break;
            }
        }
        if (leaving < 0) break;  // pigeonhole needs |B| > |N(B)|; not guaranteed here

        SmallSet cocircuit = m.fundamental_cocircuit(basis, leaving);
        int entering = -1;
        for (int c : cocircuit) {
            if (g.adj[static_cast<std::size_t>(c)].contains(sector)) {
                entering = c;
                break;
            }
        }
        if (entering < 0) {
            // the pair (basis, cocircuit) leaves the sector empty
            stall_witness = ConditionWitness{basis, cocircuit, sector};
            break;
        }
        trace.push_back(TraceStep{basis, covered, leaving, cocircuit, std::nullopt, entering, sector});
        basis = basis.without(leaving).with(entering);
    }

    if (auto b = exhaustive_covering_basis(m, g, pin))
        return found_outcome(*b, config, std::move(trace));

    ColorfulOutcome out;
    out.trace = std::move(trace);
    if (stall_witness) {
        out.status = ColorfulOutcome::Status::violated;
        out.witness = stall_witness;
        return out;
    }
    ConditionReport report = verify_bc_condition(m, config);
    if (!report.ok) {
        out.status = ColorfulOutcome::Status::violated;
        out.witness = report.witness;
    } else {
        out.status = ColorfulOutcome::Status::not_found;
    }
    return out;
}

ColorfulOutcome colorful_basis_two_cocircuit(const Matroid& m, const TropConfig& config) {
    check_config(m, config);
    if (m.rank() != config.d + 1)
        throw InputError("the two-cocircuit search needs rank = d+1");

    CovectorGraph g = covector_graph(config, zero_target(config.d));
    SmallSet all = g.all_sectors();
    SmallSet basis = lex_greedy_basis(m, std::nullopt);
    std::vector<TraceStep> trace;
    std::optional<ConditionWitness> stall_witness;

    while (true) {
        SmallSet covered = g.neighborhood(basis);
        if (covered == all) return found_outcome(basis, config, std::move(trace));

        std::vector<int> redundant = redundant_elements(g, basis, covered);
        if (redundant.size() < 2) break;  // cannot happen at rank d+1; kept as a safety net
        int p = redundant[0], q = redundant[1];
        SmallSet cp = m.fundamental_cocircuit(basis, p);
        SmallSet cq = m.fundamental_cocircuit(basis, q);

        int entering = -1;
        for (int r : cp | cq) {
            if (!(g.adj[static_cast<std::size_t>(r)] - covered).empty()) {
                entering = r;
                break;
            }
        }
        if (entering < 0) {
            SmallSet pair_covered = g.neighborhood(cp | cq);
            stall_witness = ConditionWitness{cp, cq, (all - pair_covered).min()};
            break;
        }
        int leaving = cp.contains(entering) ? p : q;
        int sector = (g.adj[static_cast<std::size_t>(entering)] - covered).min();
        trace.push_back(TraceStep{basis, covered, leaving, cp, cq, entering, sector});
        basis = basis.without(leaving).with(entering);
    }

    if (auto b = exhaustive_covering_basis(m, g, std::nullopt))
        return found_outcome(*b, config, std::move(trace));

    ColorfulOutcome out;
    out.trace = std::move(trace);
    if (stall_witness) {
        out.status = ColorfulOutcome::Status::violated;
        out.witness = stall_witness;
        return out;
    }
    ConditionReport report = verify_two_cocircuit_condition(m, config);
    if (!report.ok) {
        out.status = ColorfulOutcome::Status::violated;
        out.witness = report.witness;
    } else {
        out.status = ColorfulOutcome::Status::not_found;
    }
    return out;
}

RadoReport generic_rado_check(const Matroid& m, const TropConfig& config) {
    check_config(m, config);
    CovectorGraph g = covector_graph(config, zero_target(config.d));
    RadoReport report;
    for (SmallSet a : g.adj)
        if (a.size() != 1) return report;  // generic = false, rado fields absent
    report.generic = true;

    int sectors = config.d + 1;
    std::vector<SmallSet> preimage(static_cast<std::size_t>(sectors));
    for (int e = 0; e < config.n(); ++e) preimage[static_cast<std::size_t>(g.adj[static_cast<std::size_t>(e)].min())].insert(e);

    for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << sectors); ++bits) {
        SmallSet j(bits);
        SmallSet united;
        for (int s : j) united |= preimage[static_cast<std::size_t>(s)];
        if (m.rank(united) < j.size()) {
            report.rado_holds = false;
            report.violating_sectors = j;
            return report;
        }
    }
    report.rado_holds = true;

    // independent covering transversal: one element per sector, lexicographic
    // backtracking; disjoint preimages make the choices automatically distinct
    SmallSet chosen;
    std::vector<int> pick(static_cast<std::size_t>(sectors), -1);
    int s = 0;
    while (s >= 0 && s < sectors) {
        const SmallSet& pre = preimage[static_cast<std::size_t>(s)];
        int start = pick[static_cast<std::size_t>(s)] + 1;
        if (pick[static_cast<std::size_t>(s)] >= 0) chosen.erase(pick[static_cast<std::size_t>(s)]);
        int found = -1;
        for (int e : pre) {
            if (e < start) continue;
            if (m.is_independent(chosen.with(e))) {
                found = e;
                break;
            }
        }
        if (found < 0) {
            pick[static_cast<std::size_t>(s)] = -1;
            --s;
            continue;
        }
        pick[static_cast<std::size_t>(s)] = found;
        chosen.insert(found);
        ++s;
    }
    if (s == sectors) report.transversal = chosen;
    return report;
}

}  // namespace tropmat
