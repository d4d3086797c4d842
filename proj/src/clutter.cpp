#include "tropmat/clutter.hpp"

#include <algorithm>
#include <set>

namespace tropmat {

Clutter::Clutter(int n_, std::vector<SmallSet> members_) : n(n_), members(std::move(members_)) {
    if (n < 0 || n > SmallSet::max_elements) throw InputError("clutter ground set size out of range");
    std::sort(members.begin(), members.end(), SmallSet::lex_less);
    members.erase(std::unique(members.begin(), members.end()), members.end());
    for (SmallSet m : members) {
        if (!m.subset_of(SmallSet::full(n))) throw InputError("clutter member out of range");
        for (SmallSet o : members)
            if (m != o && m.subset_of(o))
                throw InputError("clutter members must be pairwise incomparable");
    }
}

Clutter blocker(const Clutter& f) {
    std::vector<SmallSet> minimal;
    // size-ascending scan; a transversal is minimal iff no smaller one is inside it
    for (int k = 0; k <= f.n; ++k) {
        for_each_combination(f.n, k, [&](SmallSet t) {
            for (SmallSet m : f.members)
                if (!t.intersects(m)) return;
            for (SmallSet s : minimal)
                if (s.subset_of(t)) return;
            minimal.push_back(t);
        });
    }
    return Clutter(f.n, std::move(minimal));
}

std::optional<ExchangeWitness> exchange_axiom_violation(const Clutter& f) {
    std::set<std::uint64_t> family;
    for (SmallSet m : f.members) family.insert(m.raw());
    for (SmallSet b1 : f.members) {
        for (SmallSet b2 : f.members) {
            for (int e : b1 - b2) {
                bool ok = false;
                for (int x : b2 - b1) {
                    if (family.count(b1.without(e).with(x).raw())) {
                        ok = true;
                        break;
                    }
                }
                if (!ok) return ExchangeWitness{b1, b2, e};
            }
        }
    }
    return std::nullopt;
}

bool is_basis_clutter_by_blocker(const Clutter& f) {
    if (f.members.empty()) return false;
    Clutter blk = blocker(f);
    std::set<std::uint64_t> family;
    for (SmallSet m : f.members) family.insert(m.raw());
    for (SmallSet h : f.members) {
        for (SmallSet k : blk.members) {
            if ((h & k).size() != 1) continue;
            for (int x : k)
                if (!family.count((h - k).with(x).raw())) return false;
        }
    }
    return true;
}

}  // namespace tropmat
