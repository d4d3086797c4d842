#include "tropmat/matroid.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace tropmat {

GroundSet::GroundSet(int n_, std::optional<std::vector<std::string>> labels_)
    : n(n_), labels(std::move(labels_)) {
    if (n < 0 || n > SmallSet::max_elements)
        throw InputError("ground set size must be between 0 and 64, got " + std::to_string(n));
    if (labels) {
        if (static_cast<int>(labels->size()) != n)
            throw InputError("label list size does not match ground set size");
        std::set<std::string> seen(labels->begin(), labels->end());
        if (static_cast<int>(seen.size()) != n) throw InputError("element labels must be distinct");
    }
}

std::string GroundSet::label(int e) const {
    if (labels) return (*labels)[static_cast<std::size_t>(e)];
    return std::to_string(e);
}

namespace {

// Forest test on a multigraph via union-find; a loop edge is dependent.
bool edges_form_forest(const std::vector<std::pair<int, int>>& edges, int num_vertices, SmallSet s) {
    std::vector<int> parent(static_cast<std::size_t>(num_vertices));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[static_cast<std::size_t>(v)] != v) {
            parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
            v = parent[static_cast<std::size_t>(v)];
        }
        return v;
    };
    for (int e : s) {
        auto [u, v] = edges[static_cast<std::size_t>(e)];
        if (u == v) return false;
        int ru = find(u), rv = find(v);
        if (ru == rv) return false;
        parent[static_cast<std::size_t>(ru)] = rv;
    }
    return true;
}

void validate_exchange(const std::vector<SmallSet>& bases) {
    if (bases.empty()) throw InputError("a matroid needs at least one basis");
    int card = bases.front().size();
    std::set<std::uint64_t> family;
    for (SmallSet b : bases) {
        if (b.size() != card) throw InputError("explicit bases must all have the same cardinality");
        family.insert(b.raw());
    }
    for (SmallSet b1 : bases) {
        for (SmallSet b2 : bases) {
            for (int e : b1 - b2) {
                bool ok = false;
                for (int f : b2 - b1) {
                    if (family.count(b1.without(e).with(f).raw())) {
                        ok = true;
                        break;
                    }
                }
                if (!ok)
                    throw InputError("explicit basis family violates the exchange axiom at " +
                                     b1.to_string() + ", " + b2.to_string() + ", element " +
                                     std::to_string(e));
            }
        }
    }
}

}  // namespace

Matroid Matroid::partition(GroundSet ground, std::vector<SmallSet> blocks) {
    SmallSet seen;
    for (SmallSet b : blocks) {
        if (b.empty()) throw InputError("partition blocks must be nonempty");
        if (!b.subset_of(SmallSet::full(ground.n)))
            throw InputError("partition block contains an element out of range");
        if (b.intersects(seen)) throw InputError("partition blocks must be disjoint");
        seen |= b;
    }
    if (seen != SmallSet::full(ground.n)) throw InputError("partition blocks must cover the ground set");
    return Matroid(std::move(ground), PartitionKind{std::move(blocks)});
}

Matroid Matroid::uniform(GroundSet ground, int r) {
    if (r < 0 || r > ground.n) throw InputError("uniform rank out of range");
    return Matroid(std::move(ground), UniformKind{r});
}

Matroid Matroid::graphic(GroundSet ground, std::vector<std::pair<int, int>> edges) {
    if (static_cast<int>(edges.size()) != ground.n)
        throw InputError("graphic matroid needs exactly one edge per element");
    int num_vertices = 0;
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0) throw InputError("graph vertices must be nonnegative");
        num_vertices = std::max({num_vertices, u + 1, v + 1});
    }
    return Matroid(std::move(ground), GraphicKind{std::move(edges), num_vertices});
}

Matroid Matroid::from_bases(GroundSet ground, std::vector<SmallSet> bases) {
    std::sort(bases.begin(), bases.end(), SmallSet::lex_less);
    bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
    for (SmallSet b : bases)
        if (!b.subset_of(SmallSet::full(ground.n)))
            throw InputError("explicit basis contains an element out of range");
    validate_exchange(bases);
    return Matroid(std::move(ground), ExplicitKind{std::move(bases)});
}

Matroid Matroid::truncation(const Matroid& inner, int k) {
    if (k < 0 || k > inner.rank()) throw InputError("truncation rank bound out of range");
    return Matroid(inner.ground(), TruncationKind{std::make_shared<const Matroid>(inner), k});
}

void Matroid::check_subset(SmallSet s) const {
    if (!s.subset_of(SmallSet::full(n())))
        throw InputError("subset contains an element outside the ground set");
}

bool Matroid::indep_unchecked(SmallSet s) const {
    return std::visit(
        [&](const auto& kind) -> bool {
            using K = std::decay_t<decltype(kind)>;
            if constexpr (std::is_same_v<K, PartitionKind>) {
                for (SmallSet b : kind.blocks)
                    if ((b & s).size() > 1) return false;
                return true;
            } else if constexpr (std::is_same_v<K, UniformKind>) {
                return s.size() <= kind.r;
            } else if constexpr (std::is_same_v<K, GraphicKind>) {
                return edges_form_forest(kind.edges, kind.num_vertices, s);
            } else if constexpr (std::is_same_v<K, ExplicitKind>) {
                for (SmallSet b : kind.bases)
                    if (s.subset_of(b)) return true;
                return false;
            } else {
                static_assert(std::is_same_v<K, TruncationKind>);
                return s.size() <= kind.k && kind.inner->indep_unchecked(s);
            }
        },
        kind_);
}

bool Matroid::is_independent(SmallSet s) const {
    check_subset(s);
    return indep_unchecked(s);
}

int Matroid::rank(SmallSet s) const {
    check_subset(s);
    // greedy augmentation; the order does not matter by the exchange property
    SmallSet indep;
    for (int e : s)
        if (indep_unchecked(indep.with(e))) indep.insert(e);
    return indep.size();
}

std::vector<SmallSet> Matroid::bases() const {
    int r = rank();
    std::vector<SmallSet> out;
    for_each_combination(n(), r, [&](SmallSet s) {
        if (indep_unchecked(s)) out.push_back(s);
    });
    return out;
}

std::vector<SmallSet> Matroid::cocircuits() const {
    int r = rank();
    std::vector<SmallSet> out;
    if (r == 0) return out;
    SmallSet all = SmallSet::full(n());
    for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << n()); ++bits) {
        SmallSet c(bits);
        SmallSet rest = all - c;
        if (rank(rest) != r - 1) continue;
        bool hyperplane = true;
        for (int e : c) {
            if (rank(rest.with(e)) != r) {
                hyperplane = false;
                break;
            }
        }
        if (hyperplane) out.push_back(c);
    }
    std::sort(out.begin(), out.end(), SmallSet::lex_less);
    return out;
}

SmallSet Matroid::fundamental_cocircuit(SmallSet basis, int e) const {
    check_subset(basis);
    int r = rank();
    if (basis.size() != r || !indep_unchecked(basis)) throw InputError("not a basis");
    if (!basis.contains(e)) throw InputError("element is not in the basis");
    SmallSet rest = basis.without(e);
    SmallSet out;
    for (int f = 0; f < n(); ++f)
        if (indep_unchecked(rest.with(f)) && rest.with(f).size() == r) out.insert(f);
    return out;
}

Matroid Matroid::dual() const {
    SmallSet all = SmallSet::full(n());
    std::vector<SmallSet> dual_bases;
    for (SmallSet b : bases()) dual_bases.push_back(all - b);
    return from_bases(ground_, std::move(dual_bases));
}

SmallSet Matroid::loops() const {
    SmallSet out;
    for (int e = 0; e < n(); ++e)
        if (!indep_unchecked(SmallSet::of({e}))) out.insert(e);
    return out;
}

}  // namespace tropmat
