#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "tropmat/errors.hpp"
#include "tropmat/small_set.hpp"

namespace tropmat {

/// Ground set {0,...,n-1} with optional element names.
struct GroundSet {
    int n = 0;
    std::optional<std::vector<std::string>> labels;  // distinct, size n

    GroundSet() = default;
    explicit GroundSet(int n_, std::optional<std::vector<std::string>> labels_ = std::nullopt);

    std::string label(int e) const;
};

/// Finite matroid on at most 64 elements, given by an independence oracle.
/// Concrete realizations: partition, uniform, graphic (multigraphs, a graph
/// loop is a matroid loop), explicit basis list, and truncation. Values are
/// immutable after construction and safe to share across threads.
class Matroid {
public:
    struct PartitionKind {
        std::vector<SmallSet> blocks;  // disjoint, nonempty, cover the ground set
    };
    struct UniformKind {
        int r = 0;
    };
    struct GraphicKind {
        std::vector<std::pair<int, int>> edges;  // element i = i-th edge
        int num_vertices = 0;                    // vertices are 0..num_vertices-1
    };
    struct ExplicitKind {
        std::vector<SmallSet> bases;  // validated: equal size, exchange axiom
    };
    struct TruncationKind {
        std::shared_ptr<const Matroid> inner;
        int k = 0;
    };
    using Kind = std::variant<PartitionKind, UniformKind, GraphicKind, ExplicitKind, TruncationKind>;

    /// Independent sets meet every block at most once.
    static Matroid partition(GroundSet ground, std::vector<SmallSet> blocks);
    /// U_{r,n}: independent iff |S| <= r.
    static Matroid uniform(GroundSet ground, int r);
    /// Elements are edges of a multigraph; independent iff the edge set is a forest.
    static Matroid graphic(GroundSet ground, std::vector<std::pair<int, int>> edges);
    /// Built from an explicit basis list; rejects families violating the
    /// exchange axiom (inputs are not trusted to be matroids).
    static Matroid from_bases(GroundSet ground, std::vector<SmallSet> bases);
    /// Independence additionally capped at cardinality k, 0 <= k <= rank.
    static Matroid truncation(const Matroid& inner, int k);

    const GroundSet& ground() const { return ground_; }
    int n() const { return ground_.n; }
    const Kind& kind() const { return kind_; }

    bool is_independent(SmallSet s) const;
    int rank(SmallSet s) const;
    int rank() const { return rank(SmallSet::full(n())); }

    /// All bases, lexicographically ordered as sorted element tuples.
    std::vector<SmallSet> bases() const;

    /// All cocircuits (complements of hyperplanes), found through the rank
    /// oracle: C with rank(E\C) = rank(E)-1 and rank((E\C)+c) = rank(E) for
    /// every c in C. Empty for rank-0 matroids. Lexicographically ordered.
    std::vector<SmallSet> cocircuits() const;

    /// {f : (B\e)+f is a basis}; requires B a basis, e in B. The result is a
    /// cocircuit meeting B exactly in {e}.
    SmallSet fundamental_cocircuit(SmallSet basis, int e) const;

    /// Explicit matroid whose bases are the complements of this one's.
    Matroid dual() const;
    Matroid truncate(int k) const { return truncation(*this, k); }

    /// Elements contained in no independent set.
    SmallSet loops() const;

private:
    Matroid(GroundSet ground, Kind kind) : ground_(std::move(ground)), kind_(std::move(kind)) {}

    void check_subset(SmallSet s) const;
    bool indep_unchecked(SmallSet s) const;

    GroundSet ground_;
    Kind kind_;
};

}  // namespace tropmat
