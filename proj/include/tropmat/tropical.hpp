#pragma once

#include <optional>
#include <vector>

#include "tropmat/rational.hpp"
#include "tropmat/small_set.hpp"

namespace tropmat {

/// Max-plus scalar: an exact rational or -inf. Addition is max with -inf
/// neutral, multiplication is + with -inf absorbing. Exact arithmetic is
/// load-bearing: sector membership is decided by ties.
class Trop {
public:
    Trop() = default;  // -inf
    static Trop ninf() { return Trop(); }
    static Trop of(Rational v) {
        Trop t;
        t.value_ = std::move(v);
        return t;
    }

    bool finite() const { return value_.has_value(); }
    const Rational& value() const { return *value_; }

    friend Trop trop_add(const Trop& a, const Trop& b) {  // max
        if (!a.finite()) return b;
        if (!b.finite()) return a;
        return of(std::max(a.value(), b.value()));
    }
    friend Trop trop_mul(const Trop& a, const Trop& b) {  // +
        if (!a.finite() || !b.finite()) return ninf();
        return of(a.value() + b.value());
    }

    friend bool operator==(const Trop& a, const Trop& b) {
        if (a.finite() != b.finite()) return false;
        return !a.finite() || a.value() == b.value();
    }
    friend bool operator<(const Trop& a, const Trop& b) {
        if (!a.finite()) return b.finite();
        if (!b.finite()) return false;
        return a.value() < b.value();
    }
    friend bool operator<=(const Trop& a, const Trop& b) { return a < b || a == b; }

private:
    std::optional<Rational> value_;
};

using TropVec = std::vector<Trop>;

/// Point configuration V : E -> T_max^d; element i is points[i].
struct TropConfig {
    int d = 0;
    std::vector<TropVec> points;

    TropConfig() = default;
    TropConfig(int d_, std::vector<TropVec> points_);

    int n() const { return static_cast<int>(points.size()); }
    /// Configuration restricted to the elements of s (indices keep meaning
    /// through the accompanying element list).
    TropConfig restrict(SmallSet s) const;
};

/// Sectors {v : v_i - p_i >= v_k - p_k for all k} of a finite base point p,
/// with the virtual coordinate d+1 pinned to 0 on both sides. Returned as a
/// 0-based index set over {0,...,d}, where index d is the virtual sector.
/// Never empty.
SmallSet sector_neighbors(const TropVec& v, const std::vector<Rational>& p);

/// Bipartite adjacency between elements and the d+1 sectors of p.
struct CovectorGraph {
    int d = 0;
    std::vector<SmallSet> adj;  // per element, subset of {0..d}

    SmallSet neighborhood(SmallSet elems) const {
        SmallSet out;
        for (int e : elems) out |= adj[static_cast<std::size_t>(e)];
        return out;
    }
    SmallSet all_sectors() const { return SmallSet::full(d + 1); }
};

CovectorGraph covector_graph(const TropConfig& config, const std::vector<Rational>& p);

/// Result of a hull-membership query for a finite target.
struct Membership {
    bool inside = false;
    TropVec lambda;            // on inside: max-combination reproducing p with max lambda = 0
    int uncovered_sector = -1;  // on outside: smallest sector with no neighbor (0-based)
};

/// p lies in the max-plus hull of the configuration iff no sector of p is
/// isolated in the covector graph. The certificate is the pointwise-maximal
/// feasible coefficient vector, lambda_j = -max_k(v_jk - p_k, 0).
Membership tropical_membership(const std::vector<Rational>& p, const TropConfig& config);

/// Same query with the target given tropically; entries must be finite
/// (membership for targets with -inf entries is unsupported and rejected).
Membership tropical_membership(const TropVec& p, const TropConfig& config);

/// Coordinatewise max of lambda_j + v_j.
TropVec eval_combination(const TropVec& lambda, const TropConfig& config);

/// Simplicial complex given by its facets (an antichain). The complex with
/// sole facet {} is the empty complex; facet lists are never empty here.
struct SupportComplex {
    int n = 0;
    std::vector<SmallSet> facets;  // inclusion-maximal, lex sorted
};

/// Facets are the maximal sets among M_i = {e : sector i not adjacent to e}:
/// a subset lies in the complex iff its neighborhood misses some sector.
SupportComplex support_complex(const TropConfig& config, const std::vector<Rational>& p);

/// Builds a configuration in T_max^{m-1} whose support complex at target 0 is
/// exactly the given complex with m facets. Fails if some element lies in
/// every facet (its sector set would have to be empty, which cannot happen).
TropConfig realize_complex(const SupportComplex& complex);

}  // namespace tropmat
