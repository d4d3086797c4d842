#pragma once

#include <optional>
#include <vector>

#include "tropmat/colorful.hpp"
#include "tropmat/matroid.hpp"
#include "tropmat/rational.hpp"
#include "tropmat/small_set.hpp"

namespace tropmat {

using RatVec = std::vector<Rational>;

/// Point configuration V : E -> Q^d.
struct RatConfig {
    int d = 0;
    std::vector<RatVec> points;

    RatConfig() = default;
    RatConfig(int d_, std::vector<RatVec> points_);

    int n() const { return static_cast<int>(points.size()); }
    RatConfig restrict(SmallSet s) const;
};

/// Convex combination of the listed points equal to the origin: positive
/// rational weights summing to 1 over a support of at most d+1 points.
struct ConvexCertificate {
    std::vector<int> support;   // indices into the queried point list
    std::vector<Rational> weights;
};

/// Decides 0 in conv(points) by scanning supports of size at most d+1 and
/// solving each (d+1) x |support| system exactly; a minimal support is
/// affinely independent, so full-column-rank systems with a positive unique
/// solution are exhaustive. Returns the certificate found, or nullopt.
std::optional<ConvexCertificate> conv_contains_origin(const std::vector<RatVec>& points, int d);

/// 0 in conv(V(B u C)) for every basis/cocircuit pair, by full enumeration;
/// lexicographically first violation otherwise. The sector field of the
/// witness is unused (-1) for Euclidean reports.
ConditionReport verify_km_condition(const Matroid& m, const RatConfig& config);

/// 0 in conv(V(S)) for every inclusion-minimal S meeting every basis in at
/// least two elements (found by a size-ascending subset scan).
ConditionReport verify_corank2_condition(const Matroid& m, const RatConfig& config);

struct KmBasis {
    SmallSet basis;
    ConvexCertificate certificate;  // support indices refer to elements of the basis
};

/// First basis (lexicographic, containing the pin when given) whose point
/// set captures the origin.
std::optional<KmBasis> find_km_basis(const Matroid& m, const RatConfig& config,
                                     std::optional<int> pin = std::nullopt);

}  // namespace tropmat
