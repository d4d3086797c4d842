#include "tropmat/tropical.hpp"

#include <algorithm>

namespace tropmat {

TropConfig::TropConfig(int d_, std::vector<TropVec> points_) : d(d_), points(std::move(points_)) {
    if (d < 0 || d + 1 > SmallSet::max_elements) throw InputError("dimension must be between 0 and 63");
    if (static_cast<int>(points.size()) > SmallSet::max_elements)
        throw InputError("configurations are capped at 64 points");
    for (const TropVec& v : points)
        if (static_cast<int>(v.size()) != d) throw InputError("point dimension mismatch");
}

TropConfig TropConfig::restrict(SmallSet s) const {
    std::vector<TropVec> pts;
    for (int e : s) pts.push_back(points[static_cast<std::size_t>(e)]);
    return TropConfig(d, std::move(pts));
}

SmallSet sector_neighbors(const TropVec& v, const std::vector<Rational>& p) {
    int d = static_cast<int>(p.size());
    if (static_cast<int>(v.size()) != d) throw InputError("point dimension mismatch");
    // argmax of (v_1 - p_1, ..., v_d - p_d, 0); the trailing virtual 0 always
    // competes, so the result is nonempty and -inf coordinates never win.
    SmallSet arg = SmallSet::of({d});
    Rational best = 0;
    for (int k = 0; k < d; ++k) {
        const Trop& vk = v[static_cast<std::size_t>(k)];
        if (!vk.finite()) continue;
        Rational diff = vk.value() - p[static_cast<std::size_t>(k)];
        if (diff > best) {
            best = diff;
            arg = SmallSet::of({k});
        } else if (diff == best) {
            arg.insert(k);
        }
    }
    return arg;
}

CovectorGraph covector_graph(const TropConfig& config, const std::vector<Rational>& p) {
    if (static_cast<int>(p.size()) != config.d) throw InputError("target dimension mismatch");
    CovectorGraph g;
    g.d = config.d;
    g.adj.reserve(config.points.size());
    for (const TropVec& v : config.points) g.adj.push_back(sector_neighbors(v, p));
    return g;
}

Membership tropical_membership(const std::vector<Rational>& p, const TropConfig& config) {
    CovectorGraph g = covector_graph(config, p);
    SmallSet covered;
    for (SmallSet a : g.adj) covered |= a;
    Membership result;
    if (covered != g.all_sectors()) {
        result.inside = false;
        result.uncovered_sector = (g.all_sectors() - covered).min();
        return result;
    }
    result.inside = true;
    result.lambda.reserve(config.points.size());
    for (const TropVec& v : config.points) {
        Rational m = 0;  // the virtual coordinate
        for (int k = 0; k < config.d; ++k) {
            const Trop& vk = v[static_cast<std::size_t>(k)];
            if (!vk.finite()) continue;
            Rational diff = vk.value() - p[static_cast<std::size_t>(k)];
            if (diff > m) m = diff;
        }
        result.lambda.push_back(Trop::of(-m));
    }
    return result;
}

Membership tropical_membership(const TropVec& p, const TropConfig& config) {
    std::vector<Rational> finite;
    finite.reserve(p.size());
    for (const Trop& t : p) {
        if (!t.finite())
            throw InputError("membership targets with -inf coordinates are not supported");
        finite.push_back(t.value());
    }
    return tropical_membership(finite, config);
}

TropVec eval_combination(const TropVec& lambda, const TropConfig& config) {
    if (lambda.size() != config.points.size())
        throw InputError("coefficient vector length does not match the configuration");
    TropVec out(static_cast<std::size_t>(config.d));
    for (std::size_t j = 0; j < config.points.size(); ++j)
        for (int k = 0; k < config.d; ++k)
            out[static_cast<std::size_t>(k)] = trop_add(
                out[static_cast<std::size_t>(k)],
                trop_mul(lambda[j], config.points[j][static_cast<std::size_t>(k)]));
    return out;
}

SupportComplex support_complex(const TropConfig& config, const std::vector<Rational>& p) {
    CovectorGraph g = covector_graph(config, p);
    std::vector<SmallSet> candidates;
    for (int i = 0; i <= g.d; ++i) {
        SmallSet missing;  // elements whose sector set avoids i
        for (int e = 0; e < config.n(); ++e)
            if (!g.adj[static_cast<std::size_t>(e)].contains(i)) missing.insert(e);
        candidates.push_back(missing);
    }
    std::vector<SmallSet> facets;
    for (SmallSet c : candidates) {
        bool maximal = true;
        for (SmallSet o : candidates)
            if (c != o && c.subset_of(o)) {
                maximal = false;
                break;
            }
        if (maximal && std::find(facets.begin(), facets.end(), c) == facets.end())
            facets.push_back(c);
    }
    std::sort(facets.begin(), facets.end(), SmallSet::lex_less);
    return SupportComplex{config.n(), std::move(facets)};
}

TropConfig realize_complex(const SupportComplex& complex) {
    const auto& facets = complex.facets;
    int m = static_cast<int>(facets.size());
    if (m == 0) throw InputError("a complex needs at least one facet");
    if (m > SmallSet::max_elements) throw InputError("facet count is capped at 64");
    for (SmallSet f : facets) {
        if (!f.subset_of(SmallSet::full(complex.n))) throw InputError("facet element out of range");
        for (SmallSet o : facets)
            if (f != o && f.subset_of(o)) throw InputError("facet list must be an antichain");
    }

    std::vector<TropVec> points;
    for (int e = 0; e < complex.n; ++e) {
        SmallSet target;  // sectors this element must be adjacent to: {i : e not in facet i}
        for (int i = 0; i < m; ++i)
            if (!facets[static_cast<std::size_t>(i)].contains(e)) target.insert(i);
        if (target.empty())
            throw InputError("element " + std::to_string(e) +
                             " lies in every facet; such a complex has no realization");
        // Coordinates 0..m-2 are real, sector m-1 is the virtual one. When the
        // virtual sector is required, the real target coordinates tie with 0;
        // otherwise they sit strictly above it.
        bool wants_virtual = target.contains(m - 1);
        Rational hit = wants_virtual ? Rational(0) : Rational(1);
        TropVec v(static_cast<std::size_t>(m - 1));
        for (int k = 0; k < m - 1; ++k)
            if (target.contains(k)) v[static_cast<std::size_t>(k)] = Trop::of(hit);
        points.push_back(std::move(v));
    }
    return TropConfig(m - 1, std::move(points));
}

}  // namespace tropmat
