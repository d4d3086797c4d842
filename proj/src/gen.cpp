#include "tropmat/gen.hpp"

#include <algorithm>

namespace tropmat::gen {

namespace {

json plane_fixture(const std::vector<std::vector<int>>& blocks,
                   const std::vector<std::pair<std::string, std::vector<json>>>& points,
                   const json& origin) {
    json blocks_json = json::array();
    for (const auto& b : blocks) blocks_json.push_back(b);
    json labels = json::array();
    json pts = json::object();
    for (const auto& [label, coords] : points) {
        labels.push_back(label);
        pts[label] = coords;
    }
    return json{{"matroid", json{{"n", static_cast<int>(points.size())},
                                 {"kind", json{{"partition", blocks_json}}}}},
                {"labels", labels},
                {"config", json{{"d", 2}, {"points", pts}, {"origin", origin}}}};
}

}  // namespace

json fig1() {
    return plane_fixture({{0, 1}, {2, 3}, {4}},
                         {{"r1", {-2, 1}},
                          {"r2", {-2, 0}},
                          {"g1", {2, 1}},
                          {"g2", {2, 2}},
                          {"b1", {0, -1}}},
                         json::array({0, 0}));
}

json fig2() {
    return plane_fixture({{0, 1}, {2, 3}, {4, 5, 6, 7}},
                         {{"r1", {-2, 1}},
                          {"r2", {-2, -1}},
                          {"g1", {2, 1}},
                          {"g2", {2, -1}},
                          {"b1", {1, 1}},
                          {"b2", {1, 0}},
                          {"b3", {-1, 1}},
                          {"b4", {-1, 0}}},
                         json::array({0, "1/2"}));
}

Matroid random_matroid(int n, Rng& rng, int max_rank, const std::string& kind) {
    static const std::vector<std::string> kinds = {"partition", "uniform", "graphic", "explicit",
                                                   "truncation"};
    std::string chosen = kind;
    if (chosen == "any") chosen = kinds[rng.below(kinds.size())];
    GroundSet ground(n);

    if (chosen == "partition") {
        int num_blocks = rng.range(1, std::min(n, max_rank));
        // random assignment with every block nonempty: seed one element each
        std::vector<int> elems(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) elems[static_cast<std::size_t>(i)] = i;
        for (int i = n - 1; i > 0; --i) std::swap(elems[static_cast<std::size_t>(i)], elems[rng.below(static_cast<std::uint64_t>(i + 1))]);
        std::vector<SmallSet> blocks(static_cast<std::size_t>(num_blocks));
        for (int i = 0; i < n; ++i) {
            int b = i < num_blocks ? i : rng.range(0, num_blocks - 1);
            blocks[static_cast<std::size_t>(b)].insert(elems[static_cast<std::size_t>(i)]);
        }
        return Matroid::partition(std::move(ground), std::move(blocks));
    }
    if (chosen == "uniform") {
        return Matroid::uniform(std::move(ground), rng.range(1, std::min(n, max_rank)));
    }
    if (chosen == "graphic") {
        // spanning-tree rank = vertices - components <= max_rank
        int vertices = rng.range(2, std::min(n + 1, max_rank + 1));
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < n; ++i) {
            int u = rng.range(0, vertices - 1);
            int v = rng.range(0, vertices - 1);
            edges.emplace_back(u, v);  // loops and parallels allowed
        }
        return Matroid::graphic(std::move(ground), std::move(edges));
    }
    if (chosen == "explicit") {
        Matroid base = random_matroid(n, rng, max_rank,
                                      kinds[rng.below(2)]);  // partition or uniform
        return Matroid::from_bases(std::move(ground), base.bases());
    }
    if (chosen == "truncation") {
        Matroid inner = random_matroid(n, rng, SmallSet::max_elements,
                                       kinds[rng.below(3)]);  // partition, uniform or graphic
        int r = inner.rank();
        int k = std::min(r == 0 ? 0 : rng.range(1, r), max_rank);
        return Matroid::truncation(inner, k);
    }
    throw InputError("unknown matroid kind \"" + kind + "\"");
}

namespace {

Rational random_half(Rng& rng) { return Rational(rng.range(-4, 4), 2); }

}  // namespace

TropConfig random_trop_config(int n, int d, Rng& rng, int ninf_pct) {
    std::vector<TropVec> points;
    for (int e = 0; e < n; ++e) {
        TropVec v(static_cast<std::size_t>(d));
        for (int k = 0; k < d; ++k)
            if (!rng.chance(static_cast<std::uint64_t>(ninf_pct), 100))
                v[static_cast<std::size_t>(k)] = Trop::of(random_half(rng));
        points.push_back(std::move(v));
    }
    return TropConfig(d, std::move(points));
}

TropConfig random_generic_config(int n, int d, Rng& rng) {
    std::vector<TropVec> points;
    for (int e = 0; e < n; ++e) {
        TropVec v(static_cast<std::size_t>(d));
        int sector = rng.range(0, d);  // d means the virtual sector
        if (sector < d) {
            Rational top = Rational(rng.range(1, 4), 2);
            v[static_cast<std::size_t>(sector)] = Trop::of(top);
            for (int k = 0; k < d; ++k) {
                if (k == sector) continue;
                if (rng.chance(30, 100)) continue;  // -inf
                v[static_cast<std::size_t>(k)] = Trop::of(top - Rational(rng.range(1, 4), 2));
            }
        } else {
            for (int k = 0; k < d; ++k)
                if (!rng.chance(30, 100))
                    v[static_cast<std::size_t>(k)] = Trop::of(Rational(-rng.range(1, 4), 2));
        }
        points.push_back(std::move(v));
    }
    return TropConfig(d, std::move(points));
}

RatConfig random_rat_config(int n, int d, Rng& rng, bool with_origin_point) {
    std::vector<RatVec> points;
    for (int e = 0; e < n; ++e) {
        RatVec v(static_cast<std::size_t>(d));
        bool zero = with_origin_point && rng.chance(15, 100);
        for (int k = 0; k < d; ++k) v[static_cast<std::size_t>(k)] = zero ? Rational(0) : random_half(rng);
        points.push_back(std::move(v));
    }
    return RatConfig(d, std::move(points));
}

ThreeDM random_threedm(int k, int num_edges, Rng& rng) {
    if (k <= 0) throw InputError("part size must be positive");
    std::vector<ThreeDM::Edge> edges;
    for (int a = 0; a < k; ++a)  // keep every color class nonempty
        edges.push_back(ThreeDM::Edge{a, rng.range(0, k - 1), rng.range(0, k - 1)});
    while (static_cast<int>(edges.size()) < num_edges)
        edges.push_back(ThreeDM::Edge{rng.range(0, k - 1), rng.range(0, k - 1), rng.range(0, k - 1)});
    std::sort(edges.begin(), edges.end(), [](const ThreeDM::Edge& x, const ThreeDM::Edge& y) {
        return std::tie(x.a, x.b, x.c) < std::tie(y.a, y.b, y.c);
    });
    edges.erase(std::unique(edges.begin(), edges.end(),
                            [](const ThreeDM::Edge& x, const ThreeDM::Edge& y) {
                                return std::tie(x.a, x.b, x.c) == std::tie(y.a, y.b, y.c);
                            }),
                edges.end());
    return ThreeDM(k, std::move(edges));
}

DualHornSystem random_horn(int n, int num_constraints, Rng& rng) {
    std::vector<DualHornSystem::Constraint> constraints;
    for (int i = 0; i < num_constraints; ++i) {
        DualHornSystem::Constraint c;
        c.is_equation = rng.chance(40, 100);
        if (!c.is_equation) c.lhs = rng.range(0, n - 1);
        int size = rng.range(c.is_equation ? 1 : 0, std::min(n, 4));
        for (int s = 0; s < size; ++s) c.set.push_back(rng.range(0, n - 1));
        constraints.push_back(std::move(c));
    }
    return DualHornSystem(n, std::move(constraints));
}

ColorfulLP random_clp(int rows, int cols, int num_classes, Rng& rng) {
    if (num_classes > cols) throw InputError("more classes than columns");
    if (num_classes < 1) throw InputError("need at least one class");
    std::vector<TropVec> a(static_cast<std::size_t>(rows), TropVec(static_cast<std::size_t>(cols)));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            if (!rng.chance(40, 100))
                a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = Trop::of(random_half(rng));
    std::vector<std::vector<int>> classes(static_cast<std::size_t>(num_classes));
    for (int j = 0; j < cols; ++j) {
        int c = j < num_classes ? j : rng.range(0, num_classes - 1);
        classes[static_cast<std::size_t>(c)].push_back(j);
    }
    return ColorfulLP(TropMatrix(rows, cols, std::move(a)), std::move(classes));
}

}  // namespace tropmat::gen
