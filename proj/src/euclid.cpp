#include "tropmat/euclid.hpp"

#include <algorithm>

namespace tropmat {

RatConfig::RatConfig(int d_, std::vector<RatVec> points_) : d(d_), points(std::move(points_)) {
    if (d < 0) throw InputError("dimension must be nonnegative");
    if (static_cast<int>(points.size()) > SmallSet::max_elements)
        throw InputError("configurations are capped at 64 points");
    for (const RatVec& v : points)
        if (static_cast<int>(v.size()) != d) throw InputError("point dimension mismatch");
}

RatConfig RatConfig::restrict(SmallSet s) const {
    std::vector<RatVec> pts;
    for (int e : s) pts.push_back(points[static_cast<std::size_t>(e)]);
    return RatConfig(d, std::move(pts));
}

namespace {

/// Solves M w = rhs exactly for a full-column-rank M (rows x cols, rows >=
/// cols). Returns nullopt when the columns are dependent or the system is
/// inconsistent.
std::optional<std::vector<Rational>> solve_exact(std::vector<std::vector<Rational>> m,
                                                 std::vector<Rational> rhs) {
    std::size_t rows = m.size();
    std::size_t cols = rows ? m[0].size() : 0;
    std::vector<std::size_t> pivot_row(cols);
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols; ++col) {
        std::size_t sel = row;
        while (sel < rows && m[sel][col] == 0) ++sel;
        if (sel == rows) return std::nullopt;  // column rank deficiency
        std::swap(m[sel], m[row]);
        std::swap(rhs[sel], rhs[row]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == row || m[i][col] == 0) continue;
            Rational factor = m[i][col] / m[row][col];
            for (std::size_t j = col; j < cols; ++j) m[i][j] -= factor * m[row][j];
            rhs[i] -= factor * rhs[row];
        }
        pivot_row[col] = row;
        ++row;
    }
    for (std::size_t i = row; i < rows; ++i)
        if (rhs[i] != 0) return std::nullopt;  // inconsistent
    std::vector<Rational> w(cols);
    for (std::size_t col = 0; col < cols; ++col)
        w[col] = rhs[pivot_row[col]] / m[pivot_row[col]][col];
    return w;
}

}  // namespace

std::optional<ConvexCertificate> conv_contains_origin(const std::vector<RatVec>& points, int d) {
    for (const RatVec& v : points)
        if (static_cast<int>(v.size()) != d) throw InputError("point dimension mismatch");
    int n = static_cast<int>(points.size());
    if (n > SmallSet::max_elements) throw InputError("point lists are capped at 64 entries");
    int max_support = std::min(n, d + 1);
    std::optional<ConvexCertificate> result;
    for (int k = 1; k <= max_support && !result; ++k) {
        for_each_combination(n, k, [&](SmallSet support) -> bool {
            // rows: d coordinates summing to 0, plus the affine row summing to 1
            std::vector<std::vector<Rational>> mat(static_cast<std::size_t>(d + 1));
            for (int r = 0; r <= d; ++r) mat[static_cast<std::size_t>(r)].reserve(static_cast<std::size_t>(k));
            for (int j : support) {
                for (int r = 0; r < d; ++r)
                    mat[static_cast<std::size_t>(r)].push_back(points[static_cast<std::size_t>(j)][static_cast<std::size_t>(r)]);
                mat[static_cast<std::size_t>(d)].push_back(1);
            }
            std::vector<Rational> rhs(static_cast<std::size_t>(d + 1));
            rhs[static_cast<std::size_t>(d)] = 1;
            auto w = solve_exact(std::move(mat), std::move(rhs));
            if (!w) return false;
            for (const Rational& wi : *w)
                if (wi <= 0) return false;
            result = ConvexCertificate{support.elements(), std::move(*w)};
            return true;
        });
    }
    return result;
}

namespace {

std::vector<RatVec> gather(const RatConfig& config, SmallSet s) {
    std::vector<RatVec> pts;
    for (int e : s) pts.push_back(config.points[static_cast<std::size_t>(e)]);
    return pts;
}

void check_config(const Matroid& m, const RatConfig& config) {
    if (config.n() != m.n())
        throw InputError("configuration must assign a point to every matroid element");
}

}  // namespace

ConditionReport verify_km_condition(const Matroid& m, const RatConfig& config) {
    check_config(m, config);
    auto bases = m.bases();
    auto cocircuits = m.cocircuits();
    for (SmallSet b : bases) {
        for (SmallSet c : cocircuits) {
            if (!conv_contains_origin(gather(config, b | c), config.d))
                return ConditionReport{false, ConditionWitness{b, c, -1}};
        }
    }
    return ConditionReport{true, std::nullopt};
}

ConditionReport verify_corank2_condition(const Matroid& m, const RatConfig& config) {
    check_config(m, config);
    auto bases = m.bases();
    auto meets_twice = [&](SmallSet s) {
        for (SmallSet b : bases)
            if ((s & b).size() < 2) return false;
        return true;
    };
    // the property is upward closed, so S is minimal iff no single removal keeps it
    std::vector<SmallSet> minimal;
    for (int k = 0; k <= m.n(); ++k) {
        for_each_combination(m.n(), k, [&](SmallSet s) {
            if (!meets_twice(s)) return;
            for (SmallSet seen : minimal)
                if (seen.subset_of(s)) return;
            minimal.push_back(s);
        });
    }
    for (SmallSet s : minimal) {
        if (!conv_contains_origin(gather(config, s), config.d))
            return ConditionReport{false, ConditionWitness{s, SmallSet{}, -1}};
    }
    return ConditionReport{true, std::nullopt};
}

std::optional<KmBasis> find_km_basis(const Matroid& m, const RatConfig& config,
                                     std::optional<int> pin) {
    check_config(m, config);
    if (pin) {
        if (*pin < 0 || *pin >= m.n()) throw InputError("pinned element out of range");
        if (!m.is_independent(SmallSet::of({*pin}))) throw InputError("pinned element is a loop");
    }
    for (SmallSet b : m.bases()) {
        if (pin && !b.contains(*pin)) continue;
        if (auto cert = conv_contains_origin(gather(config, b), config.d))
            return KmBasis{b, std::move(*cert)};
    }
    return std::nullopt;
}

}  // namespace tropmat
