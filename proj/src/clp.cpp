#include "tropmat/clp.hpp"

#include <algorithm>

namespace tropmat {

TropMatrix::TropMatrix(int rows_, int cols_, std::vector<TropVec> a_)
    : rows(rows_), cols(cols_), a(std::move(a_)) {
    if (rows < 0 || cols < 0) throw InputError("matrix dimensions must be nonnegative");
    if (rows > SmallSet::max_elements) throw InputError("matrices are capped at 64 rows");
    if (static_cast<int>(a.size()) != rows) throw InputError("row count mismatch");
    for (const TropVec& row : a)
        if (static_cast<int>(row.size()) != cols) throw InputError("column count mismatch");
}

std::vector<Rational> principal_solution(const TropMatrix& a) {
    std::vector<Rational> x(static_cast<std::size_t>(a.cols));
    for (int j = 0; j < a.cols; ++j) {
        bool any = false;
        Rational bound;
        for (int i = 0; i < a.rows; ++i) {
            const Trop& e = a.at(i, j);
            if (!e.finite()) continue;
            Rational candidate = -e.value();
            if (!any || candidate < bound) bound = candidate;
            any = true;
        }
        x[static_cast<std::size_t>(j)] = any ? bound : Rational(0);
    }
    return x;
}

TropVec trop_apply(const TropMatrix& a, const TropVec& x) {
    if (static_cast<int>(x.size()) != a.cols) throw InputError("vector length mismatch");
    TropVec out(static_cast<std::size_t>(a.rows));
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j)
            out[static_cast<std::size_t>(i)] =
                trop_add(out[static_cast<std::size_t>(i)], trop_mul(a.at(i, j), x[static_cast<std::size_t>(j)]));
    return out;
}

ColorfulLP::ColorfulLP(TropMatrix a_, std::vector<std::vector<int>> classes_)
    : a(std::move(a_)), classes(std::move(classes_)) {
    std::vector<bool> seen(static_cast<std::size_t>(a.cols), false);
    for (const auto& cls : classes) {
        if (cls.empty()) throw InputError("color classes must be nonempty");
        for (int j : cls) {
            if (j < 0 || j >= a.cols) throw InputError("class column index out of range");
            if (seen[static_cast<std::size_t>(j)]) throw InputError("color classes must be disjoint");
            seen[static_cast<std::size_t>(j)] = true;
        }
    }
    for (bool s : seen)
        if (!s) throw InputError("color classes must cover every column");
}

namespace {

bool row_all_covered(std::uint64_t mask, int rows) {
    return mask == SmallSet::full(rows).raw();
}

}  // namespace

std::optional<ClpSolution> solve_clp(const ColorfulLP& inst) {
    const TropMatrix& a = inst.a;
    int r = static_cast<int>(inst.classes.size());

    // finite-entry row mask per column, and per class the union of its columns
    std::vector<std::uint64_t> col_mask(static_cast<std::size_t>(a.cols), 0);
    for (int j = 0; j < a.cols; ++j)
        for (int i = 0; i < a.rows; ++i)
            if (a.at(i, j).finite()) col_mask[static_cast<std::size_t>(j)] |= std::uint64_t{1} << i;
    std::vector<std::uint64_t> class_mask(static_cast<std::size_t>(r), 0);
    for (int c = 0; c < r; ++c)
        for (int j : inst.classes[static_cast<std::size_t>(c)])
            class_mask[static_cast<std::size_t>(c)] |= col_mask[static_cast<std::size_t>(j)];
    // suffix_mask[c] = rows reachable from classes c..r-1
    std::vector<std::uint64_t> suffix_mask(static_cast<std::size_t>(r) + 1, 0);
    for (int c = r - 1; c >= 0; --c)
        suffix_mask[static_cast<std::size_t>(c)] =
            suffix_mask[static_cast<std::size_t>(c) + 1] | class_mask[static_cast<std::size_t>(c)];

    std::vector<int> support;
    support.reserve(static_cast<std::size_t>(r));

    auto feasible_support = [&](const std::vector<int>& cols) -> std::optional<TropVec> {
        // restrict A to the chosen columns and test the principal solution
        std::vector<TropVec> sub(static_cast<std::size_t>(a.rows));
        for (int i = 0; i < a.rows; ++i)
            for (int j : cols) sub[static_cast<std::size_t>(i)].push_back(a.at(i, j));
        TropMatrix restricted(a.rows, static_cast<int>(cols.size()), std::move(sub));
        std::vector<Rational> xs = principal_solution(restricted);
        TropVec xt;
        xt.reserve(xs.size());
        for (const Rational& v : xs) xt.push_back(Trop::of(v));
        TropVec image = trop_apply(restricted, xt);
        for (const Trop& row : image)
            if (!(row.finite() && row.value() == 0)) return std::nullopt;
        TropVec full(static_cast<std::size_t>(a.cols));
        for (std::size_t idx = 0; idx < cols.size(); ++idx)
            full[static_cast<std::size_t>(cols[idx])] = xt[idx];
        return full;
    };

    std::optional<ClpSolution> result;
    auto search = [&](auto&& self, int level, std::uint64_t covered) -> bool {
        if (!row_all_covered(covered | suffix_mask[static_cast<std::size_t>(level)], a.rows))
            return false;  // some row can no longer meet a finite entry
        if (level == r) {
            if (auto x = feasible_support(support)) {
                result = ClpSolution{std::move(*x), support};
                return true;
            }
            return false;
        }
        for (int j : inst.classes[static_cast<std::size_t>(level)]) {
            support.push_back(j);
            if (self(self, level + 1, covered | col_mask[static_cast<std::size_t>(j)])) return true;
            support.pop_back();
        }
        return false;
    };
    search(search, 0, 0);
    return result;
}

ThreeDM::ThreeDM(int k_, std::vector<Edge> edges_) : k(k_), edges(std::move(edges_)) {
    if (k < 0) throw InputError("part size must be nonnegative");
    if (3 * k > SmallSet::max_elements) throw InputError("3DM instances are capped at k = 21");
    for (const Edge& e : edges)
        if (e.a < 0 || e.a >= k || e.b < 0 || e.b >= k || e.c < 0 || e.c >= k)
            throw InputError("hyperedge node out of range");
}

ColorfulLP from_3dm(const ThreeDM& h) {
    int rows = 3 * h.k;
    int cols = static_cast<int>(h.edges.size());
    std::vector<TropVec> a(static_cast<std::size_t>(rows), TropVec(static_cast<std::size_t>(cols)));
    for (int j = 0; j < cols; ++j) {
        const ThreeDM::Edge& e = h.edges[static_cast<std::size_t>(j)];
        a[static_cast<std::size_t>(e.a)][static_cast<std::size_t>(j)] = Trop::of(0);
        a[static_cast<std::size_t>(h.k + e.b)][static_cast<std::size_t>(j)] = Trop::of(0);
        a[static_cast<std::size_t>(2 * h.k + e.c)][static_cast<std::size_t>(j)] = Trop::of(0);
    }
    std::vector<std::vector<int>> classes(static_cast<std::size_t>(h.k));
    for (int j = 0; j < cols; ++j)
        classes[static_cast<std::size_t>(h.edges[static_cast<std::size_t>(j)].a)].push_back(j);
    // ColorfulLP validation rejects empty classes (a part-A node in no edge)
    return ColorfulLP(TropMatrix(rows, cols, std::move(a)), std::move(classes));
}

std::vector<int> decode_matching(const ClpSolution& sol, const ThreeDM& h) {
    std::vector<int> chosen;
    for (std::size_t j = 0; j < sol.x.size(); ++j)
        if (sol.x[j].finite()) chosen.push_back(static_cast<int>(j));
    if (static_cast<int>(chosen.size()) != h.k)
        throw InternalError("decoded edge set does not have k edges");
    std::vector<int> seen_a(static_cast<std::size_t>(h.k), 0), seen_b(seen_a), seen_c(seen_a);
    for (int j : chosen) {
        const ThreeDM::Edge& e = h.edges[static_cast<std::size_t>(j)];
        ++seen_a[static_cast<std::size_t>(e.a)];
        ++seen_b[static_cast<std::size_t>(e.b)];
        ++seen_c[static_cast<std::size_t>(e.c)];
    }
    for (int i = 0; i < h.k; ++i)
        if (seen_a[static_cast<std::size_t>(i)] != 1 || seen_b[static_cast<std::size_t>(i)] != 1 ||
            seen_c[static_cast<std::size_t>(i)] != 1)
            throw InternalError("decoded edge set is not a perfect matching");
    return chosen;
}

DualHornSystem::DualHornSystem(int n_, std::vector<Constraint> constraints_)
    : n(n_), constraints(std::move(constraints_)) {
    if (n < 0) throw InputError("variable count must be nonnegative");
    for (const Constraint& c : constraints) {
        if (!c.is_equation && (c.lhs < 0 || c.lhs >= n))
            throw InputError("constraint variable index out of range");
        for (int v : c.set)
            if (v < 0 || v >= n) throw InputError("constraint variable index out of range");
    }
}

std::vector<DualHornClause> to_dual_horn(const DualHornSystem& sys) {
    std::vector<DualHornClause> clauses;
    clauses.reserve(sys.constraints.size());
    for (const auto& c : sys.constraints) {
        DualHornClause clause;
        if (!c.is_equation) clause.negated = c.lhs;
        clause.positives = c.set;
        clauses.push_back(std::move(clause));
    }
    return clauses;
}

ZeroInfSolution solve_zero_inf(const DualHornSystem& sys) {
    std::vector<DualHornClause> clauses = to_dual_horn(sys);
    std::size_t m = clauses.size();

    // start from the all-true assignment and propagate forced falsehoods
    std::vector<bool> forced(static_cast<std::size_t>(sys.n), false);
    std::vector<std::size_t> alive(m);           // positive literals not yet falsified
    std::vector<std::vector<std::size_t>> watch(static_cast<std::size_t>(sys.n));
    std::vector<int> queue;

    for (std::size_t ci = 0; ci < m; ++ci) {
        // duplicate positives are counted per occurrence; decrements match
        alive[ci] = clauses[ci].positives.size();
        for (int v : clauses[ci].positives) watch[static_cast<std::size_t>(v)].push_back(ci);
    }

    auto clause_exhausted = [&](std::size_t ci) -> bool {
        const DualHornClause& clause = clauses[ci];
        if (!clause.negated) return true;  // positive clause with nothing left: unsatisfiable
        int v = *clause.negated;
        if (!forced[static_cast<std::size_t>(v)]) {
            forced[static_cast<std::size_t>(v)] = true;
            queue.push_back(v);
        }
        return false;
    };

    for (std::size_t ci = 0; ci < m; ++ci)
        if (alive[ci] == 0 && clause_exhausted(ci)) return ZeroInfSolution{false, {}};

    while (!queue.empty()) {
        int v = queue.back();
        queue.pop_back();
        for (std::size_t ci : watch[static_cast<std::size_t>(v)]) {
            if (--alive[ci] == 0 && clause_exhausted(ci)) return ZeroInfSolution{false, {}};
        }
    }
    return ZeroInfSolution{true, std::move(forced)};
}

}  // namespace tropmat
