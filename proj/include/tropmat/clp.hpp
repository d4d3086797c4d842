#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tropmat/tropical.hpp"

namespace tropmat {

/// Max-plus matrix, row major.
struct TropMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<TropVec> a;  // a[i] is row i

    TropMatrix() = default;
    TropMatrix(int rows_, int cols_, std::vector<TropVec> a_);

    const Trop& at(int i, int j) const { return a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
};

/// Largest x with A (x) x <= 0: x_j = min over rows i with finite A_ij of
/// -A_ij; columns with no finite entry get 0 (any finite value works there).
/// A (x) x = 0 is solvable iff this x already achieves it, and every solution
/// is dominated by it on columns with a finite entry.
std::vector<Rational> principal_solution(const TropMatrix& a);

/// max_j (A_ij + x_j) over finite entries, per row.
TropVec trop_apply(const TropMatrix& a, const TropVec& x);

/// A (x) x = 0 constrained to one support column per color class.
struct ColorfulLP {
    TropMatrix a;
    std::vector<std::vector<int>> classes;  // disjoint, nonempty, cover all columns

    ColorfulLP(TropMatrix a_, std::vector<std::vector<int>> classes_);
};

struct ClpSolution {
    TropVec x;                 // principal values on the support, -inf elsewhere
    std::vector<int> support;  // chosen column per class, in class order
};

/// Backtracking over one-column-per-class choices in class order and column
/// index order; a complete choice is tested by restricting A to the chosen
/// columns and checking the principal solution. Partial choices are pruned
/// when some row has no finite entry among chosen or still-available columns.
/// Returns the lexicographically first feasible solution, or nullopt
/// (infeasibility is a result, not an error). Worst case exponential.
std::optional<ClpSolution> solve_clp(const ColorfulLP& inst);

/// Exact-cover style 3-dimensional matching instance: three disjoint parts of
/// size k, hyperedges with one node per part. Nodes are indexed 0..k-1 within
/// each part.
struct ThreeDM {
    int k = 0;
    struct Edge {
        int a, b, c;
    };
    std::vector<Edge> edges;

    ThreeDM(int k_, std::vector<Edge> edges_);
};

/// Encodes a 3DM instance as a colorful LP: one row per node of the three
/// parts (rows 0..k-1 part A, k..2k-1 part B, 2k..3k-1 part C), one column
/// per hyperedge with entry 0 where the edge contains the row's node and
/// -inf otherwise; class i collects the edges through the i-th node of part
/// A. Throws when some class would be empty (a node of A in no edge).
ColorfulLP from_3dm(const ThreeDM& h);

/// Reads the chosen edge set off a feasible solution and checks that it is a
/// perfect matching (covers every node, size k, pairwise disjoint); a failed
/// check is an internal error, not bad input.
std::vector<int> decode_matching(const ClpSolution& sol, const ThreeDM& h);

/// Conjunction of max-plus constraints over variables confined to {-inf, 0}:
/// either an equation max_{k in J} x_k = 0 or an inequality
/// x_i <= max_{k in K} x_k (empty K forces x_i = -inf).
struct DualHornSystem {
    int n = 0;
    struct Constraint {
        bool is_equation;
        int lhs = -1;           // inequality only
        std::vector<int> set;   // J for equations, K for inequalities
    };
    std::vector<Constraint> constraints;

    DualHornSystem(int n_, std::vector<Constraint> constraints_);
};

/// Boolean clause with at most one negative literal (z_i = true iff x_i = 0).
struct DualHornClause {
    std::optional<int> negated;
    std::vector<int> positives;
};

/// equation(J) -> positive clause over J; inequality(i, K) -> not z_i or K.
std::vector<DualHornClause> to_dual_horn(const DualHornSystem& sys);

struct ZeroInfSolution {
    bool feasible = false;
    std::vector<bool> is_ninf;  // per variable; all others take the value 0
};

/// Counter-based unit propagation on the clause list, linear in the total
/// clause size. Satisfiable systems get the pointwise-maximal solution: only
/// variables propagation forces to -inf are -inf.
ZeroInfSolution solve_zero_inf(const DualHornSystem& sys);

}  // namespace tropmat
