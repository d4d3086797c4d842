#pragma once

#include <optional>
#include <vector>

#include "tropmat/matroid.hpp"
#include "tropmat/small_set.hpp"

namespace tropmat {

/// Antichain of subsets of {0,...,n-1} (Sperner family).
struct Clutter {
    int n = 0;
    std::vector<SmallSet> members;  // pairwise inclusion-incomparable, lex sorted

    Clutter(int n_, std::vector<SmallSet> members_);
};

/// All inclusion-minimal transversals of F. The empty clutter blocks to {{}}
/// and {{}} blocks back to the empty clutter; blocking is an involution.
Clutter blocker(const Clutter& f);

struct ExchangeWitness {
    SmallSet b1, b2;
    int element;  // in b1 \ b2, with no valid exchange partner in b2 \ b1
};

/// Checks the basis exchange axiom pairwise; nullopt means the clutter is the
/// basis family of a matroid.
std::optional<ExchangeWitness> exchange_axiom_violation(const Clutter& f);

/// Equivalent criterion through the blocker: for every member H, every
/// blocker member K with |H & K| = 1 and every k in K, (H\K)+k must again be
/// a member. Used as an independent cross-check of the exchange test.
bool is_basis_clutter_by_blocker(const Clutter& f);

}  // namespace tropmat
