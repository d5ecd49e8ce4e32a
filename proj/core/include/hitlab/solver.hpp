#pragma once

#include <cstdint>

#include "hitlab/set_system.hpp"

namespace hitlab {

enum class SolveStatus { optimal, budget_exceeded };

struct SolveResult {
  int size = 0;
  VertexSet witness;       // always hits the system
  std::uint64_t nodes = 0; // search states visited (candidates, for the oracle)
  SolveStatus status = SolveStatus::optimal;
};

inline constexpr std::uint64_t kDefaultNodeBudget = 100'000'000;

// Exact minimum hitting set by branch and bound.
//
// Preprocessing: superset removal (reduce) and forced singletons (a
// singleton edge's element lies in every hitting set). Branching: on a
// minimum-cardinality uncovered edge, trying each of its elements in
// ascending index order; an element tried earlier is excluded from the
// branches after it. Pruning: lower bound |partial| + packing bound of
// the residual, upper bound from a greedy incumbent. All tie-breaking
// is by lowest element index / canonical edge order, so identical
// inputs give identical witnesses.
//
// On budget exhaustion returns status budget_exceeded with the best
// known witness (never silently treated as optimal).
SolveResult solve_min_hitting(const SetSystem& sys,
                              std::uint64_t node_budget = kDefaultNodeBudget);

// Oracle: tries m = 0,1,2,... and all C(n,m) vertex subsets in
// lexicographic order, returns the first hit. Optimal by construction.
// Refuses n > 20.
SolveResult exhaustive_min_hitting(const SetSystem& sys);

// Repeatedly adds the element covering the most uncovered edges
// (lowest index on ties) until everything is covered.
VertexSet greedy_hitting(const SetSystem& sys);

// Size of a greedily built pairwise-disjoint edge collection (scan in
// canonical order, take an edge iff disjoint from all taken). Always
// <= the minimum hitting set size.
int packing_lower_bound(const SetSystem& sys);

// n - solve_min_hitting(sys).size; the complement of the optimal
// witness is a maximal independent set. Throws BudgetExceededError if
// the solve cannot be finished within the default budget.
int max_independent_size(const SetSystem& sys);

}  // namespace hitlab
