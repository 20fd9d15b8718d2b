#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace oddplanar {

inline constexpr std::int64_t kDefaultNodeBudget = 10'000'000;

/// kDefaultNodeBudget unless ODDPLANAR_BB_BUDGET holds a positive integer.
std::int64_t node_budget_from_env();

struct IndependentSet {
  std::vector<int> vertices;  // sorted
  std::int64_t nodes = 0;     // branch-and-bound nodes visited
};

/// Exact maximum independent set by branch and bound (at most 128 vertices).
/// Reductions: degree 0/1, domination; branching on a maximum-degree vertex
/// with mirrors dropped in the exclusion branch; bound from a greedy cover by
/// triangles, 5-cycles, edges and singletons. Throws BudgetExceeded when the
/// node count passes `budget` or the graph is too large.
IndependentSet maximum_independent_set(int n, const std::vector<std::pair<int, int>>& edges,
                                       std::int64_t budget = kDefaultNodeBudget);

}  // namespace oddplanar
