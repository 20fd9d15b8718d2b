#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace oddplanar {

struct WeightedEdge {
  int u;
  int v;
  std::int64_t weight;
};

/// Maximum-weight matching on a general graph (Edmonds' blossom algorithm
/// with dual variables, O(n^3)). With `max_cardinality` only matchings of
/// maximum cardinality are considered. Returns mate[v] or -1.
std::vector<int> max_weight_matching(int vertex_count, const std::vector<WeightedEdge>& edges,
                                     bool max_cardinality);

struct Matching {
  std::vector<std::pair<int, int>> pairs;  // i < j, sorted
  std::int64_t weight = 0;
};

using WeightMatrix = std::vector<std::vector<std::int64_t>>;

/// Minimum-weight perfect matching of a complete graph given by a symmetric
/// matrix of non-negative integer weights. Throws std::invalid_argument for
/// an odd number of vertices.
Matching min_weight_perfect_matching(const WeightMatrix& weights);

/// Same result by dynamic programming over vertex subsets; at most 20
/// vertices.
Matching matching_oracle(const WeightMatrix& weights);

}  // namespace oddplanar
