#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "oddplanar/independent_set.hpp"
#include "oddplanar/planar_map.hpp"
#include "oddplanar/tjoin.hpp"

namespace oddplanar {

/// Minimum odd cycle transversal: a minimum T-join in the dual, T the odd
/// faces, pulled back to primal edges.
struct OctResult {
  int tau = 0;
  std::vector<EdgeId> edges;  // sorted primal edge ids
  std::vector<FaceId> odd_faces;
  TJoin dual_join;
};

/// Throws NonSimpleDual when the dual has loops or parallel edges.
OctResult oct(const CombinatorialMap& g);

struct MaxCut {
  int value = 0;          // |E| - tau
  std::vector<int> side;  // 0/1 per vertex
  int recount = 0;        // edges crossing `side`
};

MaxCut maxcut(const CombinatorialMap& g, const OctResult& transversal);
MaxCut maxcut(const CombinatorialMap& g);

struct AlphaBounds {
  int lower_bound = 0;            // ceil((n - tau) / 2)
  std::vector<VertexId> witness;  // independent set of at least that size
  std::optional<int> exact;
  std::vector<VertexId> exact_set;
  std::int64_t nodes = 0;
};

/// The witness is the larger colour class of G minus the smaller endpoint of
/// every transversal edge. With `exact`, also runs the branch and bound
/// (throws BudgetExceeded past `budget` nodes or 128 vertices).
AlphaBounds alpha_bounds(const CombinatorialMap& g, const OctResult& transversal, bool exact,
                         std::int64_t budget = kDefaultNodeBudget);

/// Map automorphisms, orientation preserving and reversing.
int automorphism_order(const CombinatorialMap& map);

struct NuCertificate {
  int greedy = 0;                   // greedy edge-disjoint odd faces
  std::optional<int> exact_faces;   // maximum edge-disjoint odd faces
  std::optional<int> moat_width;    // verified moat packing in the dual
  std::string moat_source;          // "extremal", "singletons" or empty
  MoatPackingCertificate moats;
  std::vector<FaceId> faces;        // best face packing found
  int best = 0;
};

/// Lower bound on the number of edge-disjoint odd cycles.
NuCertificate nu_certificate(const CombinatorialMap& g, std::int64_t budget = kDefaultNodeBudget);

struct Equality {
  bool face_condition = false;
  bool tau_condition = false;
  bool size_condition = false;  // n = 60 k^2 (resp. 12 k^2)
  int k = 0;
  bool symmetry_condition = false;
  bool holds() const { return face_condition && tau_condition && size_condition && symmetry_condition; }
};

struct AnalysisOptions {
  bool alpha_exact = false;
  bool nu = true;
  std::int64_t budget = kDefaultNodeBudget;
};

struct AnalysisReport {
  int n = 0;
  int edge_count = 0;
  int face_count = 0;
  ClassReport cls;
  OctResult transversal;
  std::vector<CombinatorialMap::Edge> transversal_endpoints;
  bool transversal_is_matching = false;
  bool bipartite_after_removal = false;
  // Squared bounds as exact fractions num / den.
  std::int64_t general_num = 0;  // (p + 3t) n, over 5
  std::int64_t twelve_num = 0;   // 12 n, over 5
  std::optional<std::int64_t> no_pentagon_num;  // t n, over 3, when p = 0
  bool within_general = false;   // 5 tau^2 <= (p + 3t) n
  bool within_twelve = false;
  std::optional<bool> within_no_pentagon;
  int aut_order = 0;
  Equality icosahedral;
  Equality tetrahedral;
  MaxCut cut;
  AlphaBounds alpha;
  std::optional<std::string> alpha_error;
  std::optional<NuCertificate> nu;
};

AnalysisReport analyze(const CombinatorialMap& g, const AnalysisOptions& options = {});

/// key=value lines, one block per graph.
std::string report_text(const AnalysisReport& r, int graph_index);
/// JSON object with the same content.
std::string report_json(const AnalysisReport& r, int graph_index);

}  // namespace oddplanar
