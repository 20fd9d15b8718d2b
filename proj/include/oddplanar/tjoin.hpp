#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "oddplanar/curvature.hpp"
#include "oddplanar/matching.hpp"
#include "oddplanar/planar_map.hpp"

namespace oddplanar {

struct TSet {
  std::vector<VertexId> vertices;  // sorted, distinct, even count
  bool from_odd_degrees = false;
};

/// Vertices of odd degree.
TSet odd_vertex_set(const CombinatorialMap& map);
/// User-supplied T; std::invalid_argument on odd size or bad ids.
TSet make_tset(const CombinatorialMap& map, std::vector<VertexId> vertices);

/// Shortest-path metric on T. path[a][b] is the lexicographically smallest
/// shortest vertex sequence from the smaller of the two terminals.
struct TMetric {
  std::vector<VertexId> terminals;
  WeightMatrix distance;
  std::vector<std::vector<std::vector<VertexId>>> path;
};

TMetric t_metric(const CombinatorialMap& map, const TSet& t);

struct TJoin {
  std::vector<EdgeId> edges;  // sorted
  int size = 0;
  /// Terminal pairs joined by the matching, and its total weight.
  std::vector<std::pair<VertexId, VertexId>> pairs;
  std::int64_t matching_weight = 0;
};

/// Minimum T-join: minimum perfect matching on the T metric, then the
/// symmetric difference of the matched shortest paths.
TJoin min_tjoin(const CombinatorialMap& map, const TSet& t);

struct TJoinCheck {
  bool ok = false;
  /// Vertices whose J-degree parity disagrees with membership in T.
  std::vector<VertexId> parity_failures;
};

TJoinCheck verify_tjoin(const CombinatorialMap& map, const TSet& t, const std::vector<EdgeId>& join);

/// Subdivide every edge and add the medial triangle in each face. Original
/// vertices keep their ids; the midpoint of edge e is vertex n + e.
Triangulation refine(const Triangulation& tri);

struct MoatEntry {
  std::vector<VertexId> root;  // sorted
  int width = 1;
};

struct MoatPackingCertificate {
  std::vector<MoatEntry> moats;
  int total_width() const;
};

struct PackingCheck {
  bool m1_disjoint = true;
  bool m3_patches = true;
  bool m4_odd_curvature = true;
  bool m5_singleton_minimal = true;
  bool m6_laminar = true;
  int total_width = 0;
  std::vector<std::string> failures;
  bool ok() const { return m1_disjoint && m3_patches && m4_odd_curvature && m5_singleton_minimal && m6_laminar; }
};

/// Checks M1 (moats pairwise face-disjoint), M3 (roots are patches and every
/// moat grows cleanly), M4 (root curvature in {1,3,5} and every layer odd, so
/// each layer cuts off an odd number of T vertices), M5 (inclusion-minimal
/// roots are singletons) and M6 (laminar roots). The total width is a lower
/// bound on the number of disjoint T-cuts; whether it is maximum is not
/// checked. Throws std::invalid_argument on unknown vertices or width < 1.
PackingCheck verify_moat_packing(const Triangulation& tri, const MoatPackingCertificate& cert);

/// Width-k moats around the twelve degree-5 vertices of the triangulation
/// dual to GC(k, k). Throws NotExtremal unless there are exactly twelve
/// degree-5 vertices, all others have degree 6, area = 60 k^2, and the
/// degree-5 vertices are pairwise at distance >= 2k.
MoatPackingCertificate extremal_packing(const Triangulation& tri);

/// Certificate in refine(tri): each root gains the midpoints of its internal
/// edges and each width doubles.
MoatPackingCertificate lift_certificate(const Triangulation& tri, const MoatPackingCertificate& cert);

/// One moat per line: `root=<v1,v2,...> width=<w>`, 1-indexed; `#` comments.
MoatPackingCertificate parse_certificate(std::string_view text);
std::string format_certificate(const MoatPackingCertificate& cert);

}  // namespace oddplanar
