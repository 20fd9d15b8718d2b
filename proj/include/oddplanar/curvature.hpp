#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "oddplanar/planar_map.hpp"

namespace oddplanar {

/// A sphere map in which every face is a triangle.
class Triangulation {
 public:
  /// Throws InvalidMap if some face is not a triangle.
  explicit Triangulation(CombinatorialMap map);

  const CombinatorialMap& map() const { return map_; }
  int vertex_count() const { return map_.vertex_count(); }
  int area() const { return map_.face_count(); }
  int degree(VertexId v) const { return map_.degree(v); }
  const std::array<VertexId, 3>& face(FaceId f) const { return faces_[f]; }
  std::span<const FaceId> faces_around(VertexId v) const { return incident_[v]; }

 private:
  CombinatorialMap map_;
  std::vector<std::array<VertexId, 3>> faces_;
  std::vector<std::vector<FaceId>> incident_;
};

/// Triangulated polygonal surface described by explicit side gluings.
///
/// Unlike Triangulation it admits loops, parallel edges and dangling edges,
/// which is what induced subcomplexes and the cone discs D_r(c) with c >= 4
/// look like. Side k of a triangle runs from corner k to corner k + 1.
struct TriangleComplex {
  int vertex_count = 0;
  std::vector<std::array<int, 2>> edges;
  std::vector<std::array<int, 3>> corners;
  std::vector<std::array<int, 3>> sides;

  int area() const { return static_cast<int>(corners.size()); }
  int euler_characteristic() const;
  /// Number of triangle sides glued to each edge.
  std::vector<int> side_counts() const;
  /// Edge ends at each vertex; a loop contributes two.
  std::vector<int> degrees() const;
  /// Vertices incident to an edge carried by fewer than two sides.
  std::vector<char> boundary_vertices() const;
  /// Length of the boundary walk: sum over edges of (2 - sides).
  int boundary_length() const;
};

/// sum_interior (6 - d) + sum_boundary (4 - d) - 6 chi. Zero on every
/// triangulated disc or sphere.
int gauss_bonnet_residual(const TriangleComplex& complex);

TriangleComplex as_complex(const Triangulation& tri);
/// Subcomplex induced by X, vertices renumbered in the order of X.
TriangleComplex induced_complex(const Triangulation& tri, std::span<const VertexId> vertices);

/// sum over X of (6 - d(u)).
int curvature(const Triangulation& tri, std::span<const VertexId> vertices);

struct Patch {
  std::vector<VertexId> vertices;  // sorted
  std::vector<FaceId> faces;       // induced triangles
  int area = 0;
  /// Boundary walk length; edges in no induced triangle count twice, so a
  /// single vertex has 0 and a single edge has 2.
  int boundary_length = 0;
  int curvature = 0;
  /// Induced subcomplex connected with chi = 1 and connected complement.
  bool is_patch = false;
};

Patch make_patch(const Triangulation& tri, std::span<const VertexId> vertices);

struct PatchBoundary {
  int length = 0;
  bool is_patch = false;
};

PatchBoundary patch_boundary(const Triangulation& tri, std::span<const VertexId> vertices);

struct Moat {
  std::vector<VertexId> base;
  int width = 0;
  std::vector<FaceId> faces;  // sorted
  int area = 0;
  /// ring_areas[i] = area of Mt^1(L u Mt^i(L)).
  std::vector<int> ring_areas;
  /// layers[i] = V(L u Mt^i(L)) for 0 <= i < width; layers[0] = base.
  std::vector<std::vector<VertexId>> layers;
};

/// Moat of width w around the patch X. Throws std::invalid_argument when X
/// is not a patch and GrowthOverflow when an intermediate region L u Mt^i
/// (i < w) is not an induced patch.
Moat moat(const Triangulation& tri, std::span<const VertexId> base, int width);

struct MoatIdentityReport {
  int curvature = 0;
  int boundary_length = 0;
  int patch_area = 0;
  int width = 0;
  /// Every L u Mt^i(L), i < w, is a patch of the same curvature.
  bool precondition_holds = false;
  std::string precondition_failure;

  int mt1_area = 0;
  int mt1_expected = 0;  // 2|dL| + 6 - c
  int moat_area = 0;
  int moat_expected = 0;  // 2w|dL| + (6 - c) w^2
  std::vector<int> layer_boundaries;  // |d(L u Mt^i)| for i < w
  bool mt1_ok = false;
  bool moat_ok = false;
  bool layer_boundaries_ok = false;
  /// area Mt^w >= (6-c) w^2 + 2w sqrt((6-c) area L), compared in squared form.
  bool area_lower_bound_ok = false;
  /// The exact boundary growth |d(L u Mt^(i+1))| = |d(L u Mt^i)| + 6 - c also
  /// needs every edge outside L u Mt^i to lie in a triangle outside it, for
  /// i < w - 1. Without that the moat can be smaller than the exact formula
  /// (the lower bound is still checked).
  bool complements_clean = false;
  int unclean_layer = -1;
  bool exact_identities_apply() const { return precondition_holds && complements_clean; }
  bool all_ok() const {
    return precondition_holds && mt1_ok && area_lower_bound_ok &&
           (!complements_clean || (moat_ok && layer_boundaries_ok));
  }
};

/// Requires 0 < c < 6; other curvatures report a failed precondition.
MoatIdentityReport moat_identities_check(const Triangulation& tri, std::span<const VertexId> base, int width);

struct IsoperimetricReport {
  int boundary_length = 0;
  int area = 0;
  int curvature = 0;
  std::int64_t boundary_squared = 0;
  std::int64_t scaled_area = 0;  // (6 - c) * area
  bool holds = false;
  bool equality = false;
  /// Interior vertices of degree < 6.
  int low_degree_interior = 0;
  /// Equality implies at most one such vertex.
  bool equality_condition_ok = false;
};

/// Throws NotApplicable when c >= 6 and std::invalid_argument when X is not a patch.
IsoperimetricReport isoperimetric_check(const Triangulation& tri, std::span<const VertexId> vertices);

/// Vertices at distance <= radius from center, sorted.
std::vector<VertexId> ball(const Triangulation& tri, VertexId center, int radius);

/// `patch <graph-id> <v1,v2,...>` or `moat <graph-id> <v1,v2,...> <width>`,
/// one per line, 1-indexed vertices and graph ids; `#` starts a comment.
struct PatchSpec {
  int graph = 1;
  std::vector<VertexId> vertices;  // 0-indexed
  std::optional<int> width;
};

std::vector<PatchSpec> parse_patch_specs(std::string_view text);
std::string format_patch_spec(const PatchSpec& spec);

}  // namespace oddplanar
