#pragma once

#include <string_view>
#include <vector>

#include "oddplanar/curvature.hpp"
#include "oddplanar/planar_map.hpp"

namespace oddplanar {

/// tetrahedron, icosahedron or dodecahedron; std::invalid_argument otherwise.
CombinatorialMap platonic(std::string_view name);
/// Prism over a k-gon (k >= 3); bipartite when k is even.
CombinatorialMap prism(int k);

enum class Seed { Icosahedron, Tetrahedron };

struct GCSpec {
  Seed seed = Seed::Icosahedron;
  int i = 1;
  int j = 0;
};

/// Goldberg-Coxeter triangulation: every seed face replaced by the patch of
/// the 6-regular triangular lattice cut out by the triangle 0, v, w v, where
/// v = i + j w and w is the sixth root of unity. Area is (i^2 + ij + j^2)
/// times the seed area. Vertices are numbered canonically.
Triangulation goldberg_coxeter(const GCSpec& spec);

/// D_r(c): cone of radius r around a centre of degree 6 - c, built ring by
/// ring. For c >= 4 the complex has loops or parallel edges, so it is kept as
/// a TriangleComplex rather than a map.
struct Disc {
  int c = 0;
  int r = 0;
  TriangleComplex complex;
  /// Degree of each vertex in the ambient triangulation: 6 - c at the
  /// centre (vertex 0), 6 elsewhere.
  std::vector<int> full_degree;
  /// The dual disc D*_r(c): one face per vertex of D_r(c), bounded by the
  /// dual edges of the edges leaving D_r(c).
  int dual_face_count = 0;
  int dual_boundary_length = 0;
};

Disc disc(int c, int r);

/// Cubic plane graph with faces of sizes 5 and 7 built from two pentagonal
/// caps and k ring gadgets; n = 20 + 40k.
struct Family57 {
  int k = 0;
  CombinatorialMap map;
  /// Pairwise edge-disjoint odd faces (a maximum one).
  std::vector<FaceId> packing;
};

Family57 family57(int k);

/// Maximum set of pairwise edge-disjoint faces among `faces`, exact when the
/// candidate count and node budget allow, greedy otherwise.
std::vector<FaceId> edge_disjoint_face_packing(const CombinatorialMap& map, std::vector<FaceId> faces,
                                               bool exact);

}  // namespace oddplanar
