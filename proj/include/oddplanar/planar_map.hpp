#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "oddplanar/error.hpp"

namespace oddplanar {

using VertexId = int;
using DartId = int;
using EdgeId = int;
using FaceId = int;

/// A plane graph stored as a rotation system.
///
/// Rotations list the neighbours of every vertex in clockwise order. A dart
/// is a directed edge `(v, i)` leaving `v` towards `rotation(v)[i]`; darts are
/// numbered consecutively vertex by vertex. Faces are traced by arriving at
/// `v` along a dart `u -> v` and leaving along the clockwise successor of
/// `u` in the rotation of `v`, so with clockwise rotations every face is
/// walked counter-clockwise.
///
/// The map is validated and all derived data is computed on construction;
/// instances are immutable afterwards.
class CombinatorialMap {
 public:
  struct Edge {
    VertexId u;
    VertexId v;  // u < v
    friend bool operator==(const Edge&, const Edge&) = default;
  };

  /// Throws InvalidMap unless the rotations describe a simple, connected
  /// graph embedded in the sphere (|V| - |E| + |F| = 2).
  explicit CombinatorialMap(std::vector<std::vector<VertexId>> rotations);

  /// Builds the map whose faces are exactly the given vertex cycles. Every
  /// directed edge must appear in exactly one cycle.
  static CombinatorialMap from_faces(int vertex_count,
                                     const std::vector<std::vector<VertexId>>& faces);

  int vertex_count() const { return static_cast<int>(rotations_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int face_count() const { return static_cast<int>(faces_.size()); }
  int dart_count() const { return static_cast<int>(head_.size()); }
  int euler_characteristic() const { return vertex_count() - edge_count() + face_count(); }

  int degree(VertexId v) const { return static_cast<int>(rotations_[v].size()); }
  std::span<const VertexId> rotation(VertexId v) const { return rotations_[v]; }
  const std::vector<std::vector<VertexId>>& rotations() const { return rotations_; }

  DartId dart(VertexId v, int position) const { return first_dart_[v] + position; }
  /// Dart u -> v, or -1 when the vertices are not adjacent.
  DartId find_dart(VertexId u, VertexId v) const;
  VertexId tail(DartId d) const { return tail_[d]; }
  VertexId head(DartId d) const { return head_[d]; }
  int position(DartId d) const { return d - first_dart_[tail_[d]]; }
  DartId reverse(DartId d) const { return reverse_[d]; }
  DartId rotation_next(DartId d) const;
  DartId rotation_prev(DartId d) const;
  DartId face_next(DartId d) const { return rotation_next(reverse_[d]); }

  EdgeId edge_of(DartId d) const { return edge_of_dart_[d]; }
  FaceId face_of(DartId d) const { return face_of_dart_[d]; }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_[e]; }
  /// Edge id of {u, v}, or -1.
  EdgeId edge_id(VertexId u, VertexId v) const;

  /// Faces as dart cycles in tracing order.
  const std::vector<std::vector<DartId>>& faces() const { return faces_; }
  int face_size(FaceId f) const { return static_cast<int>(faces_[f].size()); }
  std::vector<VertexId> face_vertices(FaceId f) const;
  /// Distinct edges on the boundary walk of f.
  std::vector<EdgeId> face_edges(FaceId f) const;

  friend bool operator==(const CombinatorialMap& a, const CombinatorialMap& b) {
    return a.rotations_ == b.rotations_;
  }

 private:
  std::vector<std::vector<VertexId>> rotations_;
  std::vector<int> first_dart_;
  std::vector<VertexId> tail_;
  std::vector<VertexId> head_;
  std::vector<DartId> reverse_;
  std::vector<EdgeId> edge_of_dart_;
  std::vector<FaceId> face_of_dart_;
  std::vector<Edge> edges_;
  std::vector<std::vector<DartId>> faces_;
};

/// Dual vertex f* is numbered like the primal face f.
struct DualCorrespondence {
  std::vector<VertexId> face_to_dual_vertex;
  std::vector<EdgeId> edge_to_dual_edge;
  std::vector<DartId> dart_to_dual_dart;
};

struct DualMap {
  CombinatorialMap map;
  DualCorrespondence correspondence;
};

/// Throws NonSimpleDual when two faces share more than one edge or a face
/// meets itself along an edge.
DualMap dual(const CombinatorialMap& map);

struct FaceVector {
  int triangles = 0;
  int squares = 0;
  int pentagons = 0;
  int hexagons = 0;
  friend bool operator==(const FaceVector&, const FaceVector&) = default;
};

struct ClassReport {
  bool is_cubic = false;
  int max_face_size = 0;
  bool faces_at_most_6 = false;
  bool is_3_connected = false;
  FaceVector face_vector;
  std::map<int, int> face_histogram;
  /// 3t + 2s + p, compared against 12 only when the other flags hold.
  int curvature_sum = 0;
  bool euler_identity_holds = false;
  bool in_class() const { return is_cubic && faces_at_most_6 && is_3_connected; }
};

ClassReport validate_class(const CombinatorialMap& map);

bool is_connected(const CombinatorialMap& map);
/// Exact test by removing every vertex and looking for articulation points.
bool is_3_connected(const CombinatorialMap& map);

struct Bipartition {
  bool bipartite = false;
  std::vector<int> color;               // 0/1 per vertex when bipartite
  std::vector<VertexId> odd_cycle;      // witness when not bipartite
};

/// Two-colouring of map minus the given edges.
Bipartition is_bipartite(const CombinatorialMap& map, std::span<const EdgeId> removed = {});
std::vector<FaceId> odd_faces(const CombinatorialMap& map);

/// Relabels vertex v as new_id[v].
CombinatorialMap relabel(const CombinatorialMap& map, std::span<const VertexId> new_id);
/// Reverses every rotation.
CombinatorialMap mirror(const CombinatorialMap& map);
/// BFS numbering from vertex 0; neighbours enqueued in rotation order.
std::vector<VertexId> canonical_order(const CombinatorialMap& map);
CombinatorialMap canonical(const CombinatorialMap& map);

/// Number of dart bijections that extend from a fixed dart of `a` to some
/// dart of `b` and respect the rotations (or reverse them when
/// `orientation_reversing`).
int count_flag_maps(const CombinatorialMap& a, const CombinatorialMap& b, bool orientation_reversing);
bool isomorphic(const CombinatorialMap& a, const CombinatorialMap& b, bool allow_reflection = true);

/// Unweighted BFS distances from `source`; -1 for unreachable vertices.
std::vector<int> bfs_distances(const CombinatorialMap& map, VertexId source);

}  // namespace oddplanar
