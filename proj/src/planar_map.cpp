#include "oddplanar/planar_map.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>

namespace oddplanar {

namespace {

std::string vertex_name(VertexId v) { return std::to_string(v + 1); }

}  // namespace

CombinatorialMap::CombinatorialMap(std::vector<std::vector<VertexId>> rotations)
    : rotations_(std::move(rotations)) {
  const int n = vertex_count();
  if (n == 0) throw InvalidMap("map has no vertices");

  first_dart_.assign(n + 1, 0);
  for (VertexId v = 0; v < n; ++v) first_dart_[v + 1] = first_dart_[v] + degree(v);
  const int darts = first_dart_[n];
  tail_.resize(darts);
  head_.resize(darts);

  for (VertexId v = 0; v < n; ++v) {
    std::vector<VertexId> seen(rotations_[v]);
    std::sort(seen.begin(), seen.end());
    for (std::size_t i = 0; i < seen.size(); ++i) {
      if (seen[i] < 0 || seen[i] >= n)
        throw InvalidMap("vertex " + vertex_name(v) + " has out-of-range neighbour");
      if (seen[i] == v) throw InvalidMap("self-loop at vertex " + vertex_name(v));
      if (i > 0 && seen[i] == seen[i - 1])
        throw InvalidMap("repeated neighbour " + vertex_name(seen[i]) + " at vertex " + vertex_name(v));
    }
    for (int i = 0; i < degree(v); ++i) {
      tail_[first_dart_[v] + i] = v;
      head_[first_dart_[v] + i] = rotations_[v][i];
    }
  }

  reverse_.assign(darts, -1);
  for (DartId d = 0; d < darts; ++d) {
    const DartId r = find_dart(head_[d], tail_[d]);
    if (r < 0)
      throw InvalidMap("asymmetric adjacency: " + vertex_name(tail_[d]) + " lists " +
                       vertex_name(head_[d]) + " but not conversely");
    reverse_[d] = r;
  }

  for (DartId d = 0; d < darts; ++d)
    if (tail_[d] < head_[d]) edges_.push_back({tail_[d], head_[d]});
  std::sort(edges_.begin(), edges_.end(),
            [](const Edge& a, const Edge& b) { return a.u != b.u ? a.u < b.u : a.v < b.v; });
  edge_of_dart_.assign(darts, -1);
  for (EdgeId e = 0; e < edge_count(); ++e) {
    const DartId d = find_dart(edges_[e].u, edges_[e].v);
    edge_of_dart_[d] = e;
    edge_of_dart_[reverse_[d]] = e;
  }

  if (!is_connected(*this)) throw InvalidMap("map is disconnected");

  face_of_dart_.assign(darts, -1);
  for (DartId start = 0; start < darts; ++start) {
    if (face_of_dart_[start] >= 0) continue;
    const FaceId f = face_count();
    std::vector<DartId> walk;
    DartId d = start;
    do {
      face_of_dart_[d] = f;
      walk.push_back(d);
      d = face_next(d);
    } while (d != start);
    faces_.push_back(std::move(walk));
  }

  if (euler_characteristic() != 2)
    throw InvalidMap("Euler characteristic is " + std::to_string(euler_characteristic()) + ", expected 2");
}

CombinatorialMap CombinatorialMap::from_faces(int vertex_count,
                                              const std::vector<std::vector<VertexId>>& faces) {
  // successor[v] maps a neighbour u to the neighbour following u clockwise.
  std::vector<std::map<VertexId, VertexId>> successor(vertex_count);
  for (const auto& face : faces) {
    const int k = static_cast<int>(face.size());
    for (int i = 0; i < k; ++i) {
      const VertexId prev = face[(i + k - 1) % k];
      const VertexId cur = face[i];
      const VertexId next = face[(i + 1) % k];
      if (cur < 0 || cur >= vertex_count) throw InvalidMap("face references unknown vertex");
      if (!successor[cur].emplace(prev, next).second)
        throw InvalidMap("directed edge " + vertex_name(prev) + "->" + vertex_name(cur) +
                         " appears in two faces");
    }
  }
  std::vector<std::vector<VertexId>> rotations(vertex_count);
  for (VertexId v = 0; v < vertex_count; ++v) {
    const auto& succ = successor[v];
    if (succ.empty()) continue;
    VertexId u = succ.begin()->first;
    for (std::size_t step = 0; step < succ.size(); ++step) {
      rotations[v].push_back(u);
      const auto it = succ.find(u);
      if (it == succ.end()) throw InvalidMap("faces around vertex " + vertex_name(v) + " do not close up");
      u = it->second;
    }
    if (u != rotations[v].front())
      throw InvalidMap("faces around vertex " + vertex_name(v) + " form more than one cycle");
  }
  return CombinatorialMap(std::move(rotations));
}

DartId CombinatorialMap::find_dart(VertexId u, VertexId v) const {
  const auto& rot = rotations_[u];
  for (std::size_t i = 0; i < rot.size(); ++i)
    if (rot[i] == v) return first_dart_[u] + static_cast<int>(i);
  return -1;
}

DartId CombinatorialMap::rotation_next(DartId d) const {
  const VertexId v = tail_[d];
  const int pos = d - first_dart_[v];
  return first_dart_[v] + (pos + 1) % degree(v);
}

DartId CombinatorialMap::rotation_prev(DartId d) const {
  const VertexId v = tail_[d];
  const int pos = d - first_dart_[v];
  return first_dart_[v] + (pos + degree(v) - 1) % degree(v);
}

EdgeId CombinatorialMap::edge_id(VertexId u, VertexId v) const {
  const DartId d = find_dart(u, v);
  return d < 0 ? -1 : edge_of_dart_[d];
}

std::vector<VertexId> CombinatorialMap::face_vertices(FaceId f) const {
  std::vector<VertexId> out;
  out.reserve(faces_[f].size());
  for (DartId d : faces_[f]) out.push_back(tail_[d]);
  return out;
}

std::vector<EdgeId> CombinatorialMap::face_edges(FaceId f) const {
  std::vector<EdgeId> out;
  for (DartId d : faces_[f]) out.push_back(edge_of_dart_[d]);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

DualMap dual(const CombinatorialMap& map) {
  std::vector<std::vector<VertexId>> rotations(map.face_count());
  for (FaceId f = 0; f < map.face_count(); ++f) {
    for (DartId d : map.faces()[f]) {
      const FaceId g = map.face_of(map.reverse(d));
      if (g == f) throw NonSimpleDual("face " + std::to_string(f) + " meets itself along an edge");
      rotations[f].push_back(g);
    }
    std::vector<VertexId> sorted = rotations[f];
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw NonSimpleDual("face " + std::to_string(f) + " shares more than one edge with a neighbour");
  }
  DualMap out{CombinatorialMap(std::move(rotations)), {}};
  auto& corr = out.correspondence;
  corr.face_to_dual_vertex.resize(map.face_count());
  std::iota(corr.face_to_dual_vertex.begin(), corr.face_to_dual_vertex.end(), 0);
  corr.dart_to_dual_dart.assign(map.dart_count(), -1);
  for (FaceId f = 0; f < map.face_count(); ++f)
    for (int i = 0; i < map.face_size(f); ++i) corr.dart_to_dual_dart[map.faces()[f][i]] = out.map.dart(f, i);
  corr.edge_to_dual_edge.assign(map.edge_count(), -1);
  for (DartId d = 0; d < map.dart_count(); ++d)
    corr.edge_to_dual_edge[map.edge_of(d)] = out.map.edge_of(corr.dart_to_dual_dart[d]);
  return out;
}

bool is_connected(const CombinatorialMap& map) {
  std::vector<char> seen(map.vertex_count(), 0);
  std::vector<VertexId> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    for (VertexId u : map.rotation(v))
      if (!seen[u]) {
        seen[u] = 1;
        ++count;
        stack.push_back(u);
      }
  }
  return count == map.vertex_count();
}

namespace {

// True when the graph with `removed` deleted is connected and has no
// articulation point.
bool biconnected_without(const CombinatorialMap& map, VertexId removed) {
  const int n = map.vertex_count();
  std::vector<int> disc(n, -1), low(n, 0), parent(n, -1);
  std::vector<std::size_t> next_child(n, 0);
  const VertexId root = removed == 0 ? 1 : 0;
  int timer = 0;
  int root_children = 0;
  bool articulation = false;
  std::vector<VertexId> stack{root};
  disc[root] = low[root] = timer++;
  while (!stack.empty()) {
    const VertexId v = stack.back();
    const auto rot = map.rotation(v);
    if (next_child[v] < rot.size()) {
      const VertexId u = rot[next_child[v]++];
      if (u == removed) continue;
      if (disc[u] < 0) {
        parent[u] = v;
        disc[u] = low[u] = timer++;
        if (v == root) ++root_children;
        stack.push_back(u);
      } else if (u != parent[v]) {
        low[v] = std::min(low[v], disc[u]);
      }
    } else {
      stack.pop_back();
      const VertexId p = parent[v];
      if (p >= 0) {
        low[p] = std::min(low[p], low[v]);
        if (p != root && low[v] >= disc[p]) articulation = true;
      }
    }
  }
  if (root_children > 1) articulation = true;
  return !articulation && timer == n - 1;
}

}  // namespace

bool is_3_connected(const CombinatorialMap& map) {
  const int n = map.vertex_count();
  if (n < 4) return false;
  for (VertexId v = 0; v < n; ++v)
    if (map.degree(v) < 3) return false;
  for (VertexId v = 0; v < n; ++v)
    if (!biconnected_without(map, v)) return false;
  return true;
}

ClassReport validate_class(const CombinatorialMap& map) {
  ClassReport r;
  r.is_cubic = true;
  for (VertexId v = 0; v < map.vertex_count(); ++v)
    if (map.degree(v) != 3) r.is_cubic = false;
  for (FaceId f = 0; f < map.face_count(); ++f) {
    const int size = map.face_size(f);
    r.max_face_size = std::max(r.max_face_size, size);
    ++r.face_histogram[size];
    switch (size) {
      case 3: ++r.face_vector.triangles; break;
      case 4: ++r.face_vector.squares; break;
      case 5: ++r.face_vector.pentagons; break;
      case 6: ++r.face_vector.hexagons; break;
      default: break;
    }
  }
  r.faces_at_most_6 = r.max_face_size <= 6;
  r.is_3_connected = is_3_connected(map);
  r.curvature_sum = 3 * r.face_vector.triangles + 2 * r.face_vector.squares + r.face_vector.pentagons;
  r.euler_identity_holds = r.curvature_sum == 12;
  return r;
}

Bipartition is_bipartite(const CombinatorialMap& map, std::span<const EdgeId> removed) {
  const int n = map.vertex_count();
  std::vector<char> dead(map.edge_count(), 0);
  for (EdgeId e : removed) dead[e] = 1;
  Bipartition out;
  out.color.assign(n, -1);
  std::vector<VertexId> parent(n, -1);
  for (VertexId s = 0; s < n; ++s) {
    if (out.color[s] >= 0) continue;
    out.color[s] = 0;
    std::queue<VertexId> queue;
    queue.push(s);
    while (!queue.empty()) {
      const VertexId v = queue.front();
      queue.pop();
      for (int i = 0; i < map.degree(v); ++i) {
        const DartId d = map.dart(v, i);
        if (dead[map.edge_of(d)]) continue;
        const VertexId u = map.head(d);
        if (out.color[u] < 0) {
          out.color[u] = 1 - out.color[v];
          parent[u] = v;
          queue.push(u);
        } else if (out.color[u] == out.color[v]) {
          // Close the odd cycle through the BFS tree.
          std::vector<VertexId> a{v}, b{u};
          while (parent[a.back()] >= 0) a.push_back(parent[a.back()]);
          while (parent[b.back()] >= 0) b.push_back(parent[b.back()]);
          while (a.size() > 1 && b.size() > 1 && a[a.size() - 2] == b[b.size() - 2]) {
            a.pop_back();
            b.pop_back();
          }
          out.odd_cycle.assign(a.begin(), a.end());
          for (auto it = b.rbegin() + 1; it != b.rend(); ++it) out.odd_cycle.push_back(*it);
          out.bipartite = false;
          out.color.clear();
          return out;
        }
      }
    }
  }
  out.bipartite = true;
  return out;
}

std::vector<FaceId> odd_faces(const CombinatorialMap& map) {
  std::vector<FaceId> out;
  for (FaceId f = 0; f < map.face_count(); ++f)
    if (map.face_size(f) % 2 == 1) out.push_back(f);
  return out;
}

CombinatorialMap relabel(const CombinatorialMap& map, std::span<const VertexId> new_id) {
  std::vector<std::vector<VertexId>> rotations(map.vertex_count());
  for (VertexId v = 0; v < map.vertex_count(); ++v)
    for (VertexId u : map.rotation(v)) rotations[new_id[v]].push_back(new_id[u]);
  return CombinatorialMap(std::move(rotations));
}

CombinatorialMap mirror(const CombinatorialMap& map) {
  auto rotations = map.rotations();
  for (auto& rot : rotations) std::reverse(rot.begin(), rot.end());
  return CombinatorialMap(std::move(rotations));
}

std::vector<VertexId> canonical_order(const CombinatorialMap& map) {
  std::vector<VertexId> new_id(map.vertex_count(), -1);
  std::queue<VertexId> queue;
  int next = 0;
  new_id[0] = next++;
  queue.push(0);
  while (!queue.empty()) {
    const VertexId v = queue.front();
    queue.pop();
    for (VertexId u : map.rotation(v))
      if (new_id[u] < 0) {
        new_id[u] = next++;
        queue.push(u);
      }
  }
  return new_id;
}

CombinatorialMap canonical(const CombinatorialMap& map) { return relabel(map, canonical_order(map)); }

namespace {

bool extend_flag_map(const CombinatorialMap& a, const CombinatorialMap& b, DartId from, DartId to,
                     bool reversing, std::vector<DartId>& image, std::vector<char>& used) {
  std::fill(image.begin(), image.end(), -1);
  std::fill(used.begin(), used.end(), 0);
  std::vector<std::pair<DartId, DartId>> stack{{from, to}};
  image[from] = to;
  used[to] = 1;
  while (!stack.empty()) {
    const auto [x, y] = stack.back();
    stack.pop_back();
    const std::pair<DartId, DartId> next[2] = {
        {a.reverse(x), b.reverse(y)},
        {a.rotation_next(x), reversing ? b.rotation_prev(y) : b.rotation_next(y)}};
    for (const auto& [p, q] : next) {
      if (image[p] >= 0) {
        if (image[p] != q) return false;
        continue;
      }
      if (used[q]) return false;
      image[p] = q;
      used[q] = 1;
      stack.emplace_back(p, q);
    }
  }
  return true;
}

}  // namespace

int count_flag_maps(const CombinatorialMap& a, const CombinatorialMap& b, bool orientation_reversing) {
  if (a.vertex_count() != b.vertex_count() || a.dart_count() != b.dart_count()) return 0;
  if (a.dart_count() == 0) return 1;
  std::vector<DartId> image(a.dart_count());
  std::vector<char> used(b.dart_count());
  int count = 0;
  for (DartId target = 0; target < b.dart_count(); ++target)
    if (a.degree(a.tail(0)) == b.degree(b.tail(target)) &&
        extend_flag_map(a, b, 0, target, orientation_reversing, image, used))
      ++count;
  return count;
}

bool isomorphic(const CombinatorialMap& a, const CombinatorialMap& b, bool allow_reflection) {
  if (a.vertex_count() != b.vertex_count() || a.dart_count() != b.dart_count()) return false;
  std::vector<DartId> image(a.dart_count());
  std::vector<char> used(b.dart_count());
  for (int pass = 0; pass < (allow_reflection ? 2 : 1); ++pass)
    for (DartId target = 0; target < b.dart_count(); ++target)
      if (extend_flag_map(a, b, 0, target, pass == 1, image, used)) return true;
  return false;
}

std::vector<int> bfs_distances(const CombinatorialMap& map, VertexId source) {
  std::vector<int> dist(map.vertex_count(), -1);
  std::queue<VertexId> queue;
  dist[source] = 0;
  queue.push(source);
  while (!queue.empty()) {
    const VertexId v = queue.front();
    queue.pop();
    for (VertexId u : map.rotation(v))
      if (dist[u] < 0) {
        dist[u] = dist[v] + 1;
        queue.push(u);
      }
  }
  return dist;
}

}  // namespace oddplanar
