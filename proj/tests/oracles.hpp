// Test-only reference implementations. Deliberately naive and independent of
// the library algorithms they are compared against.
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <queue>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "oddplanar/curvature.hpp"
#include "oddplanar/planar_map.hpp"

namespace oracle {

using Edges = std::vector<std::pair<int, int>>;

inline Edges edge_list(const oddplanar::CombinatorialMap& m) {
  Edges out;
  for (const auto& e : m.edges()) out.emplace_back(e.u, e.v);
  return out;
}

inline bool two_colourable(int n, const Edges& edges, const std::vector<char>& skip) {
  std::vector<std::vector<int>> adj(n);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (skip[i]) continue;
    adj[edges[i].first].push_back(edges[i].second);
    adj[edges[i].second].push_back(edges[i].first);
  }
  std::vector<int> col(n, -1);
  for (int s = 0; s < n; ++s) {
    if (col[s] >= 0) continue;
    col[s] = 0;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int u : adj[v]) {
        if (col[u] < 0) {
          col[u] = 1 - col[v];
          stack.push_back(u);
        } else if (col[u] == col[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

/// Smallest number of edges whose removal leaves a bipartite graph, by
/// trying subsets in order of size (stops at `limit`).
inline int brute_force_oct(int n, const Edges& edges, int limit = 8) {
  const int m = static_cast<int>(edges.size());
  std::vector<char> skip(m, 0);
  for (int k = 0; k <= std::min(m, limit); ++k) {
    std::function<bool(int, int)> choose = [&](int start, int left) {
      if (left == 0) return two_colourable(n, edges, skip);
      for (int i = start; i <= m - left; ++i) {
        skip[i] = 1;
        bool ok = choose(i + 1, left - 1);
        skip[i] = 0;
        if (ok) return true;
      }
      return false;
    };
    if (choose(0, k)) return k;
  }
  return -1;
}

/// Minimum T-join size over all edge subsets; -1 when none exists.
inline int brute_force_tjoin(int n, const Edges& edges, const std::vector<int>& t) {
  const int m = static_cast<int>(edges.size());
  std::vector<int> want(n, 0);
  for (int v : t) want[v] = 1;
  int best = -1;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    const int size = __builtin_popcount(mask);
    if (best >= 0 && size >= best) continue;
    std::vector<int> deg(n, 0);
    for (int i = 0; i < m; ++i)
      if (mask >> i & 1) {
        deg[edges[i].first] ^= 1;
        deg[edges[i].second] ^= 1;
      }
    if (deg == want) best = size;
  }
  return best;
}

/// Minimum perfect matching weight by exhaustive pairing of the lowest
/// unmatched vertex, memoised on the remaining set.
inline std::int64_t brute_force_matching(const std::vector<std::vector<std::int64_t>>& w) {
  const int n = static_cast<int>(w.size());
  std::map<std::uint32_t, std::int64_t> memo;
  std::function<std::int64_t(std::uint32_t)> go = [&](std::uint32_t left) -> std::int64_t {
    if (left == 0) return 0;
    auto it = memo.find(left);
    if (it != memo.end()) return it->second;
    const int i = __builtin_ctz(left);
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    for (int j = i + 1; j < n; ++j)
      if (left >> j & 1) best = std::min(best, w[i][j] + go(left & ~(1u << i) & ~(1u << j)));
    return memo[left] = best;
  };
  return go(n == 0 ? 0u : (1u << n) - 1);
}

/// Largest independent set size by plain subset enumeration (n <= 24).
inline int brute_force_alpha(int n, const Edges& edges) {
  std::vector<std::uint32_t> nbr(n, 0);
  for (auto [u, v] : edges) {
    nbr[u] |= 1u << v;
    nbr[v] |= 1u << u;
  }
  int best = 0;
  std::function<void(int, std::uint32_t, int)> go = [&](int v, std::uint32_t banned, int size) {
    if (size + (n - v) <= best) return;
    if (v == n) {
      best = std::max(best, size);
      return;
    }
    if (!(banned >> v & 1)) go(v + 1, banned | nbr[v], size + 1);
    go(v + 1, banned, size);
  };
  go(0, 0, 0);
  return best;
}

inline std::vector<int> bfs(int n, const Edges& edges, int s) {
  std::vector<std::vector<int>> adj(n);
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<int> d(n, -1);
  std::queue<int> q;
  d[s] = 0;
  q.push(s);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int u : adj[v])
      if (d[u] < 0) {
        d[u] = d[v] + 1;
        q.push(u);
      }
  }
  return d;
}

/// Random 2-connected plane map grown from a triangle by inserting vertices
/// into faces and adding chords, until `max_edges` would be exceeded.
inline oddplanar::CombinatorialMap random_plane_map(std::mt19937& rng, int max_edges) {
  std::vector<std::vector<int>> faces{{0, 1, 2}, {0, 2, 1}};
  std::set<std::pair<int, int>> adjacent{{0, 1}, {1, 2}, {0, 2}};
  int n = 3;
  auto link = [&](int a, int b) { adjacent.insert({std::min(a, b), std::max(a, b)}); };
  for (int attempt = 0; attempt < 200 && static_cast<int>(adjacent.size()) < max_edges; ++attempt) {
    const std::size_t fi = rng() % faces.size();
    const std::vector<int> f = faces[fi];
    const int m = static_cast<int>(f.size());
    const int room = max_edges - static_cast<int>(adjacent.size());
    if (rng() % 2 == 0 && m >= 4) {
      const int a = rng() % m;
      const int b = (a + 2 + rng() % (m - 3)) % m;
      const int va = f[a], vb = f[b];
      if (adjacent.count({std::min(va, vb), std::max(va, vb)})) continue;
      std::vector<int> one, two;
      for (int i = a;; i = (i + 1) % m) {
        one.push_back(f[i]);
        if (i == b) break;
      }
      for (int i = b;; i = (i + 1) % m) {
        two.push_back(f[i]);
        if (i == a) break;
      }
      faces[fi] = one;
      faces.push_back(two);
      link(va, vb);
    } else {
      if (room < 2) continue;
      std::vector<int> picks(m);
      std::iota(picks.begin(), picks.end(), 0);
      std::shuffle(picks.begin(), picks.end(), rng);
      const int k = 2 + static_cast<int>(rng() % std::min(m - 1, room - 1));
      picks.resize(k);
      std::sort(picks.begin(), picks.end());
      const int x = n++;
      faces.erase(faces.begin() + fi);
      for (int s = 0; s < k; ++s) {
        const int from = picks[s], to = picks[(s + 1) % k];
        std::vector<int> face{x};
        for (int i = from;; i = (i + 1) % m) {
          face.push_back(f[i]);
          if (i == to) break;
        }
        faces.push_back(face);
        link(x, f[from]);
      }
    }
  }
  return oddplanar::CombinatorialMap::from_faces(n, faces);
}

// Test-side measurements straight from the definitions.
struct Measured {
  int area = 0;
  int boundary = 0;
  int curvature = 0;
};

inline Measured measure(const oddplanar::Triangulation& tri, const std::vector<oddplanar::VertexId>& l) {
  const auto& m = tri.map();
  std::vector<char> in(m.vertex_count(), 0);
  for (oddplanar::VertexId v : l) in[v] = 1;
  Measured out;
  std::vector<int> sides(m.edge_count(), 0);
  for (oddplanar::FaceId f = 0; f < m.face_count(); ++f) {
    const auto& t = tri.face(f);
    if (!(in[t[0]] && in[t[1]] && in[t[2]])) continue;
    ++out.area;
    for (oddplanar::EdgeId e : m.face_edges(f)) ++sides[e];
  }
  for (oddplanar::EdgeId e = 0; e < m.edge_count(); ++e)
    if (in[m.edge(e).u] && in[m.edge(e).v]) out.boundary += 2 - sides[e];
  for (oddplanar::VertexId v : l) out.curvature += 6 - m.degree(v);
  return out;
}

inline int measured_moat_area(const oddplanar::Triangulation& tri, const std::vector<oddplanar::VertexId>& l, int w) {
  const auto& m = tri.map();
  std::vector<int> dist(m.vertex_count(), -1);
  std::vector<oddplanar::VertexId> frontier = l;
  for (oddplanar::VertexId v : l) dist[v] = 0;
  for (std::size_t k = 0; k < frontier.size(); ++k)
    for (oddplanar::VertexId u : m.rotation(frontier[k]))
      if (dist[u] < 0) {
        dist[u] = dist[frontier[k]] + 1;
        frontier.push_back(u);
      }
  int area = 0;
  for (oddplanar::FaceId f = 0; f < m.face_count(); ++f) {
    const auto& t = tri.face(f);
    const int lo = std::min({dist[t[0]], dist[t[1]], dist[t[2]]});
    const int hi = std::max({dist[t[0]], dist[t[1]], dist[t[2]]});
    if (lo <= w - 1 && hi > 0) ++area;
  }
  return area;
}

inline std::vector<oddplanar::VertexId> random_region(const oddplanar::Triangulation& tri, std::mt19937& rng) {
  const int n = tri.vertex_count();
  // Positive curvature needs a low-degree vertex, so start at one most of the time.
  std::vector<oddplanar::VertexId> seeds;
  for (oddplanar::VertexId v = 0; v < n; ++v)
    if (tri.degree(v) < 6) seeds.push_back(v);
  const oddplanar::VertexId start = rng() % 4 ? seeds[rng() % seeds.size()] : static_cast<oddplanar::VertexId>(rng() % n);
  std::vector<oddplanar::VertexId> region{start};
  const int target = std::min(n - 1, 1 + static_cast<int>(rng() % 12));
  std::vector<char> in(n, 0);
  in[region[0]] = 1;
  while (static_cast<int>(region.size()) < target) {
    const oddplanar::VertexId v = region[rng() % region.size()];
    const auto rot = tri.map().rotation(v);
    const oddplanar::VertexId u = rot[rng() % rot.size()];
    if (in[u]) continue;
    in[u] = 1;
    region.push_back(u);
  }
  std::sort(region.begin(), region.end());
  return region;
}

/// The worked example of a curvature-5 patch with its two moats: centre o,
/// rings a1..a3, b1..b4, c1..c5 and a far pole z.
inline oddplanar::CombinatorialMap worked_patch_map() {
  const int o = 0, z = 13;
  auto a = [](int i) { return i; };       // 1..3
  auto b = [](int i) { return 3 + i; };   // 1..4
  auto c = [](int i) { return 7 + i; };   // 1..5
  std::vector<std::vector<int>> tri{
      {o, a(1), a(2)},       {o, a(2), a(3)},       {o, a(3), a(1)},       {a(1), a(2), b(2)},
      {a(1), b(2), b(1)},    {a(1), b(1), b(4)},    {a(1), b(4), a(3)},    {a(2), a(3), b(3)},
      {a(2), b(3), b(2)},    {a(3), b(4), b(3)},    {b(1), c(1), c(2)},    {b(1), c(2), b(2)},
      {b(2), c(2), c(3)},    {b(2), c(3), b(3)},    {b(3), c(3), c(4)},    {b(3), c(4), b(4)},
      {b(4), c(4), c(5)},    {b(4), c(5), b(1)},    {b(1), c(5), c(1)}};
  for (int i = 1; i <= 5; ++i) tri.push_back({z, c(i), c(i % 5 + 1)});

  // Orient consistently: neighbouring triangles traverse a shared edge in
  // opposite directions.
  std::vector<int> state(tri.size(), 0);  // 0 unseen, 1 fixed
  std::queue<std::size_t> q;
  state[0] = 1;
  q.push(0);
  auto has = [](const std::vector<int>& t, int u, int v) {
    for (int i = 0; i < 3; ++i)
      if (t[i] == u && t[(i + 1) % 3] == v) return true;
    return false;
  };
  while (!q.empty()) {
    const auto f = q.front();
    q.pop();
    for (int i = 0; i < 3; ++i) {
      const int u = tri[f][i], v = tri[f][(i + 1) % 3];
      for (std::size_t g = 0; g < tri.size(); ++g) {
        if (state[g] || g == f) continue;
        const bool same = has(tri[g], u, v);
        if (!same && !has(tri[g], v, u)) continue;
        if (same) std::swap(tri[g][1], tri[g][2]);
        state[g] = 1;
        q.push(g);
      }
    }
  }
  return oddplanar::CombinatorialMap::from_faces(14, tri);
}

}  // namespace oracle
