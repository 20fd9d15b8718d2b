#include "oddplanar/tjoin.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace oddplanar {

TSet odd_vertex_set(const CombinatorialMap& map) {
  TSet t;
  t.from_odd_degrees = true;
  for (VertexId v = 0; v < map.vertex_count(); ++v)
    if (map.degree(v) % 2 == 1) t.vertices.push_back(v);
  return t;
}

TSet make_tset(const CombinatorialMap& map, std::vector<VertexId> vertices) {
  std::sort(vertices.begin(), vertices.end());
  if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
    throw std::invalid_argument("T contains a repeated vertex");
  for (VertexId v : vertices)
    if (v < 0 || v >= map.vertex_count()) throw std::invalid_argument("T vertex " + std::to_string(v + 1) + " out of range");
  if (vertices.size() % 2 != 0) throw std::invalid_argument("|T| must be even, got " + std::to_string(vertices.size()));
  return {std::move(vertices), false};
}

TMetric t_metric(const CombinatorialMap& map, const TSet& t) {
  TMetric out;
  out.terminals = t.vertices;
  const int k = static_cast<int>(t.vertices.size());
  std::vector<std::vector<int>> dist(k);
  for (int a = 0; a < k; ++a) dist[a] = bfs_distances(map, t.vertices[a]);
  out.distance.assign(k, std::vector<std::int64_t>(k, 0));
  out.path.assign(k, std::vector<std::vector<VertexId>>(k));
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b) {
      const auto& to_b = dist[b];
      VertexId cur = t.vertices[a];
      if (to_b[cur] < 0) throw std::invalid_argument("map is disconnected");
      out.distance[a][b] = out.distance[b][a] = to_b[cur];
      // Greedy descent towards b through the smallest eligible neighbour.
      std::vector<VertexId> path{cur};
      while (cur != t.vertices[b]) {
        VertexId next = -1;
        for (VertexId u : map.rotation(cur))
          if (to_b[u] == to_b[cur] - 1 && (next < 0 || u < next)) next = u;
        cur = next;
        path.push_back(cur);
      }
      out.path[b][a] = std::vector<VertexId>(path.rbegin(), path.rend());
      out.path[a][b] = std::move(path);
    }
  return out;
}

TJoin min_tjoin(const CombinatorialMap& map, const TSet& t) {
  if (t.vertices.size() % 2 != 0) throw std::invalid_argument("|T| must be even");
  TJoin out;
  if (t.vertices.empty()) return out;
  const TMetric metric = t_metric(map, t);
  const Matching matching = min_weight_perfect_matching(metric.distance);
  out.matching_weight = matching.weight;
  std::vector<char> in_join(map.edge_count(), 0);
  for (auto [a, b] : matching.pairs) {
    out.pairs.emplace_back(metric.terminals[a], metric.terminals[b]);
    const auto& path = metric.path[a][b];
    for (std::size_t s = 0; s + 1 < path.size(); ++s) in_join[map.edge_id(path[s], path[s + 1])] ^= 1;
  }
  for (EdgeId e = 0; e < map.edge_count(); ++e)
    if (in_join[e]) out.edges.push_back(e);
  out.size = static_cast<int>(out.edges.size());
  return out;
}

TJoinCheck verify_tjoin(const CombinatorialMap& map, const TSet& t, const std::vector<EdgeId>& join) {
  std::vector<int> parity(map.vertex_count(), 0);
  for (EdgeId e : join) {
    if (e < 0 || e >= map.edge_count()) throw std::invalid_argument("join edge out of range");
    parity[map.edge(e).u] ^= 1;
    parity[map.edge(e).v] ^= 1;
  }
  std::vector<int> want(map.vertex_count(), 0);
  for (VertexId v : t.vertices) want[v] = 1;
  TJoinCheck out;
  for (VertexId v = 0; v < map.vertex_count(); ++v)
    if (parity[v] != want[v]) out.parity_failures.push_back(v);
  out.ok = out.parity_failures.empty();
  return out;
}

Triangulation refine(const Triangulation& tri) {
  const auto& map = tri.map();
  const int n = map.vertex_count();
  std::vector<std::vector<VertexId>> faces;
  for (FaceId f = 0; f < tri.area(); ++f) {
    const auto [a, b, c] = tri.face(f);
    const VertexId ab = n + map.edge_id(a, b), bc = n + map.edge_id(b, c), ca = n + map.edge_id(c, a);
    faces.push_back({a, ab, ca});
    faces.push_back({b, bc, ab});
    faces.push_back({c, ca, bc});
    faces.push_back({ab, bc, ca});
  }
  return Triangulation(CombinatorialMap::from_faces(n + map.edge_count(), faces));
}

int MoatPackingCertificate::total_width() const {
  int total = 0;
  for (const auto& m : moats) total += m.width;
  return total;
}

namespace {

std::string vertex_list(const std::vector<VertexId>& vs) {
  std::string out;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(vs[i] + 1);
  }
  return out;
}

}  // namespace

PackingCheck verify_moat_packing(const Triangulation& tri, const MoatPackingCertificate& cert) {
  const int count = static_cast<int>(cert.moats.size());
  std::vector<std::vector<VertexId>> roots(count);
  for (int i = 0; i < count; ++i) {
    const auto& m = cert.moats[i];
    if (m.width < 1) throw std::invalid_argument("moat " + std::to_string(i + 1) + " has width < 1");
    if (m.root.empty()) throw std::invalid_argument("moat " + std::to_string(i + 1) + " has an empty root");
    for (VertexId v : m.root)
      if (v < 0 || v >= tri.vertex_count())
        throw std::invalid_argument("moat " + std::to_string(i + 1) + " references unknown vertex " + std::to_string(v + 1));
    roots[i] = m.root;
    std::sort(roots[i].begin(), roots[i].end());
    roots[i].erase(std::unique(roots[i].begin(), roots[i].end()), roots[i].end());
  }

  PackingCheck out;
  out.total_width = cert.total_width();
  std::vector<int> owner(tri.area(), -1);
  for (int i = 0; i < count; ++i) {
    const std::string name = "moat " + std::to_string(i + 1) + " (root " + vertex_list(roots[i]) + ")";
    const Patch root = make_patch(tri, roots[i]);
    if (!root.is_patch) {
      out.m3_patches = false;
      out.failures.push_back("M3: " + name + " root is not a patch");
      continue;
    }
    if (root.curvature != 1 && root.curvature != 3 && root.curvature != 5) {
      out.m4_odd_curvature = false;
      out.failures.push_back("M4: " + name + " has curvature " + std::to_string(root.curvature));
    }
    Moat grown;
    try {
      grown = moat(tri, roots[i], cert.moats[i].width);
    } catch (const GrowthOverflow& e) {
      out.m3_patches = false;
      out.failures.push_back("M3: " + name + ": " + e.what());
      continue;
    }
    for (std::size_t l = 1; l < grown.layers.size(); ++l) {
      const int c = curvature(tri, grown.layers[l]);
      if (c % 2 == 0) {
        out.m4_odd_curvature = false;
        out.failures.push_back("M4: " + name + " layer " + std::to_string(l) + " has even curvature " + std::to_string(c));
        break;
      }
    }
    for (FaceId f : grown.faces) {
      if (owner[f] >= 0) {
        out.m1_disjoint = false;
        out.failures.push_back("M1: moats " + std::to_string(owner[f] + 1) + " and " + std::to_string(i + 1) +
                               " share face " + std::to_string(f + 1));
      } else {
        owner[f] = i;
      }
    }
  }

  auto subset = [](const std::vector<VertexId>& a, const std::vector<VertexId>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
  };
  for (int i = 0; i < count; ++i) {
    bool minimal = true;
    for (int j = 0; j < count; ++j) {
      if (i == j) continue;
      if (roots[j] != roots[i] && subset(roots[j], roots[i])) minimal = false;
      if (j > i) {
        std::vector<VertexId> common;
        std::set_intersection(roots[i].begin(), roots[i].end(), roots[j].begin(), roots[j].end(),
                              std::back_inserter(common));
        if (!common.empty() && !subset(roots[i], roots[j]) && !subset(roots[j], roots[i])) {
          out.m6_laminar = false;
          out.failures.push_back("M6: roots of moats " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                                 " cross");
        }
      }
    }
    if (minimal && roots[i].size() != 1) {
      out.m5_singleton_minimal = false;
      out.failures.push_back("M5: minimal root of moat " + std::to_string(i + 1) + " has " +
                             std::to_string(roots[i].size()) + " vertices");
    }
  }
  return out;
}

MoatPackingCertificate extremal_packing(const Triangulation& tri) {
  std::vector<VertexId> fives;
  for (VertexId v = 0; v < tri.vertex_count(); ++v) {
    if (tri.degree(v) == 5)
      fives.push_back(v);
    else if (tri.degree(v) != 6)
      throw NotExtremal("vertex " + std::to_string(v + 1) + " has degree " + std::to_string(tri.degree(v)));
  }
  if (fives.size() != 12) throw NotExtremal("expected 12 degree-5 vertices, found " + std::to_string(fives.size()));
  const int area = tri.area();
  int k = static_cast<int>(std::lround(std::sqrt(area / 60.0)));
  if (k < 1 || 60 * k * k != area) throw NotExtremal("area " + std::to_string(area) + " is not 60 k^2");
  for (std::size_t a = 0; a < fives.size(); ++a) {
    const auto dist = bfs_distances(tri.map(), fives[a]);
    for (std::size_t b = a + 1; b < fives.size(); ++b)
      if (dist[fives[b]] < 2 * k)
        throw NotExtremal("degree-5 vertices " + std::to_string(fives[a] + 1) + " and " + std::to_string(fives[b] + 1) +
                          " are at distance " + std::to_string(dist[fives[b]]) + " < " + std::to_string(2 * k));
  }
  MoatPackingCertificate cert;
  for (VertexId v : fives) cert.moats.push_back({{v}, k});
  return cert;
}

MoatPackingCertificate lift_certificate(const Triangulation& tri, const MoatPackingCertificate& cert) {
  const auto& map = tri.map();
  const int n = map.vertex_count();
  MoatPackingCertificate out;
  for (const auto& m : cert.moats) {
    std::vector<char> in(n, 0);
    for (VertexId v : m.root) in[v] = 1;
    MoatEntry lifted{m.root, 2 * m.width};
    for (EdgeId e = 0; e < map.edge_count(); ++e)
      if (in[map.edge(e).u] && in[map.edge(e).v]) lifted.root.push_back(n + e);
    std::sort(lifted.root.begin(), lifted.root.end());
    out.moats.push_back(std::move(lifted));
  }
  return out;
}

MoatPackingCertificate parse_certificate(std::string_view text) {
  MoatPackingCertificate cert;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream words(line);
    std::vector<std::string> tok;
    for (std::string w; words >> w;) tok.push_back(w);
    if (tok.empty() || tok[0][0] == '#') continue;
    if (tok.size() != 2 || tok[0].rfind("root=", 0) != 0 || tok[1].rfind("width=", 0) != 0)
      throw FormatError("expected 'root=<v1,v2,...> width=<w>'", line_no);
    MoatEntry entry;
    std::stringstream list(tok[0].substr(5));
    for (std::string item; std::getline(list, item, ',');) {
      std::size_t used = 0;
      int v = 0;
      try {
        v = std::stoi(item, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != item.size() || v < 1) throw FormatError("bad root vertex '" + item + "'", line_no);
      entry.root.push_back(v - 1);
    }
    if (entry.root.empty()) throw FormatError("empty root", line_no);
    const std::string width = tok[1].substr(6);
    std::size_t used = 0;
    try {
      entry.width = std::stoi(width, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != width.size() || entry.width < 1) throw FormatError("bad width '" + width + "'", line_no);
    std::sort(entry.root.begin(), entry.root.end());
    cert.moats.push_back(std::move(entry));
  }
  return cert;
}

std::string format_certificate(const MoatPackingCertificate& cert) {
  std::string out;
  for (const auto& m : cert.moats) out += "root=" + vertex_list(m.root) + " width=" + std::to_string(m.width) + '\n';
  return out;
}

}  // namespace oddplanar
