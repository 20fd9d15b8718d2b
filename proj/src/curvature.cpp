#include "oddplanar/curvature.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace oddplanar {

Triangulation::Triangulation(CombinatorialMap map) : map_(std::move(map)) {
  faces_.reserve(map_.face_count());
  incident_.resize(map_.vertex_count());
  for (FaceId f = 0; f < map_.face_count(); ++f) {
    if (map_.face_size(f) != 3)
      throw InvalidMap("face " + std::to_string(f) + " has size " + std::to_string(map_.face_size(f)) +
                       ", not a triangulation");
    const auto vs = map_.face_vertices(f);
    faces_.push_back({vs[0], vs[1], vs[2]});
    for (VertexId v : vs) incident_[v].push_back(f);
  }
}

int TriangleComplex::euler_characteristic() const {
  return vertex_count - static_cast<int>(edges.size()) + area();
}

std::vector<int> TriangleComplex::side_counts() const {
  std::vector<int> count(edges.size(), 0);
  for (const auto& tri : sides)
    for (int e : tri) ++count[e];
  return count;
}

std::vector<int> TriangleComplex::degrees() const {
  std::vector<int> deg(vertex_count, 0);
  for (const auto& e : edges) {
    ++deg[e[0]];
    ++deg[e[1]];
  }
  return deg;
}

std::vector<char> TriangleComplex::boundary_vertices() const {
  std::vector<char> boundary(vertex_count, 0);
  const auto count = side_counts();
  for (std::size_t e = 0; e < edges.size(); ++e)
    if (count[e] < 2) boundary[edges[e][0]] = boundary[edges[e][1]] = 1;
  return boundary;
}

int TriangleComplex::boundary_length() const {
  int length = 0;
  for (int c : side_counts()) length += 2 - c;
  return length;
}

int gauss_bonnet_residual(const TriangleComplex& complex) {
  const auto deg = complex.degrees();
  const auto boundary = complex.boundary_vertices();
  int sum = 0;
  for (int v = 0; v < complex.vertex_count; ++v) sum += (boundary[v] ? 4 : 6) - deg[v];
  return sum - 6 * complex.euler_characteristic();
}

TriangleComplex induced_complex(const Triangulation& tri, std::span<const VertexId> vertices) {
  const auto& map = tri.map();
  std::vector<int> local(map.vertex_count(), -1);
  TriangleComplex out;
  for (VertexId v : vertices)
    if (local[v] < 0) local[v] = out.vertex_count++;
  std::vector<int> local_edge(map.edge_count(), -1);
  for (EdgeId e = 0; e < map.edge_count(); ++e) {
    const auto& edge = map.edge(e);
    if (local[edge.u] >= 0 && local[edge.v] >= 0) {
      local_edge[e] = static_cast<int>(out.edges.size());
      out.edges.push_back({local[edge.u], local[edge.v]});
    }
  }
  for (FaceId f = 0; f < tri.area(); ++f) {
    const auto& face = tri.face(f);
    if (local[face[0]] < 0 || local[face[1]] < 0 || local[face[2]] < 0) continue;
    std::array<int, 3> corner{}, side{};
    for (int k = 0; k < 3; ++k) {
      corner[k] = local[face[k]];
      side[k] = local_edge[map.edge_of(map.faces()[f][k])];
    }
    out.corners.push_back(corner);
    out.sides.push_back(side);
  }
  return out;
}

TriangleComplex as_complex(const Triangulation& tri) {
  std::vector<VertexId> all(tri.vertex_count());
  std::iota(all.begin(), all.end(), 0);
  return induced_complex(tri, all);
}

int curvature(const Triangulation& tri, std::span<const VertexId> vertices) {
  int c = 0;
  for (VertexId v : vertices) c += 6 - tri.degree(v);
  return c;
}

namespace {

std::vector<VertexId> sorted_unique(std::span<const VertexId> vertices, int n) {
  std::vector<VertexId> out(vertices.begin(), vertices.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  for (VertexId v : out)
    if (v < 0 || v >= n) throw std::invalid_argument("vertex " + std::to_string(v + 1) + " out of range");
  return out;
}

// Connectivity of the graph induced by vertices with member[v] == want.
bool induced_connected(const CombinatorialMap& map, const std::vector<char>& member, char want) {
  VertexId start = -1;
  int total = 0;
  for (VertexId v = 0; v < map.vertex_count(); ++v)
    if (member[v] == want) {
      ++total;
      if (start < 0) start = v;
    }
  if (total == 0) return false;
  std::vector<char> seen(map.vertex_count(), 0);
  std::vector<VertexId> stack{start};
  seen[start] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    for (VertexId u : map.rotation(v))
      if (member[u] == want && !seen[u]) {
        seen[u] = 1;
        ++reached;
        stack.push_back(u);
      }
  }
  return reached == total;
}

}  // namespace

Patch make_patch(const Triangulation& tri, std::span<const VertexId> vertices) {
  const auto& map = tri.map();
  Patch p;
  p.vertices = sorted_unique(vertices, tri.vertex_count());
  p.curvature = curvature(tri, p.vertices);
  std::vector<char> member(map.vertex_count(), 0);
  for (VertexId v : p.vertices) member[v] = 1;
  for (FaceId f = 0; f < tri.area(); ++f) {
    const auto& face = tri.face(f);
    if (member[face[0]] && member[face[1]] && member[face[2]]) p.faces.push_back(f);
  }
  p.area = static_cast<int>(p.faces.size());
  const TriangleComplex complex = induced_complex(tri, p.vertices);
  p.boundary_length = complex.boundary_length();
  if (p.vertices.empty()) return p;
  p.is_patch = complex.euler_characteristic() == 1 && induced_connected(map, member, 1) &&
               induced_connected(map, member, 0);
  return p;
}

PatchBoundary patch_boundary(const Triangulation& tri, std::span<const VertexId> vertices) {
  const Patch p = make_patch(tri, vertices);
  return {p.boundary_length, p.is_patch};
}

Moat moat(const Triangulation& tri, std::span<const VertexId> base, int width) {
  if (width < 0) throw std::invalid_argument("moat width must be non-negative");
  const Patch root = make_patch(tri, base);
  if (!root.is_patch) throw std::invalid_argument("moat base is not a patch");

  Moat out;
  out.base = root.vertices;
  out.width = width;
  std::vector<char> in_region(tri.vertex_count(), 0);
  std::vector<char> covered(tri.area(), 0);
  for (VertexId v : root.vertices) in_region[v] = 1;
  for (FaceId f : root.faces) covered[f] = 1;
  std::vector<VertexId> region = root.vertices;
  int covered_count = root.area;

  for (int i = 0; i < width; ++i) {
    if (i > 0) {
      const Patch grown = make_patch(tri, region);
      if (!grown.is_patch || grown.area != covered_count)
        throw GrowthOverflow("region after " + std::to_string(i) + " moat layers is not a patch");
    }
    out.layers.push_back(region);
    std::vector<FaceId> ring;
    for (VertexId v : region)
      for (FaceId f : tri.faces_around(v))
        if (!covered[f]) {
          covered[f] = 1;
          ring.push_back(f);
        }
    out.ring_areas.push_back(static_cast<int>(ring.size()));
    covered_count += static_cast<int>(ring.size());
    for (FaceId f : ring) {
      out.faces.push_back(f);
      for (VertexId v : tri.face(f))
        if (!in_region[v]) {
          in_region[v] = 1;
          region.push_back(v);
        }
    }
    std::sort(region.begin(), region.end());
  }
  std::sort(out.faces.begin(), out.faces.end());
  out.area = static_cast<int>(out.faces.size());
  return out;
}

namespace {

// An edge with both ends outside X whose two triangles both touch X.
bool has_dangling_complement_edge(const Triangulation& tri, std::span<const VertexId> x) {
  const auto& m = tri.map();
  std::vector<char> in(m.vertex_count(), 0);
  for (VertexId v : x) in[v] = 1;
  for (DartId d = 0; d < m.dart_count(); ++d) {
    const VertexId u = m.tail(d), v = m.head(d);
    if (u > v || in[u] || in[v]) continue;
    const auto& left = tri.face(m.face_of(d));
    const auto& right = tri.face(m.face_of(m.reverse(d)));
    const bool left_out = !in[left[0]] && !in[left[1]] && !in[left[2]];
    const bool right_out = !in[right[0]] && !in[right[1]] && !in[right[2]];
    if (!left_out && !right_out) return true;
  }
  return false;
}

}  // namespace

MoatIdentityReport moat_identities_check(const Triangulation& tri, std::span<const VertexId> base, int width) {
  MoatIdentityReport r;
  const Patch root = make_patch(tri, base);
  r.curvature = root.curvature;
  r.boundary_length = root.boundary_length;
  r.patch_area = root.area;
  r.width = width;
  const int c = root.curvature;
  if (!root.is_patch) {
    r.precondition_failure = "base is not a patch";
    return r;
  }
  if (c <= 0 || c >= 6) {
    r.precondition_failure = "curvature " + std::to_string(c) + " outside 1..5";
    return r;
  }
  Moat m;
  try {
    m = moat(tri, base, std::max(width, 1));
  } catch (const GrowthOverflow& e) {
    r.precondition_failure = e.what();
    return r;
  }
  for (int i = 0; i < width; ++i) {
    const int layer_c = curvature(tri, m.layers[i]);
    if (layer_c != c) {
      r.precondition_failure = "layer " + std::to_string(i) + " has curvature " + std::to_string(layer_c);
      return r;
    }
  }
  r.precondition_holds = true;

  const int b = root.boundary_length;
  r.mt1_area = m.ring_areas[0];
  r.mt1_expected = 2 * b + 6 - c;
  r.mt1_ok = r.mt1_area == r.mt1_expected;
  r.moat_area = 0;
  for (int i = 0; i < width; ++i) r.moat_area += m.ring_areas[i];
  r.moat_expected = 2 * width * b + (6 - c) * width * width;
  r.moat_ok = r.moat_area == r.moat_expected;
  r.layer_boundaries_ok = true;
  for (int i = 0; i < width; ++i) {
    const int len = make_patch(tri, m.layers[i]).boundary_length;
    r.layer_boundaries.push_back(len);
    if (len != b + (6 - c) * i) r.layer_boundaries_ok = false;
  }
  r.complements_clean = true;
  for (int i = 0; i + 1 < width && r.complements_clean; ++i) {
    if (has_dangling_complement_edge(tri, m.layers[i])) {
      r.complements_clean = false;
      r.unclean_layer = i;
    }
  }
  const std::int64_t excess = r.moat_area - std::int64_t{6 - c} * width * width;
  r.area_lower_bound_ok =
      excess >= 0 && excess * excess >= std::int64_t{4} * width * width * (6 - c) * root.area;
  return r;
}

IsoperimetricReport isoperimetric_check(const Triangulation& tri, std::span<const VertexId> vertices) {
  const Patch p = make_patch(tri, vertices);
  if (p.curvature >= 6) throw NotApplicable("isoperimetric inequality needs curvature <= 5");
  if (!p.is_patch) throw std::invalid_argument("vertex set is not a patch");
  IsoperimetricReport r;
  r.boundary_length = p.boundary_length;
  r.area = p.area;
  r.curvature = p.curvature;
  r.boundary_squared = std::int64_t{p.boundary_length} * p.boundary_length;
  r.scaled_area = std::int64_t{6 - p.curvature} * p.area;
  r.holds = r.boundary_squared >= r.scaled_area;
  r.equality = r.boundary_squared == r.scaled_area;
  const auto complex = induced_complex(tri, p.vertices);
  const auto boundary = complex.boundary_vertices();
  for (std::size_t i = 0; i < p.vertices.size(); ++i)
    if (!boundary[i] && tri.degree(p.vertices[i]) < 6) ++r.low_degree_interior;
  r.equality_condition_ok = !r.equality || r.low_degree_interior <= 1;
  return r;
}

std::vector<VertexId> ball(const Triangulation& tri, VertexId center, int radius) {
  const auto dist = bfs_distances(tri.map(), center);
  std::vector<VertexId> out;
  for (VertexId v = 0; v < tri.vertex_count(); ++v)
    if (dist[v] >= 0 && dist[v] <= radius) out.push_back(v);
  return out;
}

namespace {

std::vector<VertexId> parse_vertex_list(const std::string& token, std::size_t line) {
  std::vector<VertexId> out;
  std::stringstream ss(token);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw FormatError("bad vertex '" + item + "'", line);
    }
    if (used != item.size() || v < 1) throw FormatError("bad vertex '" + item + "'", line);
    out.push_back(v - 1);
  }
  if (out.empty()) throw FormatError("empty vertex list", line);
  return out;
}

int parse_positive(const std::string& token, std::size_t line, const char* what) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(token, &used);
  } catch (const std::exception&) {
    throw FormatError(std::string("bad ") + what, line);
  }
  if (used != token.size() || value < 1) throw FormatError(std::string("bad ") + what, line);
  return value;
}

}  // namespace

std::vector<PatchSpec> parse_patch_specs(std::string_view text) {
  std::vector<PatchSpec> out;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream words(line);
    std::vector<std::string> tok;
    for (std::string w; words >> w;) tok.push_back(w);
    if (tok.empty() || tok[0][0] == '#') continue;
    PatchSpec spec;
    if (tok[0] == "patch" && tok.size() == 3) {
    } else if (tok[0] == "moat" && tok.size() == 4) {
      spec.width = parse_positive(tok[3], line_no, "width");
    } else {
      throw FormatError("expected 'patch <graph> <vertices>' or 'moat <graph> <vertices> <width>'", line_no);
    }
    spec.graph = parse_positive(tok[1], line_no, "graph id");
    if (spec.graph < 1) throw FormatError("graph ids are 1-based", line_no);
    spec.vertices = parse_vertex_list(tok[2], line_no);
    out.push_back(std::move(spec));
  }
  return out;
}

std::string format_patch_spec(const PatchSpec& spec) {
  std::string out = spec.width ? "moat " : "patch ";
  out += std::to_string(spec.graph) + ' ';
  for (std::size_t i = 0; i < spec.vertices.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(spec.vertices[i] + 1);
  }
  if (spec.width) out += ' ' + std::to_string(*spec.width);
  return out;
}

}  // namespace oddplanar
