#include "oddplanar/generators.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <stdexcept>
#include <tuple>

#include "oddplanar/independent_set.hpp"

namespace oddplanar {

namespace {

using FaceList = std::vector<std::vector<VertexId>>;

CombinatorialMap tetrahedron() {
  return CombinatorialMap::from_faces(4, {{0, 1, 2}, {0, 2, 3}, {0, 3, 1}, {1, 3, 2}});
}

CombinatorialMap icosahedron() {
  // 0 on top, upper ring 1..5, lower ring 6..10, 11 at the bottom.
  FaceList faces;
  for (int i = 0; i < 5; ++i) {
    const int r0 = 1 + i, r1 = 1 + (i + 1) % 5;
    const int l0 = 6 + i, l1 = 6 + (i + 1) % 5;
    faces.push_back({0, r0, r1});
    faces.push_back({r1, r0, l0});
    faces.push_back({r1, l0, l1});
    faces.push_back({11, l1, l0});
  }
  return CombinatorialMap::from_faces(12, faces);
}

}  // namespace

CombinatorialMap platonic(std::string_view name) {
  if (name == "tetrahedron") return tetrahedron();
  if (name == "icosahedron") return icosahedron();
  if (name == "dodecahedron") return canonical(dual(icosahedron()).map);
  throw std::invalid_argument("unknown platonic solid '" + std::string(name) +
                              "' (expected tetrahedron, icosahedron or dodecahedron)");
}

CombinatorialMap prism(int k) {
  if (k < 3) throw std::invalid_argument("prism needs k >= 3");
  FaceList faces;
  std::vector<VertexId> top(k), bottom(k);
  for (int i = 0; i < k; ++i) {
    top[i] = i;
    bottom[i] = 2 * k - 1 - i;
    const int j = (i + 1) % k;
    faces.push_back({j, i, k + i, k + j});
  }
  faces.push_back(top);
  faces.push_back(bottom);
  return CombinatorialMap::from_faces(2 * k, faces);
}

// ---------------------------------------------------------------------------
// Goldberg-Coxeter

namespace {

// a + b w with w = exp(i pi / 3), so w^2 = w - 1.
struct Eis {
  long a = 0;
  long b = 0;
  friend bool operator==(const Eis&, const Eis&) = default;
  Eis operator+(const Eis& o) const { return {a + o.a, b + o.b}; }
  Eis operator-(const Eis& o) const { return {a - o.a, b - o.b}; }
  Eis operator*(const Eis& o) const { return {a * o.a - b * o.b, a * o.b + b * o.a + b * o.b}; }
  Eis scaled(long k) const { return {a * k, b * k}; }
};

constexpr Eis kOmega{0, 1};

// Positive when q lies to the left of the direction p.
long cross(const Eis& p, const Eis& q) { return p.a * q.b - p.b * q.a; }

Eis unit(int k) {
  Eis u{1, 0};
  for (int s = 0; s < k; ++s) u = u * kOmega;
  return u;
}

using Key = std::tuple<int, int, long, long>;

class GCBuilder {
 public:
  GCBuilder(const CombinatorialMap& seed, int i, int j)
      : seed_(seed), v_{i, j}, g_(std::gcd(i, j)) {
    const int nf = seed.face_count();
    corners_.resize(nf);
    pos_.resize(nf);
    across_.resize(nf);
    for (FaceId f = 0; f < nf; ++f) {
      const auto vs = seed.face_vertices(f);
      corners_[f] = {vs[0], vs[1], vs[2]};
      pos_[f] = {Eis{0, 0}, v_, kOmega * v_};
    }
    for (FaceId f = 0; f < nf; ++f)
      for (int k = 0; k < 3; ++k)
        across_[f][k] = seed.face_of(seed.find_dart(corners_[f][(k + 1) % 3], corners_[f][k]));
  }

  CombinatorialMap build() {
    FaceList faces;
    for (FaceId f = 0; f < seed_.face_count(); ++f) {
      long amin = 0, amax = 0, bmin = 0, bmax = 0;
      for (const Eis& p : pos_[f]) {
        amin = std::min(amin, p.a), amax = std::max(amax, p.a);
        bmin = std::min(bmin, p.b), bmax = std::max(bmax, p.b);
      }
      for (long a = amin - 1; a <= amax; ++a)
        for (long b = bmin - 1; b <= bmax; ++b) {
          const Eis p{a, b};
          const std::array<Eis, 3> up{p, p + Eis{1, 0}, p + kOmega};
          const std::array<Eis, 3> down{p + Eis{1, 0}, p + Eis{1, 1}, p + kOmega};
          if (owns(f, Eis{3 * a + 1, 3 * b + 1})) faces.push_back(ids(f, up));
          if (owns(f, Eis{3 * a + 2, 3 * b + 2})) faces.push_back(ids(f, down));
        }
    }
    return CombinatorialMap::from_faces(static_cast<int>(keys_.size()), faces);
  }

 private:
  // Centroid given in thirds of lattice units. A triangle whose centroid
  // lies on a seed edge belongs to the face with the smaller id.
  bool owns(FaceId f, const Eis& centroid3) const {
    int on_edge = -1;
    for (int k = 0; k < 3; ++k) {
      const Eis from = pos_[f][k].scaled(3), to = pos_[f][(k + 1) % 3].scaled(3);
      const long s = cross(to - from, centroid3 - from);
      if (s < 0) return false;
      if (s == 0) on_edge = k;
    }
    return on_edge < 0 || across_[f][on_edge] > f;
  }

  std::vector<VertexId> ids(FaceId f, const std::array<Eis, 3>& tri) {
    std::vector<VertexId> out;
    for (const Eis& p : tri) {
      const Key key = classify(f, p);
      auto [it, inserted] = keys_.try_emplace(key, static_cast<VertexId>(keys_.size()));
      out.push_back(it->second);
    }
    return out;
  }

  Key classify(FaceId f, Eis p) const {
    for (int hop = 0; hop < 8; ++hop) {
      std::array<long, 3> side{};
      int worst = -1;
      for (int k = 0; k < 3; ++k) {
        const Eis& from = pos_[f][k];
        side[k] = cross(pos_[f][(k + 1) % 3] - from, p - from);
        if (side[k] < 0 && (worst < 0 || side[k] < side[worst])) worst = k;
      }
      if (worst < 0) return key_inside(f, p, side);
      // Unfold into the neighbouring face across seed edge `worst`.
      const VertexId x = corners_[f][worst], y = corners_[f][(worst + 1) % 3];
      const FaceId g = across_[f][worst];
      const Eis gx = pos_[g][index_of(g, x)], gy = pos_[g][index_of(g, y)];
      const Eis d = pos_[f][(worst + 1) % 3] - pos_[f][worst];
      int s = 0;
      while (s < 6 && !(unit(s) * d == gy - gx)) ++s;
      if (s == 6) throw std::logic_error("seed faces are not congruent");
      p = gx + unit(s) * (p - pos_[f][worst]);
      f = g;
    }
    throw std::logic_error("lattice point could not be located on the seed");
  }

  Key key_inside(FaceId f, const Eis& p, const std::array<long, 3>& side) const {
    for (int k = 0; k < 3; ++k)
      if (p == pos_[f][k]) return {0, corners_[f][k], 0, 0};
    for (int k = 0; k < 3; ++k) {
      if (side[k] != 0) continue;
      const Eis from = pos_[f][k];
      const Eis step{(pos_[f][(k + 1) % 3] - from).a / g_, (pos_[f][(k + 1) % 3] - from).b / g_};
      const Eis d = p - from;
      const long t = step.a != 0 ? d.a / step.a : d.b / step.b;
      const VertexId x = corners_[f][k], y = corners_[f][(k + 1) % 3];
      return x < y ? Key{1, x, y, t} : Key{1, y, x, g_ - t};
    }
    return {2, f, p.a, p.b};
  }

  int index_of(FaceId f, VertexId v) const {
    for (int k = 0; k < 3; ++k)
      if (corners_[f][k] == v) return k;
    throw std::logic_error("vertex not on face");
  }

  const CombinatorialMap& seed_;
  Eis v_;
  long g_;
  std::vector<std::array<VertexId, 3>> corners_;
  std::vector<std::array<Eis, 3>> pos_;
  std::vector<std::array<FaceId, 3>> across_;
  std::map<Key, VertexId> keys_;
};

}  // namespace

Triangulation goldberg_coxeter(const GCSpec& spec) {
  if (spec.i < 1 || spec.j < 0) throw std::invalid_argument("Goldberg-Coxeter vector needs i >= 1 and j >= 0");
  const CombinatorialMap seed = spec.seed == Seed::Icosahedron ? icosahedron() : tetrahedron();
  GCBuilder builder(seed, spec.i, spec.j);
  return Triangulation(canonical(builder.build()));
}

// ---------------------------------------------------------------------------
// D_r(c)

Disc disc(int c, int r) {
  if (c < 1 || c > 5) throw std::invalid_argument("disc curvature must be in 1..5");
  if (r < 0) throw std::invalid_argument("disc radius must be non-negative");
  const int s = 6 - c;
  Disc out;
  out.c = c;
  out.r = r;
  TriangleComplex& cx = out.complex;
  cx.vertex_count = 1 + s * r * (r + 1) / 2;

  auto ring_start = [s](int i) { return i == 0 ? 0 : 1 + s * (i - 1) * i / 2; };
  auto vertex = [&](int i, int p) { return i == 0 ? 0 : ring_start(i) + p % (s * i); };

  std::map<std::tuple<int, int, int, int>, int> edge_ids;
  auto edge = [&](std::tuple<int, int, int, int> key, int a, int b) {
    auto [it, inserted] = edge_ids.try_emplace(key, static_cast<int>(cx.edges.size()));
    if (inserted) cx.edges.push_back({a, b});
    return it->second;
  };
  // Radial edge between inner position q of ring i-1 and outer position p of
  // ring i, with full turns removed so that wrapped copies coincide.
  auto radial = [&](int i, int q, int p) {
    if (i == 1) return edge({0, 1, 0, p % s}, 0, vertex(1, p));
    if (q >= s * (i - 1)) q -= s * (i - 1), p -= s * i;
    return edge({0, i, q, p}, vertex(i - 1, q), vertex(i, p));
  };
  auto around = [&](int i, int p) { return edge({1, i, p % (s * i), 0}, vertex(i, p), vertex(i, p + 1)); };

  for (int i = 1; i <= r; ++i)
    for (int sector = 0; sector < s; ++sector) {
      auto in = [&](int t) { return sector * (i - 1) + t; };
      auto outp = [&](int t) { return sector * i + t; };
      for (int t = 0; t < i; ++t) {
        cx.corners.push_back({vertex(i - 1, in(t)), vertex(i, outp(t)), vertex(i, outp(t + 1))});
        cx.sides.push_back({radial(i, in(t), outp(t)), around(i, outp(t)), radial(i, in(t), outp(t + 1))});
      }
      for (int t = 0; t + 1 < i; ++t) {
        cx.corners.push_back({vertex(i - 1, in(t)), vertex(i, outp(t + 1)), vertex(i - 1, in(t + 1))});
        cx.sides.push_back(
            {radial(i, in(t), outp(t + 1)), radial(i, in(t + 1), outp(t + 1)), around(i - 1, in(t))});
      }
    }

  out.full_degree.assign(cx.vertex_count, 6);
  out.full_degree[0] = s;
  const auto deg = cx.degrees();
  out.dual_face_count = cx.vertex_count;
  for (int v = 0; v < cx.vertex_count; ++v) out.dual_boundary_length += out.full_degree[v] - deg[v];
  return out;
}

// ---------------------------------------------------------------------------
// Pentagon/heptagon family

std::vector<FaceId> edge_disjoint_face_packing(const CombinatorialMap& map, std::vector<FaceId> faces,
                                               bool exact) {
  std::vector<int> index(map.face_count(), -1);
  std::vector<FaceId> candidates;
  for (FaceId f : faces) {
    const auto edges = map.face_edges(f);
    if (static_cast<int>(edges.size()) != map.face_size(f)) continue;  // meets itself
    if (index[f] < 0) {
      index[f] = static_cast<int>(candidates.size());
      candidates.push_back(f);
    }
  }
  std::vector<std::pair<int, int>> conflicts;
  for (EdgeId e = 0; e < map.edge_count(); ++e) {
    const DartId d = map.find_dart(map.edge(e).u, map.edge(e).v);
    const int a = index[map.face_of(d)], b = index[map.face_of(map.reverse(d))];
    if (a >= 0 && b >= 0) conflicts.emplace_back(a, b);
  }

  std::vector<FaceId> chosen;
  if (exact && candidates.size() <= 128) {
    try {
      for (int i : maximum_independent_set(static_cast<int>(candidates.size()), conflicts,
                                           node_budget_from_env())
                       .vertices)
        chosen.push_back(candidates[i]);
    } catch (const BudgetExceeded&) {
      chosen.clear();
    }
  }
  if (chosen.empty()) {
    auto smallest = [&](FaceId f) {
      const auto vs = map.face_vertices(f);
      return *std::min_element(vs.begin(), vs.end());
    };
    std::sort(candidates.begin(), candidates.end(), [&](FaceId a, FaceId b) {
      return std::tuple(map.face_size(a), smallest(a), a) < std::tuple(map.face_size(b), smallest(b), b);
    });
    std::vector<char> used(map.edge_count(), 0);
    for (FaceId f : candidates) {
      const auto edges = map.face_edges(f);
      if (std::any_of(edges.begin(), edges.end(), [&](EdgeId e) { return used[e]; })) continue;
      for (EdgeId e : edges) used[e] = 1;
      chosen.push_back(f);
    }
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

Family57 family57(int k) {
  if (k < 1) throw std::invalid_argument("family57 needs k >= 1");
  // Concentric cycles; angles in units of 18 degrees. Each level lists its
  // vertex angles and the angles of the spokes to the next level out.
  struct Level {
    std::vector<int> angles;
    std::vector<int> spokes_out;
  };
  auto seq = [](int start, int step, int count) {
    std::vector<int> out;
    for (int t = 0; t < count; ++t) out.push_back((start + step * t) % 20);
    return out;
  };
  auto merged = [](std::vector<int> a, const std::vector<int>& b) {
    a.insert(a.end(), b.begin(), b.end());
    std::sort(a.begin(), a.end());
    return a;
  };
  const auto odd = seq(1, 2, 10), even = seq(4, 2, 10);
  const auto three = seq(3, 4, 5), five = seq(5, 4, 5);

  std::vector<Level> levels;
  levels.push_back({merged(five, {}), five});
  levels.push_back({odd, three});
  for (int m = 0; m < k; ++m) {
    levels.push_back({merged(even, three), even});
    levels.push_back({merged(even, five), five});
    levels.push_back({odd, three});
  }
  levels.push_back({merged(three, {}), {}});

  std::vector<std::map<int, VertexId>> at(levels.size());
  int n = 0;
  for (std::size_t l = 0; l < levels.size(); ++l)
    for (int a : levels[l].angles) at[l][a] = n++;

  std::vector<std::vector<VertexId>> rotations(n);
  for (std::size_t l = 0; l < levels.size(); ++l) {
    const auto& angles = levels[l].angles;
    const int size = static_cast<int>(angles.size());
    for (int t = 0; t < size; ++t) {
      const int a = angles[t];
      auto& rot = rotations[at[l][a]];
      const bool out = std::count(levels[l].spokes_out.begin(), levels[l].spokes_out.end(), a) > 0;
      const bool in = l > 0 && std::count(levels[l - 1].spokes_out.begin(), levels[l - 1].spokes_out.end(), a) > 0;
      // Clockwise: outward, previous angle, inward, next angle.
      if (out) rot.push_back(at[l + 1].at(a));
      rot.push_back(at[l][angles[(t + size - 1) % size]]);
      if (in) rot.push_back(at[l - 1].at(a));
      rot.push_back(at[l][angles[(t + 1) % size]]);
    }
  }

  Family57 out{k, canonical(CombinatorialMap(std::move(rotations))), {}};
  for (FaceId f = 0; f < out.map.face_count(); ++f) {
    const int size = out.map.face_size(f);
    if (size != 5 && size != 7) throw std::logic_error("family57 produced a face of size " + std::to_string(size));
  }
  out.packing = edge_disjoint_face_packing(out.map, odd_faces(out.map), true);
  return out;
}

}  // namespace oddplanar
