#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "oddplanar/generators.hpp"
#include "oddplanar/tjoin.hpp"
#include "oracles.hpp"

using namespace oddplanar;

namespace {

WeightMatrix random_matrix(std::mt19937& rng, int n, int max_weight) {
  WeightMatrix w(n, std::vector<std::int64_t>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) w[i][j] = w[j][i] = rng() % (max_weight + 1);
  return w;
}

std::vector<VertexId> degree5(const Triangulation& tri) {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < tri.vertex_count(); ++v)
    if (tri.degree(v) == 5) out.push_back(v);
  return out;
}

}  // namespace

TEST_CASE("matching on a path and a triangle") {
  // Path 0-1-2-3 with a heavy middle edge.
  const std::vector<WeightedEdge> path{{0, 1, 2}, {1, 2, 5}, {2, 3, 2}};
  CHECK(max_weight_matching(4, path, false) == std::vector<int>{-1, 2, 1, -1});
  CHECK(max_weight_matching(4, path, true) == std::vector<int>{1, 0, 3, 2});
  // Odd cycle forces a blossom.
  const std::vector<WeightedEdge> blossom{{0, 1, 8}, {1, 2, 9}, {0, 2, 10}, {2, 3, 7}, {3, 4, 1}};
  const auto mate = max_weight_matching(5, blossom, false);
  CHECK(mate[0] == 1);
  CHECK(mate[2] == 3);
}

TEST_CASE("minimum perfect matching input checks") {
  CHECK_THROWS_AS(min_weight_perfect_matching(WeightMatrix(3, std::vector<std::int64_t>(3, 0))), std::invalid_argument);
  CHECK_THROWS_AS(min_weight_perfect_matching({{0, 1}, {2, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(min_weight_perfect_matching({{0, -1}, {-1, 0}}), std::invalid_argument);
  CHECK(min_weight_perfect_matching({}).weight == 0);
}

TEST_CASE("property: blossom engine equals exhaustive and subset-DP oracles") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 * (1 + static_cast<int>(rng() % 8));  // up to 16
    const auto w = random_matrix(rng, n, trial % 3 == 0 ? 3 : 50);
    const Matching m = min_weight_perfect_matching(w);
    CAPTURE(n);
    CHECK(m.weight == matching_oracle(w).weight);
    if (n <= 14) CHECK(m.weight == oracle::brute_force_matching(w));
    std::vector<int> seen(n, 0);
    std::int64_t total = 0;
    for (auto [i, j] : m.pairs) {
      ++seen[i];
      ++seen[j];
      total += w[i][j];
    }
    CHECK(total == m.weight);
    CHECK(std::all_of(seen.begin(), seen.end(), [](int s) { return s == 1; }));
  }
}

TEST_CASE("T metric paths are lexicographically smallest") {
  const auto p6 = prism(6);  // outer 0..5, inner 6..11
  const TSet t = make_tset(p6, {0, 3});
  const TMetric metric = t_metric(p6, t);
  CHECK(metric.distance[0][1] == 3);
  CHECK(metric.path[0][1] == std::vector<VertexId>{0, 1, 2, 3});
  CHECK_THROWS_AS(make_tset(p6, {0}), std::invalid_argument);
  CHECK_THROWS_AS(make_tset(p6, {0, 12}), std::invalid_argument);
}

TEST_CASE("property: min T-join equals exhaustive search") {
  std::mt19937 rng(99);
  int instances = 0;
  while (instances < 200) {
    const auto map = oracle::random_plane_map(rng, 14);
    const int n = map.vertex_count();
    std::vector<VertexId> t;
    for (VertexId v = 0; v < n; ++v)
      if (rng() % 2) t.push_back(v);
    if (t.size() % 2) t.pop_back();
    const TSet ts = make_tset(map, t);
    const TJoin j = min_tjoin(map, ts);
    CHECK(j.size == oracle::brute_force_tjoin(n, oracle::edge_list(map), ts.vertices));
    CHECK(j.size == static_cast<int>(j.edges.size()));
    CHECK(verify_tjoin(map, ts, j.edges).ok);
    ++instances;
  }
}

TEST_CASE("property: T-join size is invariant under relabelling") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const auto map = oracle::random_plane_map(rng, 20);
    const TSet t = odd_vertex_set(map);
    std::vector<VertexId> perm(map.vertex_count());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<VertexId> moved;
    for (VertexId v : t.vertices) moved.push_back(perm[v]);
    const auto relabelled = relabel(map, perm);
    CHECK(min_tjoin(map, t).size == min_tjoin(relabelled, make_tset(relabelled, moved)).size);
  }
}

TEST_CASE("parity failures are reported") {
  const auto tet = platonic("tetrahedron");
  const TSet t = make_tset(tet, {0, 1});
  const std::vector<EdgeId> wrong{tet.edge_id(0, 2)};
  const auto check = verify_tjoin(tet, t, wrong);
  CHECK_FALSE(check.ok);
  CHECK(check.parity_failures == std::vector<VertexId>{1, 2});
  CHECK(verify_tjoin(tet, t, {tet.edge_id(0, 1)}).ok);
}

TEST_CASE("dodecahedron: odd faces matched in the icosahedron") {
  const auto ico = platonic("icosahedron");
  const TSet t = odd_vertex_set(ico);
  CHECK(t.vertices.size() == 12);
  const TJoin j = min_tjoin(ico, t);
  // Independent check: exhaustive matching on test-side BFS distances.
  const auto edges = oracle::edge_list(ico);
  WeightMatrix d(12, std::vector<std::int64_t>(12));
  for (int a = 0; a < 12; ++a) {
    const auto dist = oracle::bfs(12, edges, a);
    for (int b = 0; b < 12; ++b) d[a][b] = dist[b];
  }
  CHECK(oracle::brute_force_matching(d) == 6);
  CHECK(j.size == 6);
  CHECK(j.matching_weight == 6);
}

TEST_CASE("degree-5 vertices of GC(k,k) need 12k edges") {
  for (int k = 1; k <= 3; ++k) {
    const auto tri = goldberg_coxeter({Seed::Icosahedron, k, k});
    const TSet t = make_tset(tri.map(), degree5(tri));
    const TJoin j = min_tjoin(tri.map(), t);
    CHECK(j.size == 12 * k);
    CHECK(verify_tjoin(tri.map(), t, j.edges).ok);
  }
}

TEST_CASE("refinement") {
  const auto tri = goldberg_coxeter({Seed::Icosahedron, 2, 2});
  const auto fine = refine(tri);
  CHECK(fine.area() == 4 * tri.area());
  CHECK(fine.vertex_count() == tri.vertex_count() + tri.map().edge_count());
  for (VertexId v = 0; v < tri.vertex_count(); ++v) CHECK(fine.degree(v) == tri.degree(v));
  CHECK(gauss_bonnet_residual(as_complex(fine)) == 0);
  const TSet t = make_tset(tri.map(), degree5(tri));
  CHECK(min_tjoin(tri.map(), t).size == 24);
  CHECK(min_tjoin(fine.map(), make_tset(fine.map(), t.vertices)).size == 48);
}

TEST_CASE("extremal moat packings") {
  for (int k = 1; k <= 3; ++k) {
    const auto tri = goldberg_coxeter({Seed::Icosahedron, k, k});
    const auto cert = extremal_packing(tri);
    CHECK(cert.moats.size() == 12);
    CHECK(cert.total_width() == 12 * k);
    const auto check = verify_moat_packing(tri, cert);
    CHECK(check.ok());
    CHECK(check.total_width == 12 * k);
    const TSet t = make_tset(tri.map(), degree5(tri));
    CHECK(check.total_width <= min_tjoin(tri.map(), t).size);
  }
  CHECK_THROWS_AS(extremal_packing(goldberg_coxeter({Seed::Icosahedron, 2, 1})), NotExtremal);
  CHECK_THROWS_AS(extremal_packing(goldberg_coxeter({Seed::Tetrahedron, 1, 1})), NotExtremal);
}

TEST_CASE("lifted certificates double the width") {
  for (int k = 1; k <= 2; ++k) {
    const auto tri = goldberg_coxeter({Seed::Icosahedron, k, k});
    const auto fine = refine(tri);
    const auto lifted = lift_certificate(tri, extremal_packing(tri));
    const auto check = verify_moat_packing(fine, lifted);
    CHECK(check.ok());
    CHECK(check.total_width == 24 * k);
    const TSet t = make_tset(fine.map(), degree5(tri));
    CHECK(check.total_width <= min_tjoin(fine.map(), t).size);
  }
}

TEST_CASE("broken certificates fail the right property") {
  const auto tri = goldberg_coxeter({Seed::Icosahedron, 2, 2});
  auto cert = extremal_packing(tri);

  auto wide = cert;
  wide.moats[0].width += 1;
  const auto c1 = verify_moat_packing(tri, wide);
  CHECK_FALSE(c1.ok());
  CHECK_FALSE(c1.m1_disjoint);

  // A degree-6 vertex has curvature 0.
  VertexId flat = 0;
  while (tri.degree(flat) != 6) ++flat;
  MoatPackingCertificate even{{{{flat}, 1}}};
  CHECK_FALSE(verify_moat_packing(tri, even).m4_odd_curvature);

  // A minimal root that is not a singleton.
  const VertexId u = cert.moats[0].root[0];
  std::vector<VertexId> pair{u, tri.map().rotation(u)[0]};
  std::sort(pair.begin(), pair.end());
  MoatPackingCertificate fat{{{pair, 1}}};
  CHECK_FALSE(verify_moat_packing(tri, fat).m5_singleton_minimal);

  // Crossing roots.
  const VertexId v = tri.map().rotation(u)[1];
  std::vector<VertexId> other{v, tri.map().rotation(v)[0]};
  std::sort(other.begin(), other.end());
  MoatPackingCertificate crossing{{{{u}, 1}, {pair, 1}, {other, 1}}};
  CHECK_FALSE(verify_moat_packing(tri, crossing).ok());

  CHECK_THROWS_AS(verify_moat_packing(tri, MoatPackingCertificate{{{{9999}, 1}}}), std::invalid_argument);
}

TEST_CASE("certificate text format") {
  const auto cert = parse_certificate("# two moats\nroot=1 width=2\nroot=3,4,5 width=1\n");
  REQUIRE(cert.moats.size() == 2);
  CHECK(cert.moats[0].root == std::vector<VertexId>{0});
  CHECK(cert.moats[1].root == std::vector<VertexId>{2, 3, 4});
  CHECK(cert.total_width() == 3);
  CHECK(parse_certificate(format_certificate(cert)).moats[1].root == cert.moats[1].root);
  CHECK(format_certificate(parse_certificate(format_certificate(cert))) == format_certificate(cert));
  CHECK_THROWS_AS(parse_certificate("root=1 width=0\n"), FormatError);
  CHECK_THROWS_AS(parse_certificate("root=a width=1\n"), FormatError);
  CHECK_THROWS_AS(parse_certificate("width=1\n"), FormatError);
}
