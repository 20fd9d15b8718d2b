#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "oddplanar/generators.hpp"
#include "oddplanar/tjoin.hpp"
#include "oracles.hpp"

using namespace oddplanar;
using oracle::measure;
using oracle::measured_moat_area;
using oracle::Measured;
using oracle::random_region;

namespace {

std::vector<Triangulation> triangulations() {
  std::vector<Triangulation> out;
  for (auto [i, j] : {std::pair{1, 0}, {1, 1}, {2, 1}, {2, 2}, {3, 1}, {3, 3}})
    out.push_back(goldberg_coxeter({Seed::Icosahedron, i, j}));
  for (auto [i, j] : {std::pair{1, 0}, {1, 1}, {2, 2}, {3, 2}}) out.push_back(goldberg_coxeter({Seed::Tetrahedron, i, j}));
  return out;
}

}  // namespace

TEST_CASE("property: Gauss-Bonnet and Euler on generated triangulations") {
  for (const auto& tri : triangulations()) {
    const auto c = as_complex(tri);
    CHECK(c.euler_characteristic() == 2);
    CHECK(gauss_bonnet_residual(c) == 0);
    std::vector<VertexId> all(tri.vertex_count());
    std::iota(all.begin(), all.end(), 0);
    CHECK(curvature(tri, all) == 12);
    CHECK(tri.vertex_count() == tri.area() / 2 + 2);
  }
}

TEST_CASE("property: D_r(c) counts") {
  for (int c = 1; c <= 5; ++c)
    for (int r = 0; r <= 4; ++r) {
      CAPTURE(c);
      CAPTURE(r);
      const Disc d = disc(c, r);
      const int s = 6 - c;
      CHECK(d.complex.euler_characteristic() == 1);
      CHECK(gauss_bonnet_residual(d.complex) == 0);
      CHECK(d.complex.area() == s * r * r);
      CHECK(d.complex.boundary_length() == s * r);
      CHECK(d.dual_boundary_length == s * (2 * r + 1));
      CHECK(d.dual_face_count - 1 == s * r * (r + 1) / 2);
    }
  CHECK_THROWS_AS(disc(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(disc(3, -1), std::invalid_argument);
}

TEST_CASE("single vertices and edges") {
  const auto tri = goldberg_coxeter({Seed::Icosahedron, 2, 2});
  const std::vector<VertexId> one{0};
  const auto p = make_patch(tri, one);
  CHECK(p.is_patch);
  CHECK(p.area == 0);
  CHECK(p.boundary_length == 0);
  const std::vector<VertexId> two{0, tri.map().rotation(0)[0]};
  const auto q = make_patch(tri, two);
  CHECK(q.is_patch);
  CHECK(q.boundary_length == 2);
}

TEST_CASE("annuli and disconnected sets are not patches") {
  const auto tri = goldberg_coxeter({Seed::Icosahedron, 2, 2});
  auto b2 = ball(tri, 0, 2);
  const auto b0 = ball(tri, 0, 0);
  std::vector<VertexId> ring;
  std::set_difference(b2.begin(), b2.end(), b0.begin(), b0.end(), std::back_inserter(ring));
  CHECK_FALSE(make_patch(tri, ring).is_patch);
  const auto far = oracle::bfs(tri.vertex_count(), oracle::edge_list(tri.map()), 0);
  const VertexId v = static_cast<VertexId>(std::max_element(far.begin(), far.end()) - far.begin());
  const std::vector<VertexId> split{0, v};
  CHECK_FALSE(make_patch(tri, split).is_patch);
}

TEST_CASE("worked patch instance") {
  const Triangulation tri(oracle::worked_patch_map());
  const std::vector<VertexId> l{0, 1, 2, 3};
  const auto p = make_patch(tri, l);
  REQUIRE(p.is_patch);
  CHECK(p.curvature == 5);
  CHECK(p.area == 3);
  CHECK(p.boundary_length == 3);
  const auto r = moat_identities_check(tri, l, 2);
  CHECK(r.precondition_holds);
  CHECK(r.mt1_area == 7);
  CHECK(r.moat_area == 16);
  CHECK(r.all_ok());
  CHECK(moat(tri, l, 1).area == 7);
  CHECK(moat(tri, l, 2).area == 16);
  CHECK(measured_moat_area(tri, l, 2) == 16);
}

TEST_CASE("moat growth that wraps around the sphere overflows") {
  const auto tri = goldberg_coxeter({Seed::Icosahedron, 1, 0});
  const std::vector<VertexId> l{0};
  CHECK_THROWS_AS(moat(tri, l, 4), GrowthOverflow);
  CHECK_FALSE(moat_identities_check(tri, l, 4).precondition_holds);
}

TEST_CASE("property: moat identities on random patches") {
  std::mt19937 rng(11);
  const auto tris = triangulations();
  int checked = 0, unclean = 0;
  for (int attempt = 0; attempt < 4000 && checked < 150; ++attempt) {
    const auto& tri = tris[rng() % tris.size()];
    const auto l = random_region(tri, rng);
    const int w = 1 + static_cast<int>(rng() % 3);
    const auto r = moat_identities_check(tri, l, w);
    if (!r.precondition_holds) continue;
    const Measured m = measure(tri, l);
    if (m.area == 0) continue;
    const int s = 6 - m.curvature;
    CHECK(r.mt1_area == 2 * m.boundary + s);
    CHECK(r.area_lower_bound_ok);
    CHECK(r.all_ok());
    if (!r.complements_clean) {
      // Pinched complement: the exact formula only bounds the area from above.
      ++unclean;
      CHECK(measured_moat_area(tri, l, w) < 2 * w * m.boundary + s * w * w);
      continue;
    }
    ++checked;
    CHECK(r.moat_area == 2 * w * m.boundary + s * w * w);
    CHECK(measured_moat_area(tri, l, w) == 2 * w * m.boundary + s * w * w);
    const auto mt = moat(tri, l, w);
    int sum = 0;
    for (int a : mt.ring_areas) sum += a;
    CHECK(sum == mt.area);
    const auto base = make_patch(tri, l);
    std::vector<FaceId> common;
    std::set_intersection(mt.faces.begin(), mt.faces.end(), base.faces.begin(), base.faces.end(),
                          std::back_inserter(common));
    CHECK(common.empty());
  }
  CHECK(checked >= 100);
  MESSAGE("exact identities on " << checked << " patches, " << unclean << " with pinched complements");
}

TEST_CASE("property: isoperimetric inequality on random patches") {
  std::mt19937 rng(5);
  const auto tris = triangulations();
  int checked = 0;
  for (int attempt = 0; attempt < 1000; ++attempt) {
    const auto& tri = tris[rng() % tris.size()];
    const auto l = random_region(tri, rng);
    const auto p = make_patch(tri, l);
    if (!p.is_patch || p.area == 0 || p.curvature >= 6) continue;
    const Measured m = measure(tri, l);
    CHECK(m.boundary == p.boundary_length);
    CHECK(static_cast<long>(m.boundary) * m.boundary >= static_cast<long>(6 - m.curvature) * m.area);
    const auto iso = isoperimetric_check(tri, l);
    CHECK(iso.holds);
    CHECK(iso.equality_condition_ok);
    ++checked;
  }
  CHECK(checked > 100);
}

TEST_CASE("balls around a degree-5 vertex are the discs D_r(1)") {
  const auto tri = goldberg_coxeter({Seed::Icosahedron, 3, 3});
  VertexId centre = 0;
  while (tri.degree(centre) != 5) ++centre;
  for (int r = 1; r <= 2; ++r) {
    const auto b = ball(tri, centre, r);
    const auto p = make_patch(tri, b);
    CHECK(p.area == 5 * r * r);
    CHECK(p.boundary_length == 5 * r);
    CHECK(b.size() == static_cast<std::size_t>(disc(1, r).complex.vertex_count));
  }
}

TEST_CASE("patch spec text format") {
  const auto specs = parse_patch_specs("# comment\npatch 1 1,2,3,4\nmoat 2 5 3\n");
  REQUIRE(specs.size() == 2);
  CHECK(specs[0].graph == 1);
  CHECK(specs[0].vertices == std::vector<VertexId>{0, 1, 2, 3});
  CHECK_FALSE(specs[0].width.has_value());
  CHECK(specs[1].width == 3);
  CHECK(format_patch_spec(specs[0]) == "patch 1 1,2,3,4");
  CHECK(parse_patch_specs(format_patch_spec(specs[1]))[0].vertices == specs[1].vertices);
  try {
    parse_patch_specs("patch 1 1,2\npatch x 3\n");
    FAIL("expected FormatError");
  } catch (const FormatError& e) {
    CHECK(e.offset() == 2);
  }
  CHECK_THROWS_AS(parse_patch_specs("moat 1 1,2 0\n"), FormatError);
}
