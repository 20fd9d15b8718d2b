#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "oddplanar/analysis.hpp"
#include "oddplanar/cli.hpp"
#include "oddplanar/formats.hpp"
#include "oddplanar/generators.hpp"

namespace py = pybind11;
using namespace oddplanar;

namespace {

Seed seed_from(const std::string& name) {
  if (name == "icosa") return Seed::Icosahedron;
  if (name == "tetra") return Seed::Tetrahedron;
  throw std::invalid_argument("seed must be 'icosa' or 'tetra'");
}

py::dict moat_report(const MoatIdentityReport& r) {
  py::dict d;
  d["curvature"] = r.curvature;
  d["boundary_length"] = r.boundary_length;
  d["patch_area"] = r.patch_area;
  d["precondition_holds"] = r.precondition_holds;
  d["complements_clean"] = r.complements_clean;
  d["mt1_area"] = r.mt1_area;
  d["moat_area"] = r.moat_area;
  d["moat_expected"] = r.moat_expected;
  d["layer_boundaries"] = r.layer_boundaries;
  d["ok"] = r.all_ok();
  return d;
}

}  // namespace

PYBIND11_MODULE(_oddplanar, m) {
  m.doc() = "Odd cycle transversals and packings in cubic plane graphs";

  // Translators are tried newest first, so the base class goes first.
  py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<FormatError>(m, "FormatError", PyExc_ValueError);
  py::register_exception<InvalidMap>(m, "InvalidMap", PyExc_ValueError);
  py::register_exception<NonSimpleDual>(m, "NonSimpleDual", PyExc_ValueError);
  py::register_exception<NotExtremal>(m, "NotExtremal", PyExc_ValueError);
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);

  py::class_<CombinatorialMap>(m, "Map")
      .def(py::init<std::vector<std::vector<VertexId>>>(), py::arg("rotations"),
           "Clockwise neighbour lists, 0-indexed.")
      .def_property_readonly("vertex_count", &CombinatorialMap::vertex_count)
      .def_property_readonly("edge_count", &CombinatorialMap::edge_count)
      .def_property_readonly("face_count", &CombinatorialMap::face_count)
      .def_property_readonly("rotations", &CombinatorialMap::rotations)
      .def("edges",
           [](const CombinatorialMap& g) {
             std::vector<std::pair<int, int>> out;
             for (const auto& e : g.edges()) out.emplace_back(e.u, e.v);
             return out;
           })
      .def("faces",
           [](const CombinatorialMap& g) {
             std::vector<std::vector<VertexId>> out;
             for (FaceId f = 0; f < g.face_count(); ++f) out.push_back(g.face_vertices(f));
             return out;
           })
      .def("dual", [](const CombinatorialMap& g) { return dual(g).map; })
      .def("__eq__", [](const CombinatorialMap& a, const CombinatorialMap& b) { return a == b; })
      .def("__repr__", [](const CombinatorialMap& g) {
        return "<Map n=" + std::to_string(g.vertex_count()) + " e=" + std::to_string(g.edge_count()) +
               " f=" + std::to_string(g.face_count()) + ">";
      });

  m.def("parse_maps", [](py::bytes data) { return parse_maps(std::string(data)); }, py::arg("data"),
        "planar_code or rotmap bytes, detected by header.");
  m.def(
      "emit_maps",
      [](const std::vector<CombinatorialMap>& maps, bool text) {
        return py::bytes(emit_maps(maps, text ? MapFormat::Rotmap : MapFormat::PlanarCode));
      },
      py::arg("maps"), py::arg("text") = false);

  m.def("platonic", [](const std::string& name) { return platonic(name); });
  m.def("prism", &prism);
  m.def(
      "goldberg_coxeter",
      [](int i, int j, const std::string& seed, bool take_dual) {
        const auto tri = goldberg_coxeter({seed_from(seed), i, j});
        return take_dual ? canonical(dual(tri.map()).map) : tri.map();
      },
      py::arg("i"), py::arg("j"), py::arg("seed") = "icosa", py::arg("dual") = false);
  m.def("family57", [](int k) {
    auto f = family57(k);
    return py::make_tuple(f.map, f.packing);
  });
  m.def("disc", [](int c, int r) {
    const Disc d = disc(c, r);
    py::dict out;
    out["vertices"] = d.complex.vertex_count;
    out["area"] = d.complex.area();
    out["boundary_length"] = d.complex.boundary_length();
    out["dual_face_count"] = d.dual_face_count;
    out["dual_boundary_length"] = d.dual_boundary_length;
    out["triangles"] = d.complex.corners;
    return out;
  });

  m.def("oct", [](const CombinatorialMap& g) {
    const auto r = oct(g);
    std::vector<std::pair<int, int>> edges;
    for (EdgeId e : r.edges) edges.emplace_back(g.edge(e).u, g.edge(e).v);
    return py::make_tuple(r.tau, edges);
  });
  m.def(
      "report_json",
      [](const CombinatorialMap& g, bool alpha_exact, bool nu) {
        AnalysisOptions opts;
        opts.alpha_exact = alpha_exact;
        opts.nu = nu;
        opts.budget = node_budget_from_env();
        return report_json(analyze(g, opts), 1);
      },
      py::arg("map"), py::arg("alpha_exact") = false, py::arg("nu") = true);
  m.def("automorphism_order", &automorphism_order);

  m.def(
      "min_tjoin",
      [](const CombinatorialMap& g, std::vector<VertexId> t) {
        const auto j = min_tjoin(g, make_tset(g, std::move(t)));
        std::vector<std::pair<int, int>> edges;
        for (EdgeId e : j.edges) edges.emplace_back(g.edge(e).u, g.edge(e).v);
        return edges;
      },
      py::arg("map"), py::arg("terminals"));
  m.def("min_weight_perfect_matching", [](const WeightMatrix& w) {
    const auto r = min_weight_perfect_matching(w);
    return py::make_tuple(r.weight, r.pairs);
  });

  m.def(
      "moat_identities",
      [](const CombinatorialMap& g, std::vector<VertexId> base, int width) {
        return moat_report(moat_identities_check(Triangulation(g), base, width));
      },
      py::arg("triangulation"), py::arg("base"), py::arg("width"));
  m.def(
      "verify_packing",
      [](const CombinatorialMap& g, const std::string& certificate) {
        const auto check = verify_moat_packing(Triangulation(g), parse_certificate(certificate));
        py::dict d;
        d["ok"] = check.ok();
        d["total_width"] = check.total_width;
        d["failures"] = check.failures;
        return d;
      },
      py::arg("triangulation"), py::arg("certificate"));
  m.def(
      "extremal_packing",
      [](const CombinatorialMap& g) { return format_certificate(extremal_packing(Triangulation(g))); },
      py::arg("triangulation"));

  m.def(
      "run_cli",
      [](std::vector<std::string> args) {
        args.insert(args.begin(), "oddplanar");
        std::vector<const char*> argv;
        for (const auto& a : args) argv.push_back(a.c_str());
        std::ostringstream out, err;
        int code = 0;
        {
          py::gil_scoped_release release;
          code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
        }
        return py::make_tuple(code, py::bytes(out.str()), err.str());
      },
      py::arg("args"));
}
