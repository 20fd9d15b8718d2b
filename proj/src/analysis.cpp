#include "oddplanar/analysis.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <numeric>

#include "json.hpp"
#include "oddplanar/curvature.hpp"
#include "oddplanar/generators.hpp"

namespace oddplanar {

using ojson = nlohmann::ordered_json;

OctResult oct(const CombinatorialMap& g) {
  const DualMap d = dual(g);
  std::vector<EdgeId> primal_of(d.map.edge_count(), -1);
  for (EdgeId e = 0; e < g.edge_count(); ++e) primal_of[d.correspondence.edge_to_dual_edge[e]] = e;
  OctResult out;
  out.odd_faces = odd_faces(g);
  TSet t;
  for (FaceId f : out.odd_faces) t.vertices.push_back(d.correspondence.face_to_dual_vertex[f]);
  std::sort(t.vertices.begin(), t.vertices.end());
  t.from_odd_degrees = true;
  out.dual_join = min_tjoin(d.map, t);
  for (EdgeId e : out.dual_join.edges) out.edges.push_back(primal_of[e]);
  std::sort(out.edges.begin(), out.edges.end());
  out.tau = static_cast<int>(out.edges.size());
  return out;
}

MaxCut maxcut(const CombinatorialMap& g, const OctResult& transversal) {
  MaxCut out;
  const Bipartition b = is_bipartite(g, transversal.edges);
  if (!b.bipartite) throw std::logic_error("removing the transversal left an odd cycle");
  out.side = b.color;
  out.value = g.edge_count() - transversal.tau;
  for (const auto& e : g.edges()) out.recount += out.side[e.u] != out.side[e.v];
  return out;
}

MaxCut maxcut(const CombinatorialMap& g) { return maxcut(g, oct(g)); }

AlphaBounds alpha_bounds(const CombinatorialMap& g, const OctResult& transversal, bool exact,
                         std::int64_t budget) {
  const int n = g.vertex_count();
  AlphaBounds out;
  out.lower_bound = (n - transversal.tau + 1) / 2;

  std::vector<char> removed(n, 0);
  for (EdgeId e : transversal.edges) removed[std::min(g.edge(e).u, g.edge(e).v)] = 1;
  std::vector<EdgeId> cut_out;
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (removed[g.edge(e).u] || removed[g.edge(e).v]) cut_out.push_back(e);
  const Bipartition b = is_bipartite(g, cut_out);
  std::array<std::vector<VertexId>, 2> classes;
  for (VertexId v = 0; v < n; ++v)
    if (!removed[v]) classes[b.color[v]].push_back(v);
  out.witness = classes[0].size() >= classes[1].size() ? classes[0] : classes[1];

  if (exact) {
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : g.edges()) edges.emplace_back(e.u, e.v);
    const IndependentSet mis = maximum_independent_set(n, edges, budget);
    out.exact = static_cast<int>(mis.vertices.size());
    out.exact_set = mis.vertices;
    out.nodes = mis.nodes;
  }
  return out;
}

int automorphism_order(const CombinatorialMap& map) {
  return count_flag_maps(map, map, false) + count_flag_maps(map, map, true);
}

NuCertificate nu_certificate(const CombinatorialMap& g, std::int64_t budget) {
  NuCertificate out;
  const auto odd = odd_faces(g);
  const auto greedy = edge_disjoint_face_packing(g, odd, false);
  out.greedy = static_cast<int>(greedy.size());
  out.faces = greedy;
  if (odd.size() <= 128) {
    // Exact packing of odd faces; a budget overrun just leaves it unset.
    std::vector<int> index(g.face_count(), -1);
    std::vector<FaceId> candidates;
    for (FaceId f : odd)
      if (static_cast<int>(g.face_edges(f).size()) == g.face_size(f)) {
        index[f] = static_cast<int>(candidates.size());
        candidates.push_back(f);
      }
    std::vector<std::pair<int, int>> conflicts;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      const DartId d = g.find_dart(g.edge(e).u, g.edge(e).v);
      const int a = index[g.face_of(d)], b = index[g.face_of(g.reverse(d))];
      if (a >= 0 && b >= 0) conflicts.emplace_back(a, b);
    }
    try {
      const auto mis = maximum_independent_set(static_cast<int>(candidates.size()), conflicts, budget);
      out.exact_faces = static_cast<int>(mis.vertices.size());
      if (*out.exact_faces > out.greedy) {
        out.faces.clear();
        for (int i : mis.vertices) out.faces.push_back(candidates[i]);
        std::sort(out.faces.begin(), out.faces.end());
      }
    } catch (const BudgetExceeded&) {
    }
  }
  out.best = std::max(out.greedy, out.exact_faces.value_or(0));

  bool cubic = true;
  for (VertexId v = 0; v < g.vertex_count(); ++v) cubic = cubic && g.degree(v) == 3;
  if (cubic) {
    try {
      const Triangulation tri(dual(g).map);
      MoatPackingCertificate cert;
      try {
        cert = extremal_packing(tri);
        out.moat_source = "extremal";
      } catch (const NotExtremal&) {
        // Width-1 moats around odd-degree dual vertices, taken greedily.
        std::vector<char> used(tri.area(), 0);
        for (VertexId u = 0; u < tri.vertex_count(); ++u) {
          const int c = 6 - tri.degree(u);
          if (c != 1 && c != 3 && c != 5) continue;
          const auto around = tri.faces_around(u);
          if (std::any_of(around.begin(), around.end(), [&](FaceId f) { return used[f]; })) continue;
          for (FaceId f : around) used[f] = 1;
          cert.moats.push_back({{u}, 1});
        }
        out.moat_source = "singletons";
      }
      const PackingCheck check = verify_moat_packing(tri, cert);
      if (check.ok()) {
        out.moat_width = check.total_width;
        out.moats = cert;
        out.best = std::max(out.best, check.total_width);
      } else {
        out.moat_source.clear();
      }
    } catch (const Error&) {
      out.moat_source.clear();
    }
  }
  return out;
}

namespace {

std::optional<int> square_root_of(std::int64_t value) {
  if (value < 0) return std::nullopt;
  auto r = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(value))));
  while (r * r > value) --r;
  while ((r + 1) * (r + 1) <= value) ++r;
  if (r * r != value) return std::nullopt;
  return static_cast<int>(r);
}

}  // namespace

AnalysisReport analyze(const CombinatorialMap& g, const AnalysisOptions& options) {
  AnalysisReport r;
  r.n = g.vertex_count();
  r.edge_count = g.edge_count();
  r.face_count = g.face_count();
  r.cls = validate_class(g);
  r.transversal = oct(g);
  for (EdgeId e : r.transversal.edges) r.transversal_endpoints.push_back(g.edge(e));
  const std::int64_t tau = r.transversal.tau;

  std::vector<int> touched(r.n, 0);
  r.transversal_is_matching = true;
  for (EdgeId e : r.transversal.edges)
    if (touched[g.edge(e).u]++ || touched[g.edge(e).v]++) r.transversal_is_matching = false;
  r.bipartite_after_removal = is_bipartite(g, r.transversal.edges).bipartite;

  const auto& fv = r.cls.face_vector;
  r.general_num = std::int64_t{fv.pentagons + 3 * fv.triangles} * r.n;
  r.twelve_num = std::int64_t{12} * r.n;
  r.within_general = 5 * tau * tau <= r.general_num;
  r.within_twelve = 5 * tau * tau <= r.twelve_num;
  if (fv.pentagons == 0) {
    r.no_pentagon_num = std::int64_t{fv.triangles} * r.n;
    r.within_no_pentagon = 3 * tau * tau <= *r.no_pentagon_num;
  }
  r.aut_order = automorphism_order(g);

  const bool only_5_6 = r.cls.in_class() && fv.triangles == 0 && fv.squares == 0 && r.cls.max_face_size <= 6;
  r.icosahedral.face_condition = only_5_6 && fv.pentagons == 12;
  r.icosahedral.tau_condition = 5 * tau * tau == r.twelve_num;
  if (r.n % 60 == 0)
    if (auto k = square_root_of(r.n / 60)) r.icosahedral.k = *k;
  r.icosahedral.size_condition = r.icosahedral.k > 0;
  r.icosahedral.symmetry_condition = r.aut_order == 120;

  const bool only_3_6 = r.cls.in_class() && fv.squares == 0 && fv.pentagons == 0;
  r.tetrahedral.face_condition = only_3_6 && fv.triangles == 4;
  r.tetrahedral.tau_condition = 3 * tau * tau == std::int64_t{4} * r.n;
  if (r.n % 12 == 0)
    if (auto k = square_root_of(r.n / 12)) r.tetrahedral.k = *k;
  r.tetrahedral.size_condition = r.tetrahedral.k > 0;
  r.tetrahedral.symmetry_condition = r.aut_order == 24;

  r.cut = maxcut(g, r.transversal);
  try {
    r.alpha = alpha_bounds(g, r.transversal, options.alpha_exact, options.budget);
  } catch (const BudgetExceeded& e) {
    r.alpha = alpha_bounds(g, r.transversal, false);
    r.alpha_error = e.what();
  }
  if (options.nu) r.nu = nu_certificate(g, options.budget);
  return r;
}

namespace {

std::string decimal_sqrt(std::int64_t num, std::int64_t den) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", std::sqrt(static_cast<double>(num) / static_cast<double>(den)));
  return buf;
}

ojson equality_json(const Equality& e) {
  ojson j;
  j["holds"] = e.holds();
  j["faces"] = e.face_condition;
  j["tau"] = e.tau_condition;
  j["size"] = e.size_condition;
  j["k"] = e.k;
  j["symmetry"] = e.symmetry_condition;
  return j;
}

ojson build(const AnalysisReport& r, int graph_index) {
  const bool applicable = r.cls.in_class();
  ojson j;
  j["graph"] = graph_index;
  j["n"] = r.n;
  j["edges"] = r.edge_count;
  j["faces"] = r.face_count;
  const auto& fv = r.cls.face_vector;
  j["face_vector"] = {fv.triangles, fv.squares, fv.pentagons, fv.hexagons};
  ojson hist = ojson::object();
  for (auto [size, count] : r.cls.face_histogram) hist[std::to_string(size)] = count;
  j["face_histogram"] = hist;
  j["cubic"] = r.cls.is_cubic;
  j["three_connected"] = r.cls.is_3_connected;
  j["max_face_size"] = r.cls.max_face_size;
  j["in_class"] = r.cls.in_class();
  j["euler_identity"] = r.cls.euler_identity_holds;

  j["tau_odd"] = r.transversal.tau;
  ojson edges = ojson::array();
  for (const auto& e : r.transversal_endpoints) edges.push_back({e.u + 1, e.v + 1});
  j["transversal"] = edges;
  j["transversal_is_matching"] = r.transversal_is_matching;
  j["bipartite_after_removal"] = r.bipartite_after_removal;

  auto bound = [&](const char* key, std::optional<std::int64_t> num, std::int64_t den) {
    if (applicable && num) {
      j[std::string(key) + "_sq"] = std::to_string(*num) + "/" + std::to_string(den);
      j[key] = decimal_sqrt(*num, den);
    } else {
      j[std::string(key) + "_sq"] = nullptr;
      j[key] = nullptr;
    }
  };
  bound("bound_general", r.general_num, 5);
  j["tau_within_general"] = applicable ? ojson(r.within_general) : ojson(nullptr);
  bound("bound_12", r.twelve_num, 5);
  j["tau_within_12"] = applicable ? ojson(r.within_twelve) : ojson(nullptr);
  bound("bound_no_pentagon", r.no_pentagon_num, 3);
  j["tau_within_no_pentagon"] =
      applicable && r.within_no_pentagon ? ojson(*r.within_no_pentagon) : ojson(nullptr);
  j["aut_order"] = r.aut_order;
  j["icosahedral_equality"] = equality_json(r.icosahedral);
  j["tetrahedral_equality"] = equality_json(r.tetrahedral);

  j["maxcut"] = r.cut.value;
  j["maxcut_recount"] = r.cut.recount;
  j["alpha_lower"] = r.alpha.lower_bound;
  j["alpha_witness"] = r.alpha.witness.size();
  j["alpha_exact"] = r.alpha.exact ? ojson(*r.alpha.exact) : ojson(nullptr);
  if (r.alpha_error) j["alpha_error"] = *r.alpha_error;
  if (r.nu) {
    j["nu_greedy"] = r.nu->greedy;
    j["nu_exact_faces"] = r.nu->exact_faces ? ojson(*r.nu->exact_faces) : ojson(nullptr);
    j["nu_moat"] = r.nu->moat_width ? ojson(*r.nu->moat_width) : ojson(nullptr);
    j["nu_moat_source"] = r.nu->moat_source.empty() ? ojson(nullptr) : ojson(r.nu->moat_source);
    j["nu_certificate"] = r.nu->best;
  }
  return j;
}

void flatten(const std::string& prefix, const ojson& j, std::string& out) {
  if (j.is_object()) {
    if (j.empty()) {
      out += prefix + "=\n";
      return;
    }
    for (auto it = j.begin(); it != j.end(); ++it) flatten(prefix + "." + it.key(), it.value(), out);
    return;
  }
  std::string value;
  if (j.is_null()) {
    value = "n/a";
  } else if (j.is_string()) {
    value = j.get<std::string>();
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (i > 0) value += ',';
      if (j[i].is_array()) {
        for (std::size_t k = 0; k < j[i].size(); ++k) value += (k ? "-" : "") + j[i][k].dump();
      } else {
        value += j[i].dump();
      }
    }
  } else {
    value = j.dump();
  }
  out += prefix + "=" + value + "\n";
}

}  // namespace

std::string report_text(const AnalysisReport& r, int graph_index) {
  const ojson j = build(r, graph_index);
  std::string out;
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (it.key() == "face_histogram") {
      std::string value;
      for (auto h = it.value().begin(); h != it.value().end(); ++h)
        value += (value.empty() ? "" : ",") + h.key() + ":" + h.value().dump();
      out += "face_histogram=" + value + "\n";
    } else {
      flatten(it.key(), it.value(), out);
    }
  }
  return out;
}

std::string report_json(const AnalysisReport& r, int graph_index) { return build(r, graph_index).dump(2); }

}  // namespace oddplanar
