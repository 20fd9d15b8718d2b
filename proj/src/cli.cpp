#include "oddplanar/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "oddplanar/analysis.hpp"
#include "oddplanar/formats.hpp"
#include "oddplanar/generators.hpp"

namespace oddplanar {

namespace {

namespace fs = std::filesystem;
using ojson = nlohmann::ordered_json;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_output(const std::string& path, const std::string& data, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << data;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file || !(file << data)) throw IoError("cannot write " + path);
}

std::string g_format = "auto";

std::vector<CombinatorialMap> read_maps(const std::string& path) {
  const std::string bytes = read_input(path);
  std::vector<CombinatorialMap> maps;
  if (g_format == "planar_code")
    maps = parse_planar_code(bytes);
  else if (g_format == "rotmap")
    maps = parse_rotmap(bytes);
  else
    maps = parse_maps(bytes);
  if (maps.empty()) throw IoError(path + " contains no graphs");
  return maps;
}

const CombinatorialMap& pick(const std::vector<CombinatorialMap>& maps, int index) {
  if (index < 1 || index > static_cast<int>(maps.size()))
    throw std::invalid_argument("graph " + std::to_string(index) + " not in input (" + std::to_string(maps.size()) +
                                " graphs)");
  return maps[index - 1];
}

Triangulation as_triangulation(const CombinatorialMap& map, bool take_dual) {
  return Triangulation(take_dual ? dual(map).map : map);
}

// ---------------------------------------------------------------------------
// gen

struct GenOptions {
  std::string output;
  bool text = false;
  bool dual = false;
  std::string seed = "icosa";
  int i = 1, j = 0, k = 1, c = 1, r = 1;
  std::string name;
  std::string certificate;
};

std::string encode(const CombinatorialMap& map, bool text) {
  const std::vector<CombinatorialMap> one{map};
  return emit_maps(one, text ? MapFormat::Rotmap : MapFormat::PlanarCode);
}

int gen_gc(const GenOptions& o, std::ostream& out) {
  GCSpec spec;
  if (o.seed == "icosa")
    spec.seed = Seed::Icosahedron;
  else if (o.seed == "tetra")
    spec.seed = Seed::Tetrahedron;
  else
    throw std::invalid_argument("--seed must be icosa or tetra");
  spec.i = o.i;
  spec.j = o.j;
  const Triangulation tri = goldberg_coxeter(spec);
  const CombinatorialMap map = o.dual ? canonical(dual(tri.map()).map) : tri.map();
  write_output(o.output, encode(map, o.text), out);
  return kExitOk;
}

int gen_family57(const GenOptions& o, std::ostream& out) {
  const Family57 f = family57(o.k);
  write_output(o.output, encode(f.map, o.text), out);
  if (!o.certificate.empty()) {
    std::string lines = "# edge-disjoint odd faces, vertices 1-indexed\n";
    for (FaceId face : f.packing) {
      std::string line = "face";
      for (VertexId v : f.map.face_vertices(face)) line += ' ' + std::to_string(v + 1);
      lines += line + '\n';
    }
    write_output(o.certificate, lines, out);
  }
  return kExitOk;
}

int gen_disc(const GenOptions& o, std::ostream& out) {
  const Disc d = disc(o.c, o.r);
  std::ostringstream s;
  s << "# D_r(c) as a triangle list; vertex 1 is the centre\n";
  s << "disc c=" << d.c << " r=" << d.r << " vertices=" << d.complex.vertex_count
    << " triangles=" << d.complex.area() << " boundary=" << d.complex.boundary_length()
    << " dual_faces=" << d.dual_face_count << " dual_boundary=" << d.dual_boundary_length << '\n';
  for (const auto& t : d.complex.corners) s << t[0] + 1 << ' ' << t[1] + 1 << ' ' << t[2] + 1 << '\n';
  write_output(o.output, s.str(), out);
  return kExitOk;
}

int gen_platonic(const GenOptions& o, std::ostream& out) {
  const CombinatorialMap map = platonic(o.name);
  write_output(o.output, encode(o.dual ? canonical(dual(map).map) : map, o.text), out);
  return kExitOk;
}

// ---------------------------------------------------------------------------
// analysis commands

struct AnalyzeOptions {
  std::string command;
  std::string input;
  bool exact = false;
  bool json = false;
  std::string certificates;
  int jobs = 1;
};

const std::vector<std::string>& keys_for(const std::string& command) {
  static const std::map<std::string, std::vector<std::string>> keys{
      {"oct", {"graph", "n", "edges", "tau_odd", "transversal", "transversal_is_matching", "bipartite_after_removal"}},
      {"maxcut", {"graph", "n", "edges", "tau_odd", "maxcut", "maxcut_recount"}},
      {"alpha", {"graph", "n", "tau_odd", "alpha_lower", "alpha_witness", "alpha_exact", "alpha_error"}},
      {"bounds", {}},
      {"stats",
       {"graph", "n", "edges", "faces", "face_vector", "face_histogram", "cubic", "three_connected", "max_face_size",
        "in_class", "euler_identity", "aut_order"}}};
  return keys.at(command);
}

ojson select(const ojson& full, const std::vector<std::string>& keys) {
  if (keys.empty()) return full;
  ojson out;
  for (const auto& k : keys)
    if (full.contains(k)) out[k] = full[k];
  return out;
}

// Renders key=value lines from the JSON form so both outputs agree.
std::string as_text(const ojson& j) {
  std::string out;
  std::function<void(const std::string&, const ojson&)> emit = [&](const std::string& key, const ojson& v) {
    if (key == "face_histogram") {
      std::string value;
      for (auto it = v.begin(); it != v.end(); ++it) value += (value.empty() ? "" : ",") + it.key() + ":" + it.value().dump();
      out += key + "=" + value + "\n";
    } else if (v.is_object()) {
      for (auto it = v.begin(); it != v.end(); ++it) emit(key + "." + it.key(), it.value());
    } else if (v.is_null()) {
      out += key + "=n/a\n";
    } else if (v.is_string()) {
      out += key + "=" + v.get<std::string>() + "\n";
    } else if (v.is_array()) {
      std::string value;
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i > 0) value += ',';
        if (v[i].is_array())
          for (std::size_t k = 0; k < v[i].size(); ++k) value += (k ? "-" : "") + v[i][k].dump();
        else
          value += v[i].dump();
      }
      out += key + "=" + value + "\n";
    } else {
      out += key + "=" + v.dump() + "\n";
    }
  };
  for (auto it = j.begin(); it != j.end(); ++it) emit(it.key(), it.value());
  return out;
}

struct GraphResult {
  ojson report;
  int code = kExitOk;
  std::string error;
  std::map<std::string, std::string> files;
};

GraphResult analyze_one(const CombinatorialMap& map, int index, const AnalyzeOptions& o) {
  GraphResult res;
  if (o.command == "stats") {
    const ClassReport cls = validate_class(map);
    ojson j;
    j["graph"] = index;
    j["n"] = map.vertex_count();
    j["edges"] = map.edge_count();
    j["faces"] = map.face_count();
    const auto& fv = cls.face_vector;
    j["face_vector"] = {fv.triangles, fv.squares, fv.pentagons, fv.hexagons};
    ojson hist = ojson::object();
    for (auto [size, count] : cls.face_histogram) hist[std::to_string(size)] = count;
    j["face_histogram"] = hist;
    j["cubic"] = cls.is_cubic;
    j["three_connected"] = cls.is_3_connected;
    j["max_face_size"] = cls.max_face_size;
    j["in_class"] = cls.in_class();
    j["euler_identity"] = cls.euler_identity_holds;
    j["aut_order"] = automorphism_order(map);
    res.report = j;
    return res;
  }

  AnalysisOptions opts;
  opts.alpha_exact = o.exact && (o.command == "alpha" || o.command == "bounds");
  opts.nu = o.command == "bounds";
  opts.budget = node_budget_from_env();
  AnalysisReport r;
  try {
    r = analyze(map, opts);
  } catch (const NonSimpleDual& e) {
    res.report = ojson{{"graph", index}, {"n", map.vertex_count()}, {"error", e.what()}};
    res.code = kExitValidation;
    return res;
  }
  res.report = select(ojson::parse(report_json(r, index)), keys_for(o.command));
  if (o.command == "bounds" && !r.cls.in_class()) res.code = kExitValidation;
  if (opts.alpha_exact && r.alpha_error) res.code = kExitValidation;

  if (!o.certificates.empty()) {
    const std::string stem = "graph" + std::to_string(index);
    std::string join = "# transversal edges, 1-indexed\n";
    for (const auto& e : r.transversal_endpoints) join += std::to_string(e.u + 1) + ' ' + std::to_string(e.v + 1) + '\n';
    res.files[stem + ".transversal"] = join;
    std::string sides = "# vertex side\n";
    for (VertexId v = 0; v < r.n; ++v) sides += std::to_string(v + 1) + ' ' + std::to_string(r.cut.side[v]) + '\n';
    res.files[stem + ".bipartition"] = sides;
    std::string indep = "# independent set, 1-indexed\n";
    for (VertexId v : r.alpha.exact ? r.alpha.exact_set : r.alpha.witness) indep += std::to_string(v + 1) + '\n';
    res.files[stem + ".independent"] = indep;
    if (r.nu && r.nu->moat_width)
      res.files[stem + ".packing"] = "# moats in the dual triangulation (" + r.nu->moat_source + ")\n" +
                                     format_certificate(r.nu->moats);
  }
  return res;
}

int run_analysis(const AnalyzeOptions& o, std::ostream& out) {
  const auto maps = read_maps(o.input);
  std::vector<GraphResult> results(maps.size());
  const int jobs = std::max(1, std::min<int>(o.jobs, static_cast<int>(maps.size())));
  std::vector<std::exception_ptr> errors(maps.size());
  auto work = [&](int start) {
    for (std::size_t g = start; g < maps.size(); g += jobs) {
      try {
        results[g] = analyze_one(maps[g], static_cast<int>(g) + 1, o);
      } catch (...) {
        errors[g] = std::current_exception();
      }
    }
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(work, t);
    for (auto& t : pool) t.join();
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  int code = kExitOk;
  if (o.json) {
    ojson all = ojson::array();
    for (const auto& r : results) all.push_back(r.report);
    out << all.dump(2) << '\n';
  } else {
    for (std::size_t g = 0; g < results.size(); ++g) {
      if (g > 0) out << '\n';
      out << as_text(results[g].report);
    }
  }
  for (const auto& r : results) code = std::max(code, r.code);
  if (!o.certificates.empty()) {
    fs::create_directories(o.certificates);
    for (const auto& r : results)
      for (const auto& [name, data] : r.files) write_output((fs::path(o.certificates) / name).string(), data, out);
  }
  return code;
}

// ---------------------------------------------------------------------------
// verify

std::vector<int> read_ints(const std::string& text) {
  std::vector<int> out;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream words(line);
    for (std::string w; words >> w;) {
      std::size_t used = 0;
      int v = 0;
      try {
        v = std::stoi(w, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != w.size()) throw FormatError("expected integer, got '" + w + "'", line_no);
      out.push_back(v);
    }
  }
  return out;
}

int verify_packing_cmd(const std::string& graph, const std::string& cert_path, bool take_dual, int index,
                       std::ostream& out) {
  const auto maps = read_maps(graph);
  const Triangulation tri = as_triangulation(pick(maps, index), take_dual);
  const MoatPackingCertificate cert = parse_certificate(read_input(cert_path));
  const PackingCheck check = verify_moat_packing(tri, cert);
  auto line = [&](const char* name, bool ok) { out << name << ' ' << (ok ? "pass" : "fail") << '\n'; };
  line("M1", check.m1_disjoint);
  out << "M2 certified lower bound only\n";
  line("M3", check.m3_patches);
  line("M4", check.m4_odd_curvature);
  line("M5", check.m5_singleton_minimal);
  line("M6", check.m6_laminar);
  for (const auto& f : check.failures) out << "  " << f << '\n';
  out << "moats=" << cert.moats.size() << '\n';
  out << "total_width=" << check.total_width << '\n';
  return check.ok() ? kExitOk : kExitValidation;
}

int verify_tjoin_cmd(const std::string& graph, const std::string& tset_path, const std::string& join_path, int index,
                     std::ostream& out) {
  const auto maps = read_maps(graph);
  const CombinatorialMap& map = pick(maps, index);
  std::vector<VertexId> tv;
  for (int v : read_ints(read_input(tset_path))) {
    if (v < 1 || v > map.vertex_count()) throw FormatError("T vertex " + std::to_string(v) + " out of range", 0);
    tv.push_back(v - 1);
  }
  std::sort(tv.begin(), tv.end());
  tv.erase(std::unique(tv.begin(), tv.end()), tv.end());
  const TSet t{tv, false};
  const auto ends = read_ints(read_input(join_path));
  if (ends.size() % 2 != 0) throw FormatError("join file must list edges as vertex pairs", 0);
  std::vector<EdgeId> join;
  for (std::size_t i = 0; i < ends.size(); i += 2) {
    const int u = ends[i] - 1, v = ends[i + 1] - 1;
    const EdgeId e = (u >= 0 && v >= 0 && u < map.vertex_count() && v < map.vertex_count()) ? map.edge_id(u, v) : -1;
    if (e < 0) throw FormatError("join edge " + std::to_string(u + 1) + "-" + std::to_string(v + 1) + " not in graph", i / 2 + 1);
    join.push_back(e);
  }
  const TJoinCheck check = verify_tjoin(map, t, join);
  for (VertexId v : check.parity_failures) out << "parity fail at vertex " << v + 1 << '\n';
  if (check.ok) out << "parity pass\n";
  out << "join_size=" << join.size() << '\n';
  if (t.vertices.size() % 2 == 0) out << "min_tjoin=" << min_tjoin(map, t).size << '\n';
  return check.ok ? kExitOk : kExitValidation;
}

int verify_identities_cmd(const std::string& graph, const std::string& patch_path, int width, bool take_dual,
                          std::ostream& out) {
  const auto maps = read_maps(graph);
  const auto specs = parse_patch_specs(read_input(patch_path));
  if (specs.empty()) throw FormatError("no patch lines", 0);
  bool all = true;
  for (std::size_t s = 0; s < specs.size(); ++s) {
    const auto& spec = specs[s];
    const Triangulation tri = as_triangulation(pick(maps, spec.graph), take_dual);
    for (VertexId v : spec.vertices)
      if (v >= tri.vertex_count()) throw FormatError("patch vertex " + std::to_string(v + 1) + " out of range", s + 1);
    const int w = spec.width.value_or(width);
    const MoatIdentityReport r = moat_identities_check(tri, spec.vertices, w);
    auto verdict = [](bool ok) { return ok ? "pass" : "fail"; };
    out << "patch " << s + 1 << ": graph=" << spec.graph << " curvature=" << r.curvature
        << " boundary=" << r.boundary_length << " area=" << r.patch_area << " width=" << w << '\n';
    if (!r.precondition_holds) {
      out << "precondition fail: " << r.precondition_failure << '\n';
      all = false;
      continue;
    }
    out << "precondition pass\n";
    out << "mt1_area=" << r.mt1_area << " expected=" << r.mt1_expected << ' ' << verdict(r.mt1_ok) << '\n';
    if (r.complements_clean)
      out << "complement_clean pass\n";
    else
      out << "complement_clean fail at layer " << r.unclean_layer << ", exact identities not required\n";
    const char* exact_note = r.complements_clean ? "" : " (not required)";
    out << "moat_area=" << r.moat_area << " expected=" << r.moat_expected << ' ' << verdict(r.moat_ok) << exact_note
        << '\n';
    out << "layer_boundaries=";
    for (std::size_t i = 0; i < r.layer_boundaries.size(); ++i) out << (i ? "," : "") << r.layer_boundaries[i];
    out << ' ' << verdict(r.layer_boundaries_ok) << exact_note << '\n';
    out << "area_lower_bound " << verdict(r.area_lower_bound_ok) << '\n';
    const IsoperimetricReport iso = isoperimetric_check(tri, spec.vertices);
    out << "isoperimetric " << iso.boundary_squared << ">=" << iso.scaled_area << ' ' << verdict(iso.holds && iso.equality_condition_ok)
        << '\n';
    all = all && r.all_ok() && iso.holds && iso.equality_condition_ok;
  }
  return all ? kExitOk : kExitValidation;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Odd cycle packing and covering in cubic plane graphs", "oddplanar"};
  app.require_subcommand(1);
  g_format = "auto";
  app.add_option("--format", g_format, "input format")
      ->check(CLI::IsMember({"auto", "planar_code", "rotmap"}))
      ->capture_default_str();
  int code = kExitOk;

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "generate graphs")->require_subcommand(1);
  auto add_output = [&](CLI::App* c) {
    c->add_option("-o,--output", gen.output, "output file (default stdout)");
    c->add_flag("--text", gen.text, "write rotmap text instead of planar_code");
  };
  auto* gc = gen_cmd->add_subcommand("gc", "Goldberg-Coxeter triangulation");
  gc->add_option("--seed", gen.seed, "icosa or tetra")->check(CLI::IsMember({"icosa", "tetra"}));
  gc->add_option("--i", gen.i, "first coordinate")->required();
  gc->add_option("--j", gen.j, "second coordinate")->required();
  gc->add_flag("--dual", gen.dual, "emit the dual cubic map");
  add_output(gc);
  auto* f57 = gen_cmd->add_subcommand("family57", "pentagon/heptagon family");
  f57->add_option("--k", gen.k, "number of ring gadgets")->required();
  f57->add_option("--certificate", gen.certificate, "write the odd-face packing here");
  add_output(f57);
  auto* dc = gen_cmd->add_subcommand("disc", "D_r(c) triangle list");
  dc->add_option("--c", gen.c, "curvature 1..5")->required();
  dc->add_option("--r", gen.r, "radius")->required();
  dc->add_option("-o,--output", gen.output, "output file (default stdout)");
  auto* pl = gen_cmd->add_subcommand("platonic", "platonic seed");
  pl->add_option("name", gen.name, "tetrahedron, icosahedron or dodecahedron")->required();
  pl->add_flag("--dual", gen.dual, "emit the dual map");
  add_output(pl);

  AnalyzeOptions an;
  std::vector<CLI::App*> analysis;
  for (const char* name : {"oct", "maxcut", "alpha", "bounds", "stats"}) {
    auto* c = app.add_subcommand(name, std::string("per-graph ") + name + " report");
    c->add_option("file", an.input, "planar_code or rotmap file, - for stdin")->required();
    c->add_flag("--exact", an.exact, "exact independence number by branch and bound");
    c->add_flag("--json", an.json, "JSON output");
    c->add_option("--certificates", an.certificates, "directory for certificate files");
    c->add_option("--jobs", an.jobs, "graphs analysed in parallel")->check(CLI::PositiveNumber);
    analysis.push_back(c);
  }

  std::string graph, second, third;
  int width = 1, index = 1;
  bool take_dual = false;
  auto* verify = app.add_subcommand("verify", "check certificates")->require_subcommand(1);
  auto* vp = verify->add_subcommand("packing", "moat packing properties M1-M6");
  vp->add_option("mapfile", graph, "graph file")->required();
  vp->add_option("certificate", second)->required();
  vp->add_flag("--dual", take_dual, "certificate refers to the dual triangulation");
  vp->add_option("--graph", index, "graph number within the file");
  auto* vt = verify->add_subcommand("tjoin", "T-join parity");
  vt->add_option("mapfile", graph, "graph file")->required();
  vt->add_option("tset", second)->required();
  vt->add_option("join", third)->required();
  vt->add_option("--graph", index, "graph number within the file");
  auto* vi = verify->add_subcommand("identities", "moat area and boundary identities");
  vi->add_option("mapfile", graph, "graph file")->required();
  vi->add_option("patch", second)->required();
  vi->add_option("width", width)->required();
  vi->add_flag("--dual", take_dual, "patches refer to the dual triangulation");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  }

  try {
    if (gc->parsed()) return gen_gc(gen, out);
    if (f57->parsed()) return gen_family57(gen, out);
    if (dc->parsed()) return gen_disc(gen, out);
    if (pl->parsed()) return gen_platonic(gen, out);
    for (auto* c : analysis)
      if (c->parsed()) {
        an.command = c->get_name();
        return run_analysis(an, out);
      }
    if (vp->parsed()) return verify_packing_cmd(graph, second, take_dual, index, out);
    if (vt->parsed()) return verify_tjoin_cmd(graph, second, third, index, out);
    if (vi->parsed()) return verify_identities_cmd(graph, second, width, take_dual, out);
  } catch (const FormatError& e) {
    err << "format error: " << e.what() << '\n';
    code = kExitIo;
  } catch (const InvalidMap& e) {
    err << "invalid map: " << e.what() << '\n';
    code = kExitIo;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    code = kExitIo;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    code = kExitIo;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    code = kExitValidation;
  }
  return code;
}

}  // namespace oddplanar
