#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "oddplanar/cli.hpp"
#include "oddplanar/formats.hpp"

namespace fs = std::filesystem;
using oddplanar::run_cli;

namespace {

const fs::path kData = ODDPLANAR_TEST_DATA;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "oddplanar");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return (kData / name).string(); }

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "oddplanar_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("gen reproduces the stored inputs") {
  CHECK(run({"gen", "gc", "--seed", "icosa", "--i", "1", "--j", "1", "--dual"}).out == slurp(kData / "c60.pc"));
  CHECK(run({"gen", "platonic", "dodecahedron"}).out == slurp(kData / "dodecahedron.pc"));
  CHECK(run({"gen", "family57", "--k", "2", "--text"}).out == slurp(kData / "family57_2.rotmap"));
  const auto c60 = oddplanar::parse_maps(run({"gen", "gc", "--i", "1", "--j", "1", "--dual"}).out);
  CHECK(c60.at(0).vertex_count() == 60);
}

TEST_CASE("gen parameter errors exit 2") {
  CHECK(run({"gen", "gc", "--i", "0", "--j", "0"}).code == 2);
  CHECK(run({"gen", "gc", "--seed", "cube", "--i", "1", "--j", "0"}).code == 2);
  CHECK(run({"gen", "gc", "--i", "3", "--j", "3", "--dual"}).code == 2);  // too big for planar_code
  CHECK(run({"gen", "disc", "--c", "7", "--r", "1"}).code == 2);
  CHECK(run({"gen", "platonic", "cube"}).code == 2);
  CHECK(run({"nonsense"}).code == 2);
}

TEST_CASE("gen disc header") {
  const auto r = run({"gen", "disc", "--c", "3", "--r", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("disc c=3 r=2 vertices=10 triangles=12 boundary=6 dual_faces=10 dual_boundary=15\n") !=
        std::string::npos);
}

TEST_CASE("bounds reports match the golden files") {
  for (const char* g : {"c60", "dodecahedron", "truncated_tetrahedron", "gc22_dual", "gc21_dual"}) {
    CAPTURE(g);
    const auto r = run({"bounds", data(std::string(g) + ".pc")});
    CHECK(r.code == 0);
    CHECK(r.out == slurp(kData / "golden" / (std::string(g) + ".bounds.txt")));
  }
  const auto json = run({"bounds", "--json", data("c60.pc")});
  CHECK(json.out == slurp(kData / "golden" / "c60.bounds.json"));
  CHECK(run({"alpha", "--exact", data("dodecahedron.pc")}).out == slurp(kData / "golden" / "dodecahedron.alpha.txt"));
  CHECK(run({"stats", data("family57_2.rotmap")}).out == slurp(kData / "golden" / "family57_2.stats.txt"));
}

TEST_CASE("graphs outside the class exit 1 under bounds") {
  const auto r = run({"bounds", data("family57_1.pc")});
  CHECK(r.code == 1);
  CHECK(r.out == slurp(kData / "golden" / "family57_1.bounds.txt"));
  CHECK(r.out.find("bound_12=n/a") != std::string::npos);
  CHECK(run({"oct", data("family57_1.pc")}).code == 0);
}

TEST_CASE("subcommand key selections") {
  const auto oct = run({"oct", data("c60.pc")});
  CHECK(oct.out.find("tau_odd=12\n") != std::string::npos);
  CHECK(oct.out.find("maxcut") == std::string::npos);
  const auto cut = run({"maxcut", data("dodecahedron.pc")});
  CHECK(cut.out.find("maxcut=24\nmaxcut_recount=24\n") != std::string::npos);
  const auto stats = run({"stats", data("family57_1.pc")});
  CHECK(stats.out.find("face_histogram=5:22,7:10\n") != std::string::npos);
}

TEST_CASE("batch streams equal concatenated single runs") {
  const std::string c60 = slurp(kData / "c60.pc");
  const std::string dodeca = slurp(kData / "dodecahedron.pc");
  const auto both = scratch("both.pc");
  std::ofstream(both, std::ios::binary) << c60 << dodeca;
  const auto batch = run({"bounds", both.string()});
  const auto second = run({"bounds", data("dodecahedron.pc")}).out;
  std::string renumbered = second;
  renumbered.replace(0, std::string("graph=1").size(), "graph=2");
  CHECK(batch.out == run({"bounds", data("c60.pc")}).out + "\n" + renumbered);
  CHECK(run({"bounds", "--jobs", "4", both.string()}).out == batch.out);
}

TEST_CASE("output is deterministic") {
  CHECK(run({"bounds", data("gc21_dual.pc")}).out == run({"bounds", data("gc21_dual.pc")}).out);
}

TEST_CASE("certificate files") {
  const auto dir = scratch("certs");
  fs::remove_all(dir);
  CHECK(run({"bounds", data("c60.pc"), "--certificates", dir.string()}).code == 0);
  CHECK(fs::exists(dir / "graph1.transversal"));
  CHECK(fs::exists(dir / "graph1.bipartition"));
  CHECK(fs::exists(dir / "graph1.independent"));
  REQUIRE(fs::exists(dir / "graph1.packing"));
  const auto v = run({"verify", "packing", data("c60.pc"), (dir / "graph1.packing").string(), "--dual"});
  CHECK(v.code == 0);
  CHECK(v.out.find("total_width=12") != std::string::npos);
}

TEST_CASE("verify packing") {
  const auto ok = run({"verify", "packing", data("c60.pc"), data("c60.packing"), "--dual"});
  CHECK(ok.code == 0);
  for (const char* line : {"M1 pass", "M2 certified lower bound only", "M3 pass", "M4 pass", "M5 pass", "M6 pass"})
    CHECK(ok.out.find(line) != std::string::npos);
  const auto bad = scratch("bad.packing");
  std::ofstream(bad) << "root=1 width=width\n";
  CHECK(run({"verify", "packing", data("c60.pc"), bad.string(), "--dual"}).code == 2);
  const auto wide = scratch("wide.packing");
  std::ofstream(wide) << slurp(kData / "c60.packing") << "root=1 width=1\n";
  const auto overlap = run({"verify", "packing", data("c60.pc"), wide.string(), "--dual"});
  CHECK(overlap.code == 1);
  CHECK(overlap.out.find("M1 fail") != std::string::npos);
}

TEST_CASE("verify tjoin") {
  const auto ok = run({"verify", "tjoin", data("dodecahedron.pc"), data("dodecahedron.tset"), data("dodecahedron.join")});
  CHECK(ok.code == 0);
  CHECK(ok.out == "parity pass\njoin_size=2\nmin_tjoin=2\n");
  const auto bad =
      run({"verify", "tjoin", data("dodecahedron.pc"), data("dodecahedron.tset"), data("dodecahedron.badjoin")});
  CHECK(bad.code == 1);
  CHECK(bad.out.find("parity fail at vertex 1\n") != std::string::npos);
  CHECK(run({"verify", "tjoin", data("dodecahedron.pc"), data("dodecahedron.tset"), data("worked_patch.patch")}).code == 2);
}

TEST_CASE("verify identities on the worked patch") {
  const auto r = run({"verify", "identities", data("worked_patch.rotmap"), data("worked_patch.patch"), "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("moat_area=16 expected=16 pass") != std::string::npos);
  CHECK(r.out.find("mt1_area=7 expected=7 pass") != std::string::npos);
  CHECK(run({"verify", "identities", data("worked_patch.rotmap"), data("worked_patch.patch"), "3"}).code == 1);
}

TEST_CASE("input errors exit 2") {
  CHECK(run({"bounds", data("missing.pc")}).code == 2);
  CHECK(run({"bounds", data("worked_patch.patch")}).code == 2);
  CHECK(run({"--format", "planar_code", "bounds", data("icosahedron.rotmap")}).code == 2);
  CHECK(run({"verify", "packing", data("c60.pc"), data("c60.packing"), "--graph", "2"}).code == 2);
  CHECK(run({"bounds"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}
