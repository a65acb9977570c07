#include <cstdlib>
#include <filesystem>
#include <sstream>
#include <vector>

#include "json.hpp"

#include "doctest.h"
#include "strateuler/catalog.hpp"
#include "strateuler/census_io.hpp"
#include "strateuler/cli.hpp"

using namespace strateuler;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "strat_euler");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("strat_euler_test_" + std::to_string(std::rand()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name, const std::string& text) const {
    const auto p = (path / name).string();
    write_text_file(p, text);
    return p;
  }
};

}  // namespace

TEST_CASE("catalog subcommands") {
  const auto all = run({"catalog", "run"});
  CHECK(all.code == 0);
  CHECK(contains(all.out, "catalog: " + std::to_string(catalog_list().size()) + " of "));
  CHECK_FALSE(contains(all.out, "FAIL"));

  const auto one = run({"catalog", "run", "node-linear"});
  CHECK(one.code == 0);
  CHECK(contains(one.out, "== node-linear =="));
  CHECK(contains(one.out, "bdk_point_formula: LHS=1 RHS=1 OK"));

  const auto list = run({"catalog", "list"});
  CHECK(list.code == 0);
  CHECK(contains(list.out, "broughton\n"));

  CHECK(run({"catalog", "run", "nope"}).code == 2);
}

TEST_CASE("compute") {
  TempDir dir;
  const auto node = dir.file("node.json", catalog_source("node-linear"));
  const auto eu = run({"compute", node, "--what", "eu-global"});
  CHECK(eu.code == 0);
  CHECK(eu.out == "Eu(X) = 2\n");
  CHECK(contains(run({"compute", node, "--what", "eu-table"}).out, "cl(V2)"));
  CHECK(run({"compute", node, "--what", "brasselet", "--at", "0"}).out == "B[a=0] = 2\n");

  const auto b = dir.file("b.json", catalog_source("broughton"));
  CHECK(run({"compute", b, "--what", "lambda"}).out == "lambda_total = -1\n");
  CHECK(run({"compute", b, "--what", "lambda", "--at", "0"}).out == "lambda[a=0] = -1\n");
  CHECK(run({"compute", b, "--what", "detect-irregular"}).out == "irregular values: [0]\n");
  CHECK(run({"compute", b, "--what", "nonsense"}).code == 2);
}

TEST_CASE("check reports failures with exit 1") {
  TempDir dir;
  auto j = nlohmann::json::parse(R"({
    "name": "broken",
    "equidimensional": true,
    "strata": [{"id": "V", "dim": 1, "chi": 0, "regular_part": true}],
    "fibration": {"special_values": ["0"],
                  "fiber_chi": {"V": {"0": 1, "generic": 0}}}
  })");
  const auto broken = run({"check", dir.file("broken.json", j.dump())});
  CHECK(broken.code == 1);
  CHECK(contains(broken.out, "value_consistency: LHS=0 RHS=1 FAIL"));
  CHECK(contains(broken.out, "summary: "));

  const auto good = run({"check", dir.file("node.json", catalog_source("node-linear"))});
  CHECK(good.code == 0);
  CHECK(contains(good.out, "summary: "));
  CHECK(contains(good.out, " 0 failed"));
}

TEST_CASE("input errors exit 2") {
  TempDir dir;
  auto j = nlohmann::json::parse(catalog_source("node-linear"));
  j["strata"][0]["dim"] = "zero";
  const auto bad = run({"check", dir.file("bad.json", j.dump())});
  CHECK(bad.code == 2);
  CHECK(contains(bad.err, "/strata/0/dim"));
  CHECK(run({"check", (dir.path / "missing.json").string()}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
}

TEST_CASE("solve, emit, check round trip") {
  TempDir dir;
  auto j = nlohmann::json::parse(catalog_source("broughton"));
  j["fibration"]["infinity_chi"]["X"]["0"] = nullptr;
  const auto in = dir.file("b.json", j.dump());
  const auto out = (dir.path / "done.json").string();

  const auto blank = run({"check", in});
  CHECK(blank.code == 0);
  CHECK(contains(blank.out, "SKIP"));

  const auto solved = run({"solve", in, "--identity", "thm_generic_fiber", "--unknown",
                           "lambda_total", "--emit-completed", out});
  CHECK(solved.code == 0);
  CHECK(contains(solved.out, "infinity_chi/X/0 = -1"));
  CHECK(contains(solved.out, "thm_generic_fiber: "));
  CHECK(contains(solved.out, "wrote " + out));

  const auto done = run({"check", out});
  CHECK(done.code == 0);
  CHECK_FALSE(contains(done.out, "SKIP"));

  CHECK(run({"solve", in, "--identity", "thm_generic_fiber", "--unknown",
             "fiber_chi/X/generic"}).code == 2);
  CHECK(run({"solve", in, "--identity", "nope", "--unknown", "lambda_total"}).code == 2);
}

TEST_CASE("fubini") {
  TempDir dir;
  const auto f = dir.file("f.json", R"({
    "complex_src": {"simplices": [[0], [1], [2], [0, 1], [1, 2]]},
    "complex_dst": {"simplices": [[0], [1], [0, 1]]},
    "vertex_map": [[0, 0], [1, 1], [2, 0]],
    "weights": [{"simplex": [0, 1], "weight": 2}, {"simplex": [2], "weight": 5}]
  })");
  const auto r = run({"fubini", f});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "chi(source, alpha) = 3"));
  CHECK(contains(r.out, "fubini: LHS=3 RHS=3 OK"));
}

TEST_CASE("color switch") {
  setenv("STRAT_EULER_COLOR", "0", 1);
  CHECK_FALSE(color_enabled(true));
  unsetenv("STRAT_EULER_COLOR");
  CHECK(color_enabled(true));
  CHECK_FALSE(color_enabled(false));
}
