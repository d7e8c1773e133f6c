#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "algebroid/cli.hpp"
#include "algebroid/error.hpp"
#include "algebroid/io.hpp"
#include "generators.hpp"

using namespace algebroid;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;

  nlohmann::json report() const {
    const auto at = out.find(kReportSeparator);
    REQUIRE(at != std::string::npos);
    return nlohmann::json::parse(out.substr(at + std::string(kReportSeparator).size()));
  }
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "algebroid");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string cat(const std::string& file) { return gen::catalog_path(file); }

std::string scratch(const std::string& name, const std::string& text) {
  const fs::path dir = fs::temp_directory_path() / "algebroid_cli_test";
  fs::create_directories(dir);
  const fs::path p = dir / name;
  std::ofstream(p) << text;
  return p.string();
}

}  // namespace

TEST_CASE("lie euler") {
  auto r = run({"lie", "euler", cat("su2.json")});
  CHECK(r.code == kExitOk);
  CHECK(r.out.starts_with("chi = 0\n"));
  CHECK(r.report()["euler"] == 0);
  r = run({"lie", "euler", cat("zero.json")});
  CHECK(r.out.starts_with("chi = 1\n"));
}

TEST_CASE("lie cohomology with and without coefficients") {
  auto r = run({"lie", "cohomology", cat("h3.json")});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("betti = (1,2,2,1), chi = 0") != std::string::npos);
  CHECK(r.report()["betti"] == nlohmann::json({1, 2, 2, 1}));
  r = run({"lie", "cohomology", cat("su2.json"), "--rep", cat("su2_adjoint.json")});
  CHECK(r.report()["betti"] == nlohmann::json({0, 0, 0, 0}));
  CHECK(r.report()["dim_E"] == 3);
}

TEST_CASE("circle sweep") {
  auto r = run({"circle", "sweep", cat("sin_t.json"), "--n-min", "3", "--n-max", "6"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("betti = (1,3), chi = -2, stabilized") != std::string::npos);
  const auto j = r.report();
  CHECK(j["stabilized"] == true);
  CHECK(j["sweep"].size() == 4);
  CHECK(j["transitive"] == false);

  r = run({"circle", "sweep", cat("action_sl2.json")});
  CHECK(r.code == kExitOk);
  CHECK(r.report()["euler"] == 0);
  CHECK(r.report()["N_min"] == 4);
  CHECK(r.report()["N_max"] == 10);

  const auto mod = run({"circle", "sweep", cat("sin_2t.json"), "--modular"});
  CHECK(mod.report()["betti"] == nlohmann::json({1, 5}));
}

TEST_CASE("circle sweep that does not stabilize exits 3") {
  const auto file = scratch("zero_anchor.json", "{\"kind\": \"rank1_anchor\", \"p\": \"0\"}");
  const auto r = run({"circle", "sweep", file, "--n-min", "1", "--n-max", "3"});
  CHECK(r.code == kExitNotStabilized);
  CHECK(r.report()["stabilized"] == false);
  CHECK(r.report()["error"] == "NOT_STABILIZED");
}

TEST_CASE("kunneth") {
  auto r = run({"kunneth", cat("su2.json"), cat("su2.json")});
  CHECK(r.code == kExitOk);
  CHECK(r.report()["betti"] == nlohmann::json({1, 0, 0, 2, 0, 0, 1}));
  CHECK(r.report()["holds"] == true);
  r = run({"kunneth", cat("one.json"), cat("su2.json")});
  CHECK(r.code == kExitOk);
  CHECK(r.report()["betti"] == nlohmann::json({1, 1, 0, 1, 1}));
  r = run({"kunneth", cat("h3.json"), cat("aff1.json"), "--rep-a", cat("h3_adjoint.json"), "--rep-b",
           cat("aff1_adjoint.json")});
  CHECK(r.code == kExitOk);
  CHECK(r.report()["euler_multiplicative"] == true);
  r = run({"kunneth", cat("one.json"), cat("sin_t.json")});
  CHECK(r.code == kExitValidation);
}

TEST_CASE("hopf") {
  auto r = run({"hopf", cat("r3.json")});
  CHECK(r.code == kExitOk);
  const auto j = r.report();
  CHECK(j["primitive_dims"] == nlohmann::json({0, 3, 0, 0}));
  CHECK(j["generator_degrees"] == nlohmann::json({1, 1, 1}));
  CHECK(j["hopf"] == true);
  r = run({"hopf", cat("su2.json")});
  CHECK(r.code == kExitValidation);
  CHECK(r.report()["error"] == "NOT_ABELIAN");
}

TEST_CASE("symbol") {
  auto r = run({"symbol", cat("fiber_sl2_t0.json"), "--alpha", "1"});
  CHECK(r.code == kExitOk);
  CHECK(r.report()["overall"] == true);
  CHECK(r.report()["dims"] == nlohmann::json({1, 3, 3, 1}));
  r = run({"symbol", cat("fiber_sl2_t0.json"), "--alpha", "0"});
  CHECK(r.report()["overall"] == false);
  r = run({"symbol", cat("fiber_sl2_t0.json"), "--alpha", "1,2"});
  CHECK(r.code == kExitValidation);
  r = run({"symbol", cat("fiber_sl2_t0.json"), "--alpha", "one"});
  CHECK(r.code == kExitParse);
}

TEST_CASE("catalog") {
  const auto r = run({"catalog"});
  CHECK(r.code == kExitOk);
  CHECK(r.report()["failed"] == 0);
}

TEST_CASE("usage errors exit 64") {
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({"lie"}).code == kExitUsage);
  CHECK(run({"lie", "euler"}).code == kExitUsage);
  CHECK(run({"circle", "sweep", cat("sin_t.json"), "--n-min", "x"}).code == kExitUsage);
  CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("parse errors exit 65 with a location") {
  const auto broken = scratch("broken.json", "{\n  \"dim\": 2,\n  \"brackets\": [\n}\n");
  auto r = run({"lie", "euler", broken});
  CHECK(r.code == kExitParse);
  CHECK(r.err.find("line 4") != std::string::npos);

  const auto bad_field = scratch("bad_field.json", R"j({"dim": 2, "brackets": [{"i": 0, "j": "1", "coeffs": []}]})j");
  r = run({"lie", "euler", bad_field});
  CHECK(r.code == kExitParse);
  CHECK(r.err.find("/brackets/0/j") != std::string::npos);

  const auto bad_q = scratch("bad_q.json", R"j({"dim": 2, "brackets": [{"i": 0, "j": 1, "coeffs": [[1, "1/0"]]}]})j");
  r = run({"lie", "euler", bad_q});
  CHECK(r.code == kExitParse);
  CHECK(r.err.find("/brackets/0/coeffs/0/1") != std::string::npos);

  r = run({"lie", "euler", "/nonexistent/algebra.json"});
  CHECK(r.code == kExitParse);

  const auto bad_kind = scratch("bad_kind.json", R"j({"kind": "torus"})j");
  r = run({"circle", "sweep", bad_kind});
  CHECK(r.code == kExitParse);
  CHECK(r.err.find("/kind") != std::string::npos);
}

TEST_CASE("validation failures exit 2") {
  const auto bad_jacobi = scratch(
      "bad_jacobi.json",
      R"j({"dim": 3, "brackets": [{"i": 0, "j": 1, "coeffs": [[2, "1"]]}, {"i": 0, "j": 2, "coeffs": [[0, "1"]]}, {"i": 1, "j": 2, "coeffs": [[1, "1"]]}]})j");
  CHECK(run({"lie", "euler", bad_jacobi}).code == kExitValidation);
  const auto bad_rep = scratch("bad_rep.json", R"j({"dim_E": 1, "action": [[["1"]], [["1"]], [["0"]]]})j");
  CHECK(run({"lie", "euler", cat("su2.json"), "--rep", bad_rep}).code == kExitValidation);
  const auto bad_action = scratch(
      "bad_action.json",
      R"j({"kind": "action", "g": {"dim": 1, "brackets": []}, "phi": ["1", "sin(1t)"]})j");
  CHECK(run({"circle", "sweep", bad_action}).code == kExitValidation);
}

TEST_CASE("output is byte-identical across runs and thread counts") {
  const std::vector<std::string> args{"circle", "sweep", cat("action_sl2.json"), "--n-min", "4", "--n-max", "7"};
  const auto first = run(args);
  CHECK(run(args).out == first.out);
  ::setenv("ALGEBROID_THREADS", "1", 1);
  CHECK(run(args).out == first.out);
  ::setenv("ALGEBROID_THREADS", "3", 1);
  CHECK(run(args).out == first.out);
  ::unsetenv("ALGEBROID_THREADS");
  CHECK(run({"kunneth", cat("h3.json"), cat("aff1.json")}).out == run({"kunneth", cat("h3.json"), cat("aff1.json")}).out);
}

TEST_CASE("every catalog file round-trips bit for bit") {
  std::size_t checked = 0;
  for (const auto& entry : fs::directory_iterator(gen::catalog_path(""))) {
    const std::string name = entry.path().filename().string();
    if (name == "manifest.json") continue;
    const std::string text = read_file(entry.path());
    CAPTURE(name);
    const auto doc = nlohmann::json::parse(text);
    if (doc.contains("kind")) {
      const auto c = parse_circle(text);
      CHECK(serialize(c) == text);
      CHECK(parse_circle(serialize(c)) == c);
    } else if (doc.contains("dim_A")) {
      const auto f = parse_fiber(text);
      CHECK(serialize(f) == text);
      const auto g = parse_fiber(serialize(f));
      CHECK(g.anchor == f.anchor);
      CHECK(g.dim_E == f.dim_E);
    } else if (doc.contains("dim_E")) {
      const std::string base = name.substr(0, name.find('_'));
      const auto g = base == "zero" ? LieAlgebra(0) : gen::catalog_algebra(base);
      const auto r = parse_representation(text, g);
      CHECK(serialize(r) == text);
      CHECK(parse_representation(serialize(r), g) == r);
    } else {
      const auto g = parse_lie_algebra(text);
      CHECK(serialize(g) == text);
      CHECK(parse_lie_algebra(serialize(g)) == g);
    }
    ++checked;
  }
  CHECK(checked >= 20);
}

TEST_CASE("random algebras round-trip") {
  auto rng = gen::engine(0xf11e);
  for (int trial = 0; trial < 20; ++trial) {
    const auto g = gen::semidirect(rng, 2 + trial % 4);
    CHECK(parse_lie_algebra(serialize(g)) == g);
    const auto r = gen::semidirect_module(rng, g, 1 + trial % 3);
    CHECK(parse_representation(serialize(r), g) == r);
  }
}
