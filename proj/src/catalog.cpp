#include "algebroid/catalog.hpp"

#include <functional>
#include <sstream>

#include <json.hpp>

#include "algebroid/error.hpp"
#include "algebroid/hopf.hpp"
#include "algebroid/io.hpp"
#include "algebroid/kunneth.hpp"

namespace algebroid {

using nlohmann::json;

std::filesystem::path default_catalog_dir() { return std::filesystem::path(ALGEBROID_DATA_DIR) / "catalog"; }

namespace {

std::string tuple(const std::vector<std::size_t>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + ")";
}

struct Runner {
  std::filesystem::path dir;
  std::vector<CatalogCheck> checks;

  std::string text(const json& entry, const char* key) const { return read_file(dir / entry.at(key).get<std::string>()); }

  LieAlgebra algebra(const json& entry, const char* key = "algebra") const { return parse_lie_algebra(text(entry, key)); }

  Representation rep(const json& entry, const char* alg_key, const char* rep_key) const {
    const LieAlgebra g = algebra(entry, alg_key);
    if (!entry.contains(rep_key)) return Representation::trivial(g);
    return parse_representation(text(entry, rep_key), g);
  }

  void run(const std::string& name, const std::function<std::string(bool&)>& body) {
    CatalogCheck check{name, false, {}};
    try {
      check.detail = body(check.passed);
    } catch (const std::exception& e) {
      check.passed = false;
      check.detail = e.what();
    }
    checks.push_back(std::move(check));
  }

  // Betti and Euler against optional expectations in the entry.
  static bool matches(const json& entry, const CohomologyReport& r) {
    if (entry.contains("betti") && entry["betti"].get<std::vector<std::size_t>>() != r.betti) return false;
    if (entry.contains("euler") && entry["euler"].get<std::int64_t>() != r.euler) return false;
    return true;
  }

  static std::string describe(const CohomologyReport& r) {
    return "betti = " + tuple(r.betti) + ", chi = " + std::to_string(r.euler);
  }
};

}  // namespace

std::vector<CatalogCheck> run_catalog(const std::filesystem::path& dir) {
  const json manifest = json::parse(read_file(dir / "manifest.json"));
  Runner run{dir, {}};

  for (const auto& e : manifest.value("lie", json::array())) {
    run.run("lie " + e.at("algebra").get<std::string>(), [&](bool& ok) {
      const auto r = lie_cohomology(Representation::trivial(run.algebra(e)));
      ok = Runner::matches(e, r);
      return Runner::describe(r);
    });
  }

  for (const auto& e : manifest.value("representations", json::array())) {
    run.run("rep " + e.at("rep").get<std::string>(), [&](bool& ok) {
      const auto r = lie_cohomology(run.rep(e, "algebra", "rep"));
      ok = Runner::matches(e, r);
      return Runner::describe(r);
    });
  }

  for (const auto& e : manifest.value("circle", json::array())) {
    run.run("circle " + e.at("file").get<std::string>(), [&](bool& ok) {
      const CircleFile c = parse_circle(run.text(e, "file"));
      const auto sweep = truncation_sweep(c.algebroid, c.N_range.first, c.N_range.second);
      ok = sweep.stabilized && Runner::matches(e, sweep.report);
      return Runner::describe(sweep.report) + (sweep.stabilized ? ", stabilized" : ", not stabilized");
    });
  }

  for (const auto& e : manifest.value("kunneth", json::array())) {
    const std::string a_name = e.at("a").get<std::string>();
    const std::string b_name = e.at("b").get<std::string>();
    std::string label = "kunneth " + a_name + " x " + b_name;
    if (e.contains("rep_a") || e.contains("rep_b"))
      label += " with " + e.value("rep_a", std::string("trivial")) + ", " + e.value("rep_b", std::string("trivial"));
    run.run(label, [&](bool& ok) {
      CohomologyReport ra, rb, product;
      const std::string a_text = run.text(e, "a");
      if (looks_like_circle(a_text)) {
        const CircleFile c = parse_circle(a_text);
        const LieAlgebra g = run.algebra(e, "b");
        const auto [lo, hi] = c.N_range;
        ra = stabilized_cohomology(c.algebroid, lo, hi).report;
        rb = lie_cohomology(Representation::trivial(g));
        product = stabilized_cohomology(product_with_lie_algebra(c.algebroid, g), lo, hi).report;
      } else {
        const Representation ea = run.rep(e, "a", "rep_a");
        const Representation eb = run.rep(e, "b", "rep_b");
        ra = lie_cohomology(ea);
        rb = lie_cohomology(eb);
        product = lie_cohomology(tensor_rep(ea, eb));
      }
      const auto check = kunneth_verify(product, ra, rb);
      ok = check.holds && check.euler_multiplicative && Runner::matches(e, product);
      return Runner::describe(product) + (check.holds ? ", convolution holds" : ", convolution fails");
    });
  }

  for (const auto& e : manifest.value("hopf", json::array())) {
    run.run("hopf " + e.at("algebra").get<std::string>(), [&](bool& ok) {
      const LieAlgebra g = run.algebra(e);
      const bool expect_hopf = e.at("expect").get<std::string>() == "hopf";
      const bool h_ok = check_h_structure(addition_map(g));
      if (!expect_hopf) {
        ok = !h_ok;
        return std::string(h_ok ? "addition unexpectedly a morphism" : "addition is not a morphism");
      }
      const GradedCoalgebra c = addition_coproduct(g);
      const auto prim = primitives(c);
      const auto generators = exterior_structure_check(lie_cohomology(Representation::trivial(g)).betti);
      ok = h_ok && verify_hopf(c) && prim.size() > 1 && prim[1].size() == g.dim() && generators &&
           generators->size() == g.dim();
      return "primitives in degree 1: " + std::to_string(prim.size() > 1 ? prim[1].size() : 0);
    });
  }

  for (const auto& e : manifest.value("symbol", json::array())) {
    run.run("symbol " + e.at("fiber").get<std::string>(), [&](bool& ok) {
      const FiberData f = parse_fiber(run.text(e, "fiber"));
      RationalVector alpha;
      for (const auto& a : e.at("alpha")) alpha.push_back(parse_rational(a.get<std::string>()));
      const bool exact = exactness_check(symbol_complex(f, alpha)).overall;
      ok = exact == e.at("exact").get<bool>();
      return std::string(exact ? "exact" : "not exact");
    });
  }

  return std::move(run.checks);
}

}  // namespace algebroid
