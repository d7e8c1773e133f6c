#include "algebroid/cli.hpp"

#include <iomanip>

#include <CLI11.hpp>
#include <json.hpp>

#include "algebroid/catalog.hpp"
#include "algebroid/error.hpp"
#include "algebroid/hopf.hpp"
#include "algebroid/io.hpp"
#include "algebroid/kunneth.hpp"

namespace algebroid {

using nlohmann::json;

namespace {

std::string tuple(const std::vector<std::size_t>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + ")";
}

json report_json(const CohomologyReport& r) {
  return json{{"betti", r.betti}, {"euler", r.euler}, {"dims", r.degrees}};
}

void betti_table(std::ostream& out, const CohomologyReport& r) {
  out << "degree  dim  betti\n";
  for (std::size_t p = 0; p < r.betti.size(); ++p) {
    out << std::setw(6) << p << std::setw(5) << (p < r.degrees.size() ? r.degrees[p] : 0) << std::setw(7)
        << r.betti[p] << "\n";
  }
}

void emit(std::ostream& out, const json& report) { out << kReportSeparator << "\n" << report.dump(2) << "\n"; }

void sweep_table(std::ostream& out, const std::vector<SweepEntry>& table) {
  out << "   N  dims  betti  chi\n";
  for (const auto& row : table)
    out << std::setw(4) << row.N << "  " << tuple(row.report.degrees) << "  " << tuple(row.report.betti) << "  "
        << row.report.euler << "\n";
}

json sweep_json(const std::vector<SweepEntry>& table) {
  json rows = json::array();
  for (const auto& row : table) rows.push_back(json{{"N", row.N}, {"betti", row.report.betti}, {"euler", row.report.euler}});
  return rows;
}

Representation load_rep(const LieAlgebra& g, const std::string& path) {
  if (path.empty()) return Representation::trivial(g);
  return parse_representation(read_file(path), g);
}

std::string display_name(const LieAlgebra& g, const std::string& path) {
  return g.name().empty() ? path : g.name();
}

int lie_cohomology_cmd(std::ostream& out, const std::string& file, const std::string& rep_file, bool euler_only) {
  const LieAlgebra g = parse_lie_algebra(read_file(file));
  const Representation r = load_rep(g, rep_file);
  const CohomologyReport report = lie_cohomology(r);
  if (euler_only) {
    out << "chi = " << report.euler << "\n";
  } else {
    out << "Lie algebra " << display_name(g, file) << " (dim " << g.dim() << "), coefficients of dim " << r.dim_E()
        << "\n";
    betti_table(out, report);
    out << "betti = " << tuple(report.betti) << ", chi = " << report.euler << "\n";
  }
  json j = report_json(report);
  j["command"] = euler_only ? "lie euler" : "lie cohomology";
  j["algebra"] = display_name(g, file);
  j["dim_E"] = r.dim_E();
  emit(out, j);
  return kExitOk;
}

int circle_sweep_cmd(std::ostream& out, const std::string& file, std::size_t n_min, std::size_t n_max,
                     bool modular) {
  const CircleFile c = parse_circle(read_file(file));
  if (n_min == 0) n_min = c.N_range.first;
  if (n_max == 0) n_max = c.N_range.second;
  const SweepResult sweep =
      truncation_sweep(c.algebroid, n_min, n_max, modular ? RankMethod::Modular : RankMethod::Exact);
  sweep_table(out, sweep.table);
  out << "betti = " << tuple(sweep.report.betti) << ", chi = " << sweep.report.euler << ", "
      << (sweep.stabilized ? "stabilized" : "not stabilized") << "\n";
  json j = report_json(sweep.report);
  j["command"] = "circle sweep";
  j["N_min"] = n_min;
  j["N_max"] = n_max;
  j["stabilized"] = sweep.stabilized;
  j["transitive"] = is_transitive(c.algebroid);
  j["sweep"] = sweep_json(sweep.table);
  if (!sweep.stabilized) j["error"] = std::string(to_string(ErrorCode::NotStabilized));
  emit(out, j);
  return sweep.stabilized ? kExitOk : kExitNotStabilized;
}

int kunneth_cmd(std::ostream& out, const std::string& file_a, const std::string& file_b, const std::string& rep_a,
                const std::string& rep_b) {
  const std::string a_text = read_file(file_a);
  const std::string b_text = read_file(file_b);
  CohomologyReport ra, rb, product;
  std::string label;
  if (looks_like_circle(a_text) || looks_like_circle(b_text)) {
    const bool a_circle = looks_like_circle(a_text);
    if (a_circle && looks_like_circle(b_text))
      throw Error(ErrorCode::ValidationFailed, "products of two circle algebroids are not supported");
    const CircleFile c = parse_circle(a_circle ? a_text : b_text);
    const LieAlgebra g = parse_lie_algebra(a_circle ? b_text : a_text);
    const auto [lo, hi] = c.N_range;
    const CohomologyReport rc = stabilized_cohomology(c.algebroid, lo, hi).report;
    const CohomologyReport rg = lie_cohomology(Representation::trivial(g));
    ra = a_circle ? rc : rg;
    rb = a_circle ? rg : rc;
    product = stabilized_cohomology(product_with_lie_algebra(c.algebroid, g), lo, hi).report;
    label = "circle algebroid x Lie algebra";
  } else {
    const LieAlgebra g = parse_lie_algebra(a_text);
    const LieAlgebra h = parse_lie_algebra(b_text);
    const Representation ea = load_rep(g, rep_a);
    const Representation eb = load_rep(h, rep_b);
    ra = lie_cohomology(ea);
    rb = lie_cohomology(eb);
    product = lie_cohomology(tensor_rep(ea, eb));
    label = display_name(g, file_a) + " + " + display_name(h, file_b);
  }
  const KunnethCheck check = kunneth_verify(product, ra, rb);
  out << "product " << label << "\n";
  out << "degree  product  convolution\n";
  for (const auto& row : check.table)
    out << std::setw(6) << row.degree << std::setw(9) << row.product << std::setw(13) << row.expected << "\n";
  out << "betti = " << tuple(product.betti) << ", chi = " << product.euler << " = " << ra.euler << " * " << rb.euler
      << ", kunneth " << (check.holds && check.euler_multiplicative ? "holds" : "fails") << "\n";
  json j = report_json(product);
  j["command"] = "kunneth";
  j["factor_a"] = report_json(ra);
  j["factor_b"] = report_json(rb);
  j["convolution"] = convolve(ra.betti, rb.betti);
  j["holds"] = check.holds;
  j["euler_multiplicative"] = check.euler_multiplicative;
  emit(out, j);
  return check.holds && check.euler_multiplicative ? kExitOk : kExitValidation;
}

int hopf_cmd(std::ostream& out, const std::string& file) {
  const LieAlgebra g = parse_lie_algebra(read_file(file));
  const bool h_ok = check_h_structure(addition_map(g));
  const CohomologyReport report = lie_cohomology(Representation::trivial(g));
  json j = report_json(report);
  j["command"] = "hopf";
  j["algebra"] = display_name(g, file);
  j["h_structure"] = h_ok;
  if (!g.is_abelian()) {
    out << "addition on " << display_name(g, file) << " is not a Lie algebra morphism\n";
    j["error"] = std::string(to_string(ErrorCode::NotAbelian));
    emit(out, j);
    return kExitValidation;
  }
  const GradedCoalgebra c = addition_coproduct(g);
  const HopfReport hopf = hopf_report(c);
  const auto prim = primitives(c);
  const auto generators = exterior_structure_check(report.betti);
  out << "degree  dim  primitives\n";
  std::vector<std::size_t> prim_dims;
  for (std::size_t r = 0; r < prim.size(); ++r) {
    prim_dims.push_back(prim[r].size());
    out << std::setw(6) << r << std::setw(5) << c.dims[r] << std::setw(12) << prim[r].size() << "\n";
  }
  out << "counit " << (hopf.counit ? "ok" : "fails") << ", coassociative " << (hopf.coassociative ? "ok" : "fails")
      << ", multiplicative " << (hopf.multiplicative ? "ok" : "fails") << ", antipode "
      << (hopf.antipode ? "ok" : "fails") << "\n";
  out << "exterior generators in degrees ";
  if (generators) {
    std::vector<std::size_t> d = *generators;
    out << tuple(d) << "\n";
  } else {
    out << "none\n";
  }
  j["primitive_dims"] = prim_dims;
  j["hopf"] = hopf.ok();
  j["generator_degrees"] = generators ? json(*generators) : json(nullptr);
  emit(out, j);
  return h_ok && hopf.ok() ? kExitOk : kExitValidation;
}

RationalVector parse_covector(const std::string& text) {
  RationalVector out;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    out.push_back(parse_rational(text.substr(start, comma == std::string::npos ? std::string::npos : comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

int symbol_cmd(std::ostream& out, const std::string& file, const std::string& alpha_text) {
  const FiberData f = parse_fiber(read_file(file));
  const RationalVector alpha = parse_covector(alpha_text);
  const CochainComplex c = symbol_complex(f, alpha);
  const ExactnessReport report = exactness_check(c);
  out << "degree  dim  exact\n";
  for (std::size_t r = 0; r < report.exact.size(); ++r)
    out << std::setw(6) << r << std::setw(5) << c.degrees[r] << "  " << (report.exact[r] ? "yes" : "no") << "\n";
  out << (report.overall ? "exact" : "not exact") << "\n";
  json j;
  j["command"] = "symbol";
  j["dims"] = c.degrees;
  std::vector<bool> exact(report.exact.begin(), report.exact.end());
  j["exact"] = exact;
  j["overall"] = report.overall;
  emit(out, j);
  return kExitOk;
}

int catalog_cmd(std::ostream& out, const std::string& dir) {
  const auto checks = run_catalog(dir.empty() ? default_catalog_dir() : std::filesystem::path(dir));
  json rows = json::array();
  std::size_t failed = 0;
  for (const auto& c : checks) {
    out << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << "\n";
    rows.push_back(json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    if (!c.passed) ++failed;
  }
  out << checks.size() - failed << "/" << checks.size() << " catalog checks passed\n";
  emit(out, json{{"command", "catalog"}, {"checks", rows}, {"failed", failed}});
  return failed == 0 ? kExitOk : kExitValidation;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError:
      return kExitParse;
    case ErrorCode::NotStabilized:
      return kExitNotStabilized;
    default:
      return kExitValidation;
  }
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact cohomology of Lie algebras and Lie algebroids over the circle", "algebroid"};
  app.require_subcommand(1);
  std::string data_dir;

  std::string file, file_b, rep, rep_b, alpha;
  std::size_t n_min = 0, n_max = 0;
  bool modular = false;

  auto* lie = app.add_subcommand("lie", "Chevalley-Eilenberg cohomology of a Lie algebra");
  lie->require_subcommand(1);
  auto* lie_coh = lie->add_subcommand("cohomology", "Betti numbers and Euler characteristic");
  lie_coh->add_option("file", file, "Lie algebra file")->required();
  lie_coh->add_option("--rep", rep, "representation file (default: trivial, dim 1)");
  auto* lie_euler = lie->add_subcommand("euler", "Euler characteristic only");
  lie_euler->add_option("file", file, "Lie algebra file")->required();
  lie_euler->add_option("--rep", rep, "representation file");

  auto* circle = app.add_subcommand("circle", "Lie algebroids over the circle");
  circle->require_subcommand(1);
  auto* sweep = circle->add_subcommand("sweep", "truncated cohomology over a range of windows");
  sweep->add_option("file", file, "algebroid file")->required();
  sweep->add_option("--n-min", n_min, "smallest window (default: file's N_range)");
  sweep->add_option("--n-max", n_max, "largest window (default: file's N_range)");
  sweep->add_flag("--modular", modular, "rank modulo large primes instead of exactly");

  auto* kun = app.add_subcommand("kunneth", "product cohomology against the Betti convolution");
  kun->add_option("a", file, "first factor")->required();
  kun->add_option("b", file_b, "second factor")->required();
  kun->add_option("--rep-a", rep, "representation of the first factor");
  kun->add_option("--rep-b", rep_b, "representation of the second factor");

  auto* hopf = app.add_subcommand("hopf", "addition H-structure and the induced Hopf structure");
  hopf->add_option("file", file, "Lie algebra file")->required();

  auto* symbol = app.add_subcommand("symbol", "exactness of the symbol complex at a covector");
  symbol->add_option("file", file, "fiber file")->required();
  symbol->add_option("--alpha", alpha, "comma-separated rationals")->required();

  auto* catalog = app.add_subcommand("catalog", "run the built-in catalog");
  catalog->add_option("--data-dir", data_dir, "catalog directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*lie_coh) return lie_cohomology_cmd(out, file, rep, false);
    if (*lie_euler) return lie_cohomology_cmd(out, file, rep, true);
    if (*sweep) return circle_sweep_cmd(out, file, n_min, n_max, modular);
    if (*kun) return kunneth_cmd(out, file, file_b, rep, rep_b);
    if (*hopf) return hopf_cmd(out, file);
    if (*symbol) return symbol_cmd(out, file, alpha);
    if (*catalog) return catalog_cmd(out, data_dir);
  } catch (const NotStabilizedError& e) {
    err << e.what() << "\n";
    sweep_table(err, e.table());
    return kExitNotStabilized;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return exit_code_for(e.code());
  }
  return kExitUsage;
}

}  // namespace algebroid
