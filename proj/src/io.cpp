#include "algebroid/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "algebroid/error.hpp"

namespace algebroid {

using nlohmann::json;

namespace {

std::size_t line_of(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  for (std::size_t i = 0; i < std::min(byte, text.size()); ++i)
    if (text[i] == '\n') ++line;
  return line;
}

json parse_document(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, "line " + std::to_string(line_of(text, e.byte > 0 ? e.byte - 1 : 0)) +
                                           ": malformed JSON (" + e.what() + ")");
  }
}

[[noreturn]] void bad_field(const std::string& path, const std::string& why) {
  throw Error(ErrorCode::ParseError, "field " + path + ": " + why);
}

const json& field(const json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) bad_field(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) bad_field(path + "/" + key, "missing");
  return *it;
}

std::size_t as_index(const json& v, const std::string& path) {
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
    bad_field(path, "expected a non-negative integer");
  return v.get<std::size_t>();
}

Rational as_rational(const json& v, const std::string& path) {
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const Error& e) {
      bad_field(path, e.what());
    }
  }
  if (v.is_number_integer()) return Rational(static_cast<long>(v.get<long long>()));
  bad_field(path, "expected a rational string such as \"-3/4\"");
}

const json& as_array(const json& v, const std::string& path) {
  if (!v.is_array()) bad_field(path, "expected an array");
  return v;
}

RationalMatrix as_matrix(const json& v, std::size_t rows, std::size_t cols, const std::string& path) {
  as_array(v, path);
  if (v.size() != rows) bad_field(path, "expected " + std::to_string(rows) + " rows");
  RationalMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const std::string row_path = path + "/" + std::to_string(i);
    as_array(v[i], row_path);
    if (v[i].size() != cols) bad_field(row_path, "expected " + std::to_string(cols) + " entries");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = as_rational(v[i][j], row_path + "/" + std::to_string(j));
  }
  return m;
}

json matrix_json(const RationalMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(format_rational(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

LieAlgebra lie_from_json(const json& doc, const std::string& path) {
  const std::size_t dim = as_index(field(doc, "dim", path), path + "/dim");
  std::string name;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) bad_field(path + "/name", "expected a string");
    name = doc["name"].get<std::string>();
  }
  LieAlgebra g(dim, name);
  const json& brackets = as_array(field(doc, "brackets", path), path + "/brackets");
  for (std::size_t n = 0; n < brackets.size(); ++n) {
    const std::string entry = path + "/brackets/" + std::to_string(n);
    const std::size_t i = as_index(field(brackets[n], "i", entry), entry + "/i");
    const std::size_t j = as_index(field(brackets[n], "j", entry), entry + "/j");
    if (i >= dim || j >= dim || i == j) bad_field(entry, "need distinct indices below dim");
    RationalVector c(dim);
    const json& coeffs = as_array(field(brackets[n], "coeffs", entry), entry + "/coeffs");
    for (std::size_t m = 0; m < coeffs.size(); ++m) {
      const std::string cp = entry + "/coeffs/" + std::to_string(m);
      if (!coeffs[m].is_array() || coeffs[m].size() != 2) bad_field(cp, "expected [k, \"p/q\"]");
      const std::size_t k = as_index(coeffs[m][0], cp + "/0");
      if (k >= dim) bad_field(cp + "/0", "index out of range");
      c[k] += as_rational(coeffs[m][1], cp + "/1");
    }
    const auto previous = g.basis_bracket(i, j);
    for (std::size_t k = 0; k < dim; ++k) c[k] += previous[k];
    g.set_bracket(i, j, std::move(c));
  }
  return g;
}

json lie_to_json(const LieAlgebra& g) {
  json doc;
  doc["dim"] = g.dim();
  if (!g.name().empty()) doc["name"] = g.name();
  json brackets = json::array();
  for (std::size_t i = 0; i < g.dim(); ++i) {
    for (std::size_t j = i + 1; j < g.dim(); ++j) {
      const auto c = g.basis_bracket(i, j);
      json coeffs = json::array();
      for (std::size_t k = 0; k < c.size(); ++k)
        if (c[k] != 0) coeffs.push_back(json::array({k, format_rational(c[k])}));
      if (coeffs.empty()) continue;
      brackets.push_back(json{{"i", i}, {"j", j}, {"coeffs", std::move(coeffs)}});
    }
  }
  doc["brackets"] = std::move(brackets);
  return doc;
}

TrigPoly trig_from_json(const json& v, const std::string& path) {
  if (!v.is_string()) bad_field(path, "expected a trig polynomial string");
  try {
    return parse_trig(v.get<std::string>());
  } catch (const Error& e) {
    bad_field(path, e.what());
  }
}

}  // namespace

LieAlgebra parse_lie_algebra(std::string_view text) { return lie_from_json(parse_document(text), ""); }

std::string serialize(const LieAlgebra& g) { return dump(lie_to_json(g)); }

Representation parse_representation(std::string_view text, const LieAlgebra& g) {
  const json doc = parse_document(text);
  const std::size_t dim_E = as_index(field(doc, "dim_E", ""), "/dim_E");
  const json& action = as_array(field(doc, "action", ""), "/action");
  if (action.size() != g.dim())
    bad_field("/action", "expected " + std::to_string(g.dim()) + " matrices, one per generator");
  std::vector<RationalMatrix> rho;
  for (std::size_t i = 0; i < action.size(); ++i)
    rho.push_back(as_matrix(action[i], dim_E, dim_E, "/action/" + std::to_string(i)));
  return Representation(g, dim_E, std::move(rho));
}

std::string serialize(const Representation& r) {
  json doc;
  doc["dim_E"] = r.dim_E();
  json action = json::array();
  for (const auto& m : r.action()) action.push_back(matrix_json(m));
  doc["action"] = std::move(action);
  return dump(doc);
}

CircleFile parse_circle(std::string_view text) {
  const json doc = parse_document(text);
  const json& kind = field(doc, "kind", "");
  if (!kind.is_string()) bad_field("/kind", "expected a string");
  std::pair<std::size_t, std::size_t> range{3, 8};
  if (doc.contains("N_range")) {
    const json& r = doc["N_range"];
    if (!r.is_array() || r.size() != 2) bad_field("/N_range", "expected [N_min, N_max]");
    range = {as_index(r[0], "/N_range/0"), as_index(r[1], "/N_range/1")};
    if (range.first == 0 || range.second < range.first) bad_field("/N_range", "need 1 <= N_min <= N_max");
  }
  const std::string k = kind.get<std::string>();
  if (k == "rank1_anchor") return {CircleAlgebroid::rank1(trig_from_json(field(doc, "p", ""), "/p")), range};
  if (k == "action") {
    LieAlgebra g = lie_from_json(field(doc, "g", ""), "/g");
    const json& phi = as_array(field(doc, "phi", ""), "/phi");
    std::vector<TrigPoly> fields;
    for (std::size_t i = 0; i < phi.size(); ++i) fields.push_back(trig_from_json(phi[i], "/phi/" + std::to_string(i)));
    return {CircleAlgebroid::action(std::move(g), std::move(fields)), range};
  }
  bad_field("/kind", "expected \"rank1_anchor\" or \"action\", got \"" + k + "\"");
}

std::string serialize(const CircleFile& c) {
  json doc;
  doc["N_range"] = json::array({c.N_range.first, c.N_range.second});
  if (const auto* r = std::get_if<Rank1Anchor>(&c.algebroid.kind())) {
    doc["kind"] = "rank1_anchor";
    doc["p"] = format_trig(r->p);
  } else {
    const auto& a = std::get<ActionData>(c.algebroid.kind());
    doc["kind"] = "action";
    doc["g"] = lie_to_json(a.g);
    json phi = json::array();
    for (const auto& p : a.phi) phi.push_back(format_trig(p));
    doc["phi"] = std::move(phi);
  }
  return dump(doc);
}

FiberData parse_fiber(std::string_view text) {
  const json doc = parse_document(text);
  FiberData f;
  f.dim_A = as_index(field(doc, "dim_A", ""), "/dim_A");
  f.dim_M = as_index(field(doc, "dim_M", ""), "/dim_M");
  f.dim_E = doc.contains("dim_E") ? as_index(doc["dim_E"], "/dim_E") : 1;
  f.anchor = as_matrix(field(doc, "anchor", ""), f.dim_M, f.dim_A, "/anchor");
  return f;
}

std::string serialize(const FiberData& f) {
  json doc;
  doc["dim_A"] = f.dim_A;
  doc["dim_M"] = f.dim_M;
  doc["dim_E"] = f.dim_E;
  doc["anchor"] = matrix_json(f.anchor);
  return dump(doc);
}

bool looks_like_circle(std::string_view text) {
  const json doc = parse_document(text);
  return doc.is_object() && doc.contains("kind");
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot read '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace algebroid
