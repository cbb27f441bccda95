#include "affinoid/io/json.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "affinoid/errors.hpp"

namespace affinoid::io {

namespace {

const Json& require(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) throw ParseError(where + ": expected an object");
  const auto it = j.find(key);
  if (it == j.end()) throw ParseError(where + "." + key + ": missing");
  return *it;
}

std::size_t require_size(const Json& j, const char* key, const std::string& where) {
  const Json& v = require(j, key, where);
  if (!v.is_number_unsigned()) throw ParseError(where + "." + key + ": expected a non-negative integer");
  return v.get<std::size_t>();
}

Poly poly_from(const Json& j, std::size_t vars, const std::string& field) {
  if (!j.is_string()) throw ParseError(field + ": expected a polynomial string");
  try {
    return parse_poly(j.get<std::string>(), vars);
  } catch (const Error& e) {
    throw ParseError(field + ": " + e.what());
  }
}

std::vector<Poly> polys_from(const Json& j, std::size_t vars, std::size_t count, const std::string& field) {
  if (!j.is_array()) throw ParseError(field + ": expected an array");
  if (j.size() != count) {
    throw ParseError(field + ": expected " + std::to_string(count) + " entries, got " + std::to_string(j.size()));
  }
  std::vector<Poly> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(poly_from(j[i], vars, field + "[" + std::to_string(i) + "]"));
  return out;
}

PolyMap map_from(const Json& parent, const char* key, std::size_t vars, std::size_t count, const std::string& where) {
  return PolyMap(vars, polys_from(require(parent, key, where), vars, count, where + "." + key));
}

Json polys_to_json(const std::vector<Poly>& ps) {
  Json out = Json::array();
  for (const auto& p : ps) out.push_back(affinoid::to_string(p));
  return out;
}

/// 1-based index list -> subset and sorting sign.
std::pair<Subset, int> index_set(const Json& j, std::size_t dim, std::size_t expected, const std::string& field) {
  if (!j.is_array()) throw ParseError(field + ": expected an array of indices");
  if (j.size() != expected) {
    throw ParseError(field + ": expected " + std::to_string(expected) + " indices, got " + std::to_string(j.size()));
  }
  std::vector<std::size_t> idx;
  for (const auto& v : j) {
    if (!v.is_number_unsigned()) throw ParseError(field + ": indices are positive integers");
    const auto i = v.get<std::size_t>();
    if (i < 1 || i > dim) throw ParseError(field + ": index " + std::to_string(i) + " out of range 1.." + std::to_string(dim));
    idx.push_back(i - 1);
  }
  int sign = 1;
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = a + 1; b < idx.size(); ++b) {
      if (idx[a] == idx[b]) throw ParseError(field + ": repeated index " + std::to_string(idx[a] + 1));
      if (idx[a] > idx[b]) sign = -sign;
    }
  return {subset_from([&] {
            std::sort(idx.begin(), idx.end());
            return idx;
          }()),
          sign};
}

Json indices_to_json(Subset s) {
  Json out = Json::array();
  for (const auto i : subset_elements(s)) out.push_back(i + 1);
  return out;
}

}  // namespace

Json parse_text(const std::string& text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(what + ": malformed JSON (" + e.what() + ")");
  }
}

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot be read");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_text(buf.str(), path);
}

Json to_json(const Rational& r) { return affinoid::to_string(r); }

Json to_json(const std::vector<Rational>& point) {
  Json out = Json::array();
  for (const auto& r : point) out.push_back(affinoid::to_string(r));
  return out;
}

std::vector<Rational> point_from_json(const Json& j, const std::string& field) {
  if (!j.is_array()) throw ParseError(field + ": expected an array of rationals");
  std::vector<Rational> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string at = field + "[" + std::to_string(i) + "]";
    try {
      if (j[i].is_string()) out.push_back(parse_rational(j[i].get<std::string>()));
      else if (j[i].is_number_integer()) out.emplace_back(j[i].get<long>());
      else throw ParseError("expected a rational string");
    } catch (const Error& e) {
      throw ParseError(at + ": " + e.what());
    }
  }
  return out;
}

Json groupoid_to_json(const GroupoidData& g) {
  Json j;
  j["name"] = g.name;
  j["dim_G"] = g.dim_G;
  j["dim_M"] = g.dim_M;
  j["src"] = polys_to_json(g.src.components());
  j["tgt"] = polys_to_json(g.tgt.components());
  j["unit"] = polys_to_json(g.unit.components());
  j["inv"] = polys_to_json(g.inv.components());
  j["comp_param"] = {{"dim_P", g.comp_param.domain_dim()}, {"map", polys_to_json(g.comp_param.components())}};
  j["mult"] = polys_to_json(g.mult.components());
  j["splitting"] = matrix_to_json(g.splitting);
  return j;
}

GroupoidData groupoid_from_json(const Json& j) {
  const std::string w = "groupoid";
  GroupoidData g;
  if (!j.is_object()) throw ParseError(w + ": expected an object");
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw ParseError(w + ".name: expected a string");
    g.name = j["name"].get<std::string>();
  }
  g.dim_G = require_size(j, "dim_G", w);
  g.dim_M = require_size(j, "dim_M", w);
  if (g.dim_M > g.dim_G) throw ParseError(w + ".dim_M: exceeds dim_G");
  g.src = map_from(j, "src", g.dim_G, g.dim_M, w);
  g.tgt = map_from(j, "tgt", g.dim_G, g.dim_M, w);
  g.unit = map_from(j, "unit", g.dim_M, g.dim_G, w);
  g.inv = map_from(j, "inv", g.dim_G, g.dim_G, w);
  const Json& cp = require(j, "comp_param", w);
  const std::size_t dim_p = require_size(cp, "dim_P", w + ".comp_param");
  g.comp_param = map_from(cp, "map", dim_p, 2 * g.dim_G, w + ".comp_param");
  g.mult = map_from(j, "mult", dim_p, g.dim_G, w);
  const Json& sp = require(j, "splitting", w);
  if (!sp.is_array() || sp.size() != g.dim_G) {
    throw ParseError(w + ".splitting: expected " + std::to_string(g.dim_G) + " rows");
  }
  g.splitting = PMatrix(g.dim_G, g.dim_G, Poly(g.dim_M));
  for (std::size_t r = 0; r < g.dim_G; ++r) {
    const auto row = polys_from(sp[r], g.dim_M, g.dim_G, w + ".splitting[" + std::to_string(r) + "]");
    for (std::size_t c = 0; c < g.dim_G; ++c) g.splitting(r, c) = row[c];
  }
  return g;
}

std::string to_string(FieldKind kind) {
  switch (kind) {
    case FieldKind::mv: return "mv";
    case FieldKind::form: return "form";
    case FieldKind::tensor: return "tensor";
  }
  return "mv";
}

Json field_to_json(FieldKind kind, const TensorField& f) {
  Json j;
  j["kind"] = to_string(kind);
  j["dim"] = f.num_vars();
  j["degree"] = {f.p(), f.q()};
  Json coeffs = Json::array();
  for (const Subset a : f.contra_sets())
    for (const Subset b : f.cov_sets()) {
      const Poly& c = f.at(a, b);
      if (c.is_zero()) continue;
      coeffs.push_back({{"idx", indices_to_json(a)}, {"cov_idx", indices_to_json(b)}, {"poly", affinoid::to_string(c)}});
    }
  j["coeffs"] = std::move(coeffs);
  return j;
}

Json field_to_json(const MultiVectorField& m) { return field_to_json(FieldKind::mv, TensorField::from_multivector(m)); }
Json field_to_json(const DifferentialForm& w) { return field_to_json(FieldKind::form, TensorField::from_form(w)); }

FieldInput field_from_json(const Json& j, std::size_t expected_dim) {
  const std::string w = "field";
  FieldInput in;
  const Json& kind = require(j, "kind", w);
  if (kind == "mv") in.kind = FieldKind::mv;
  else if (kind == "form") in.kind = FieldKind::form;
  else if (kind == "tensor") in.kind = FieldKind::tensor;
  else throw ParseError(w + ".kind: expected \"mv\", \"form\" or \"tensor\"");
  const std::size_t dim = require_size(j, "dim", w);
  if (expected_dim != 0 && dim != expected_dim) {
    throw ParseError(w + ".dim: " + std::to_string(dim) + " does not match the groupoid dimension " +
                     std::to_string(expected_dim));
  }
  const Json& deg = require(j, "degree", w);
  if (!deg.is_array() || deg.size() != 2 || !deg[0].is_number_unsigned() || !deg[1].is_number_unsigned()) {
    throw ParseError(w + ".degree: expected [p, q]");
  }
  const auto p = deg[0].get<std::size_t>(), q = deg[1].get<std::size_t>();
  if (p > dim || q > dim) throw ParseError(w + ".degree: exceeds dim");
  if (in.kind == FieldKind::mv && q != 0) throw ParseError(w + ".degree: a multivector field has q = 0");
  if (in.kind == FieldKind::form && p != 0) throw ParseError(w + ".degree: a form has p = 0");
  in.field = TensorField(dim, p, q);
  const Json& coeffs = require(j, "coeffs", w);
  if (!coeffs.is_array()) throw ParseError(w + ".coeffs: expected an array");
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const std::string at = w + ".coeffs[" + std::to_string(i) + "]";
    const Json& entry = coeffs[i];
    if (!entry.is_object()) throw ParseError(at + ": expected an object");
    static const Json empty = Json::array();
    const Json& idx = entry.contains("idx") ? entry["idx"] : empty;
    const Json& cov = entry.contains("cov_idx") ? entry["cov_idx"] : empty;
    const auto [a, sa] = index_set(idx, dim, p, at + ".idx");
    const auto [b, sb] = index_set(cov, dim, q, at + ".cov_idx");
    const Poly c = poly_from(require(entry, "poly", at), dim, at + ".poly");
    in.field.at(a, b) += Rational(sa * sb) * c;
  }
  return in;
}

Json matrix_to_json(const PMatrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(affinoid::to_string(m(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace affinoid::io
