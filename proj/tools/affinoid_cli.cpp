// affinoid: command-line front end for the affine-structure checks.
//
// Exit codes: 0 every check passed, 1 a check failed, 2 input error.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

#include "affinoid/affine/forms.hpp"
#include "affinoid/affine/multivector.hpp"
#include "affinoid/affine/tensors.hpp"
#include "affinoid/catalog/fixtures.hpp"
#include "affinoid/errors.hpp"
#include "affinoid/exterior/calculus.hpp"
#include "affinoid/suite.hpp"

namespace {

using namespace affinoid;
using io::Json;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kInputError = 2;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  std::string groupoid;
  std::vector<std::string> fields;
  std::string predicate;
  std::string suite;
  std::optional<std::uint64_t> seed;
  std::string mode = "exact";
  std::size_t samples = 25;
  std::string out;
  std::string catalog_id;
  std::string fixture;
};

CheckOptions options_from(const Config& c) {
  CheckOptions o;
  try {
    o.mode = parse_check_mode(c.mode);
  } catch (const Error& e) {
    throw InputError(std::string("--mode: ") + e.what());
  }
  o.samples = c.samples;
  if (c.seed) {
    o.seed = *c.seed;
  } else if (const char* env = std::getenv("AFFINOID_SEED"); env != nullptr && *env != '\0') {
    try {
      std::size_t used = 0;
      o.seed = std::stoull(env, &used);
      if (env[used] != '\0') throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
      throw InputError(std::string("AFFINOID_SEED: not an unsigned integer: ") + env);
    }
  }
  return o;
}

struct LoadedGroupoid {
  std::string label;
  GroupoidData data;
  std::vector<catalog::Fixture> fixtures;
};

LoadedGroupoid load_groupoid(const std::string& spec) {
  if (spec.empty()) throw InputError("--groupoid: required (catalog:<id> or a JSON file)");
  if (spec.rfind("catalog:", 0) == 0) {
    const std::string id = spec.substr(8);
    try {
      catalog::CatalogEntry e = catalog::entry(id);
      return {spec, std::move(e.groupoid), std::move(e.fixtures)};
    } catch (const std::out_of_range&) {
      throw InputError("--groupoid: unknown catalog id '" + id + "'");
    }
  }
  GroupoidData d = io::groupoid_from_json(io::read_file(spec));
  return {spec, std::move(d), {}};
}

/// A field file may name its groupoid under "groupoid" when --groupoid is
/// not given.
std::string groupoid_spec(const Config& c, const Json& first_field) {
  if (!c.groupoid.empty()) return c.groupoid;
  if (first_field.is_object() && first_field.contains("groupoid")) {
    if (!first_field["groupoid"].is_string()) throw ParseError("field.groupoid: expected a string");
    return first_field["groupoid"].get<std::string>();
  }
  throw InputError("--groupoid: required (or a \"groupoid\" key in the field file)");
}

void emit(const Report& rep, const std::string& out) {
  const std::string text = report_text(rep);
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out);
  if (!f) throw InputError("--out: cannot write " + out);
  f << text;
}

int finish(const Report& rep, const Config& c) {
  emit(rep, c.out);
  for (const auto& chk : rep.checks)
    if (!chk.pass) std::cerr << "FAIL " << chk.check << " (" << chk.instance << "): " << chk.detail << "\n";
  return rep.pass() ? kPass : kFail;
}

struct Inputs {
  LoadedGroupoid groupoid;
  std::vector<io::FieldInput> fields;
};

Inputs load_inputs(const Config& c, std::size_t min_fields, std::size_t max_fields) {
  if (c.fields.size() < min_fields || c.fields.size() > max_fields) {
    throw InputError("--field: expected " + std::to_string(min_fields) +
                     (min_fields == max_fields ? "" : " to " + std::to_string(max_fields)) + " field file(s)");
  }
  std::vector<Json> raw;
  for (const auto& path : c.fields) raw.push_back(io::read_file(path));
  Inputs in{load_groupoid(groupoid_spec(c, raw.empty() ? Json() : raw.front())), {}};
  for (const auto& j : raw) in.fields.push_back(io::field_from_json(j, in.groupoid.data.dim_G));
  return in;
}

// ---- commands ---------------------------------------------------------------------

int cmd_check(const Config& c) {
  const CheckOptions o = options_from(c);
  if (c.suite.empty() == c.predicate.empty()) throw InputError("check: give exactly one of --suite or --predicate");
  if (!c.suite.empty()) {
    const LoadedGroupoid g = load_groupoid(c.groupoid);
    try {
      return finish(run_suite(c.suite, g.label, g.data, g.fixtures, o), c);
    } catch (const std::invalid_argument& e) {
      throw InputError(std::string("--suite: ") + e.what());
    }
  }
  const Inputs in = load_inputs(c, 1, 1);
  const Groupoid g(in.groupoid.data);
  Report rep{"check", in.groupoid.label, o, {}, {}};
  try {
    rep.checks = run_predicate(c.predicate, g, in.fields[0], c.fields[0], o);
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("--predicate: ") + e.what());
  }
  return finish(rep, c);
}

int cmd_decompose(const Config& c) {
  const CheckOptions o = options_from(c);
  const Inputs in = load_inputs(c, 1, 1);
  const Groupoid g(in.groupoid.data);
  const io::FieldInput& f = in.fields[0];
  Report rep{"decompose", in.groupoid.label, o, {}, {}};
  const std::string inst = c.fields[0];
  Verdict affine;
  switch (f.kind) {
    case io::FieldKind::mv: affine = affine_mv_fast(g, f.multivector(), o); break;
    case io::FieldKind::form: affine = affine_form_identity(g, f.form(), o); break;
    case io::FieldKind::tensor: affine = gamma_identity(g, f.field, TensorLaw::affine, o); break;
  }
  const std::string predicate = "affine-" + io::to_string(f.kind);
  rep.checks.push_back({predicate, "prop:decomposition", inst, affine.pass, affine.detail, affine.witness});
  if (!affine.pass) return finish(rep, c);

  Json result;
  switch (f.kind) {
    case io::FieldKind::mv: {
      const AffineMV p = AffineMV::trusted(g, f.multivector());
      result["source"] = io::field_to_json(p.source());
      result["target"] = io::field_to_json(p.target());
      result["core"] = io::field_to_json(io::FieldKind::mv, TensorField::from_multivector(p.core()));
      const Verdict r = multiplicative_mv_fast(g, p.source(), o), l = multiplicative_mv_fast(g, p.target(), o);
      rep.checks.push_back({"source-multiplicative", "prop:leftright", inst, r.pass, r.detail, r.witness});
      rep.checks.push_back({"target-multiplicative", "prop:leftright", inst, l.pass, l.detail, l.witness});
      break;
    }
    case io::FieldKind::form: {
      const AffineForm t = AffineForm::trusted(g, f.form());
      result["source"] = io::field_to_json(t.source());
      result["target"] = io::field_to_json(t.target());
      result["core"] = io::field_to_json(t.theta());
      const Verdict r = multiplicative_form_identity(g, t.source(), o);
      const Verdict l = multiplicative_form_identity(g, t.target(), o);
      rep.checks.push_back({"source-multiplicative", "prop:aff-mul-form", inst, r.pass, r.detail, r.witness});
      rep.checks.push_back({"target-multiplicative", "prop:aff-mul-form", inst, l.pass, l.detail, l.witness});
      break;
    }
    case io::FieldKind::tensor: {
      const AffineTensor t = AffineTensor::trusted(g, f.field);
      result["source"] = io::field_to_json(io::FieldKind::tensor, t.source());
      result["target"] = io::field_to_json(io::FieldKind::tensor, t.target());
      result["core"] = io::field_to_json(io::FieldKind::tensor, t.core());
      const Verdict r = gamma_identity(g, t.source(), TensorLaw::multiplicative, o);
      const Verdict l = gamma_identity(g, t.target(), TensorLaw::multiplicative, o);
      rep.checks.push_back({"source-multiplicative", "prop:affine-mult", inst, r.pass, r.detail, r.witness});
      rep.checks.push_back({"target-multiplicative", "prop:affine-mult", inst, l.pass, l.detail, l.witness});
      if (t.field().p() == 1 && t.field().q() == 1) {
        const UnitBlocks b = unit_blocks(g, t.field().to_matrix());
        result["blocks"] = {{"n_TM", io::matrix_to_json(b.n_TM)},
                            {"upper_right", io::matrix_to_json(b.upper_right)},
                            {"n", io::matrix_to_json(b.n)},
                            {"n_A", io::matrix_to_json(b.n_A)}};
      }
      break;
    }
  }
  rep.result = std::move(result);
  return finish(rep, c);
}

int cmd_bracket(const Config& c) {
  const CheckOptions o = options_from(c);
  const Inputs in = load_inputs(c, 2, 2);
  const Groupoid g(in.groupoid.data);
  for (const auto& f : in.fields)
    if (f.kind != io::FieldKind::mv) throw InputError("bracket: both fields must have kind \"mv\"");
  Report rep{"bracket", in.groupoid.label, o, {}, {}};
  const std::string inst = c.fields[0] + "," + c.fields[1];
  const MultiVectorField p = in.fields[0].multivector(), q = in.fields[1].multivector();
  const Verdict ap = affine_mv_fast(g, p, o), aq = affine_mv_fast(g, q, o);
  rep.checks.push_back({"affine-mv", "def:affine-vf", c.fields[0], ap.pass, ap.detail, ap.witness});
  rep.checks.push_back({"affine-mv", "def:affine-vf", c.fields[1], aq.pass, aq.detail, aq.witness});
  const MultiVectorField br = schouten_bracket(p, q);
  if (ap.pass && aq.pass) {
    const Verdict closed = affine_mv_fast(g, br, o);
    rep.checks.push_back({"bracket-closure", "thm:lie2", inst, closed.pass, closed.detail, closed.witness});
    const Verdict iso = decomposition_iso_check(AffineMV::trusted(g, p), AffineMV::trusted(g, q), o);
    rep.checks.push_back({"decomposition-iso", "eq:schouten-bracket", inst, iso.pass, iso.detail, iso.witness});
  }
  rep.result = {{"bracket", io::field_to_json(br)}};
  return finish(rep, c);
}

int cmd_compose(const Config& c) {
  const CheckOptions o = options_from(c);
  const Inputs in = load_inputs(c, 2, 4);
  const Groupoid g(in.groupoid.data);
  const io::FieldKind kind = in.fields[0].kind;
  for (const auto& f : in.fields)
    if (f.kind != kind) throw InputError("compose: all fields must have the same kind");
  Report rep{"compose", in.groupoid.label, o, {}, {}};
  std::string inst;
  for (const auto& p : c.fields) inst += (inst.empty() ? "" : ",") + p;

  for (std::size_t i = 0; i < in.fields.size(); ++i) {
    const Verdict a = gamma_identity(g, in.fields[i].field, TensorLaw::affine, o);
    rep.checks.push_back({"affine-" + io::to_string(kind), "prop:decomposition", c.fields[i], a.pass, a.detail,
                          a.witness});
  }
  if (!rep.pass()) return finish(rep, c);

  if (in.fields.size() == 4) {
    // Monoidal interchange on four (1,1)-tensors.
    std::vector<Affine11> n;
    for (const auto& f : in.fields) {
      if (f.field.p() != 1 || f.field.q() != 1) throw InputError("compose: four fields must be (1,1)-tensors");
      n.push_back(Affine11(g, f.field.to_matrix(), o));
    }
    try {
      const Verdict v = monoidal_interchange_check(n[0], n[1], n[2], n[3], o);
      rep.checks.push_back({"monoidal-interchange", "eq:eqc", inst, v.pass, v.detail, v.witness});
      const Affine11 left = t11_compose(t11_multiply(n[0], n[2], o), t11_multiply(n[1], n[3], o));
      rep.result = {{"product", io::matrix_to_json(left.matrix())}};
    } catch (const ComposabilityError& e) {
      rep.checks.push_back({"monoidal-interchange", "eq:eqc", inst, false, e.what(), {}});
    }
    return finish(rep, c);
  }
  if (in.fields.size() != 2) throw InputError("compose: expected 2 fields, or 4 (1,1)-tensors");

  const AffineTensor a = AffineTensor::trusted(g, in.fields[0].field);
  const AffineTensor b = AffineTensor::trusted(g, in.fields[1].field);
  const char* ref = kind == io::FieldKind::mv ? "thm:2-group-vf"
                    : kind == io::FieldKind::form ? "thm:2-group-form" : "thm:ver1";
  try {
    const AffineTensor ab = tensor_compose(a, b, o);
    const Verdict v = gamma_identity(g, ab.field(), TensorLaw::affine, o);
    rep.checks.push_back({"composition", ref, inst, v.pass, v.detail, v.witness});
    rep.result = {{"composite", io::field_to_json(kind, ab.field())}};
  } catch (const ComposabilityError& e) {
    rep.checks.push_back({"composition", ref, inst, false, e.what(), {}});
  }
  return finish(rep, c);
}

int cmd_catalog_list(const Config& c) {
  Json out = Json::array();
  for (const auto& e : catalog::entries()) {
    Json fixtures = Json::array();
    for (const auto& f : e.fixtures) {
      fixtures.push_back({{"name", f.name},
                          {"kind", catalog::to_string(f.kind)},
                          {"affine", f.affine},
                          {"multiplicative", f.multiplicative},
                          {"ref", f.ref}});
    }
    out.push_back({{"id", e.id}, {"groupoid", io::groupoid_to_json(e.groupoid)}, {"fixtures", std::move(fixtures)}});
  }
  const std::string text = out.dump(2) + "\n";
  if (c.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(c.out);
    if (!f) throw InputError("--out: cannot write " + c.out);
    f << text;
  }
  return kPass;
}

int cmd_catalog_export(const Config& c) {
  catalog::CatalogEntry e;
  try {
    e = catalog::entry(c.catalog_id);
  } catch (const std::out_of_range&) {
    throw InputError("catalog export: unknown id '" + c.catalog_id + "'");
  }
  Json out;
  if (c.fixture.empty()) {
    out = io::groupoid_to_json(e.groupoid);
  } else {
    const auto it = std::find_if(e.fixtures.begin(), e.fixtures.end(),
                                 [&](const catalog::Fixture& f) { return f.name == c.fixture; });
    if (it == e.fixtures.end()) throw InputError("--fixture: no fixture '" + c.fixture + "' on " + c.catalog_id);
    const io::FieldKind kind = it->kind == catalog::FixtureKind::multivector ? io::FieldKind::mv
                               : it->kind == catalog::FixtureKind::form      ? io::FieldKind::form
                                                                             : io::FieldKind::tensor;
    out = io::field_to_json(kind, it->field);
    out["groupoid"] = "catalog:" + c.catalog_id;
  }
  const std::string text = out.dump(2) + "\n";
  if (c.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(c.out);
    if (!f) throw InputError("--out: cannot write " + c.out);
    f << text;
  }
  return kPass;
}

void add_common(CLI::App* sub, Config& c) {
  sub->add_option("--groupoid", c.groupoid, "catalog:<id> or a groupoid JSON file");
  sub->add_option("--seed", c.seed, "Seed for sampling and generated data (fallback: AFFINOID_SEED, then 1)");
  sub->add_option("--mode", c.mode, "exact or sampled")->capture_default_str();
  sub->add_option("--samples", c.samples, "Sample points per identity in sampled mode")->capture_default_str();
  sub->add_option("--out", c.out, "Write the report here instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Affine multivector fields, forms and tensors on polynomial Lie groupoids"};
  app.require_subcommand(1);
  Config c;

  auto* check = app.add_subcommand("check", "Run a predicate on a field or a named suite on a groupoid");
  add_common(check, c);
  check->add_option("--field", c.fields, "Field JSON file");
  check->add_option("--predicate", c.predicate, "One of: affine-mv, multiplicative-mv, affine-form, "
                                                "multiplicative-form, affine-tensor, multiplicative-tensor");
  check->add_option("--suite", c.suite, "One of: full, fixtures, structure");

  auto* decompose = app.add_subcommand("decompose", "Split an affine field into its multiplicative source/target");
  add_common(decompose, c);
  decompose->add_option("--field", c.fields, "Field JSON file")->required();

  auto* bracket = app.add_subcommand("bracket", "Schouten bracket of two affine multivector fields");
  add_common(bracket, c);
  bracket->add_option("--field", c.fields, "Two field JSON files")->required();

  auto* compose = app.add_subcommand("compose", "Composition in the 2-vector space, or monoidal interchange");
  add_common(compose, c);
  compose->add_option("--field", c.fields, "Two fields, or four (1,1)-tensors")->required();

  auto* cat = app.add_subcommand("catalog", "Built-in groupoids and fixtures");
  cat->require_subcommand(1);
  auto* list = cat->add_subcommand("list", "Every catalog groupoid with its fixtures");
  list->add_option("--out", c.out, "Write here instead of stdout");
  auto* exp = cat->add_subcommand("export", "Groupoid JSON, or one fixture's field JSON");
  exp->add_option("id", c.catalog_id, "Catalog id")->required();
  exp->add_option("--fixture", c.fixture, "Fixture name");
  exp->add_option("--out", c.out, "Write here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kInputError;
  }

  try {
    if (check->parsed()) return cmd_check(c);
    if (decompose->parsed()) return cmd_decompose(c);
    if (bracket->parsed()) return cmd_bracket(c);
    if (compose->parsed()) return cmd_compose(c);
    if (list->parsed()) return cmd_catalog_list(c);
    if (exp->parsed()) return cmd_catalog_export(c);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const ComposabilityError& e) {
    std::cerr << "not composable: " << e.what() << "\n";
    return kFail;
  } catch (const Error& e) {
    // Parse, arity, degree and splitting problems, and groupoid data that
    // fails construction, are all input errors.
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
