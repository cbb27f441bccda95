#include "affinoid/suite.hpp"

#include <functional>
#include <stdexcept>

#include "affinoid/affine/forms.hpp"
#include "affinoid/affine/multivector.hpp"
#include "affinoid/affine/tensors.hpp"
#include "affinoid/catalog/groupoids.hpp"
#include "affinoid/errors.hpp"
#include "affinoid/exterior/calculus.hpp"

namespace affinoid {

bool Report::pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

io::Json report_to_json(const Report& report) {
  io::Json j;
  j["schema"] = kReportSchema;
  j["command"] = report.command;
  j["groupoid"] = report.groupoid;
  j["seed"] = report.options.seed;
  j["mode"] = to_string(report.options.mode);
  j["samples"] = report.options.samples;
  j["pass"] = report.pass();
  io::Json checks = io::Json::array();
  for (const auto& c : report.checks) {
    io::Json r;
    r["check"] = c.check;
    r["ref"] = c.ref;
    r["instance"] = c.instance;
    r["mode"] = to_string(report.options.mode);
    r["seed"] = report.options.seed;
    r["pass"] = c.pass;
    r["detail"] = c.detail;
    if (!c.witness.empty()) r["witness"] = io::to_json(c.witness);
    checks.push_back(std::move(r));
  }
  j["checks"] = std::move(checks);
  if (!report.result.is_null()) j["result"] = report.result;
  return j;
}

std::string report_text(const Report& report) { return report_to_json(report).dump(2) + "\n"; }

std::vector<std::string> suite_names() { return {"full", "fixtures", "structure"}; }

std::vector<std::string> predicate_names() {
  return {"affine-mv", "multiplicative-mv", "affine-form", "multiplicative-form", "affine-tensor",
          "multiplicative-tensor"};
}

namespace {

CheckRecord record(std::string check, std::string ref, std::string instance, const Verdict& v) {
  return {std::move(check), std::move(ref), std::move(instance), v.pass, v.detail, v.witness};
}

/// Runs `body`; a library exception becomes a failed verdict naming it.
Verdict guarded(const std::function<Verdict()>& body) {
  try {
    return body();
  } catch (const Error& e) {
    return Verdict::fail(std::string("raised: ") + e.what());
  }
}

Verdict expect(bool got, bool want, const std::string& what) {
  if (got == want) return Verdict::ok();
  return Verdict::fail(what + (want ? " was expected to hold" : " was expected to fail"));
}

/// Seeded data: coefficients are affine-linear in the base coordinates with
/// small rational weights.
class DataSource {
 public:
  explicit DataSource(std::uint64_t seed) : sampler_(seed ^ 0x9e3779b97f4a7c15ULL) {}

  Poly linear(std::size_t vars) {
    Poly p = Poly::constant(vars, sampler_.next());
    for (std::size_t i = 0; i < vars; ++i) p += sampler_.next() * Poly::variable(vars, i);
    return p;
  }

  AlgebroidSection section(const Groupoid& g, std::size_t p, std::size_t q) {
    AlgebroidSection s = make_section(g, p, q);
    for (const Subset a : s.contra_sets())
      for (const Subset b : s.cov_sets()) s.at(a, b) = linear(g.dim_M());
    return s;
  }

  MultiVectorField mv_section(const Groupoid& g, std::size_t k) {
    MultiVectorField s = make_mv_section(g, k);
    for (const Subset a : s.index_sets()) s[a] = linear(g.dim_M());
    return s;
  }

  DifferentialForm base_form(const Groupoid& g, std::size_t k) {
    DifferentialForm w(g.dim_M(), k);
    for (const Subset a : w.index_sets()) w[a] = linear(g.dim_M());
    return w;
  }

  Rational nonzero() {
    Rational r = sampler_.next();
    while (r == 0) r = sampler_.next();
    return r;
  }

 private:
  RationalSampler sampler_;
};

// ---- fixtures --------------------------------------------------------------------

Verdict fixture_verdict(const Groupoid& g, const catalog::Fixture& f, const CheckOptions& o) {
  Verdict v;
  switch (f.kind) {
    case catalog::FixtureKind::multivector: {
      const MultiVectorField pi = f.field.to_multivector();
      const DualVerdict a = check_affine_mv(g, pi, o), m = check_multiplicative_mv(g, pi, o);
      v &= expect(a.fast.pass, f.affine, "affine (bracket characterization)");
      v &= expect(a.oracle.pass, f.affine, "affine (coisotropy oracle)");
      v &= expect(m.fast.pass, f.multiplicative, "multiplicative (bracket characterization)");
      v &= expect(m.oracle.pass, f.multiplicative, "multiplicative (coisotropy oracle)");
      break;
    }
    case catalog::FixtureKind::form: {
      const DifferentialForm w = f.field.to_form();
      v &= expect(affine_form_identity(g, w, o).pass, f.affine, "affine (source form)");
      v &= expect(affine_form_identity_target(g, w, o).pass, f.affine, "affine (target form)");
      v &= expect(multiplicative_form_identity(g, w, o).pass, f.multiplicative, "multiplicative");
      v &= expect(parallelogram_isotropy(g, w, o).pass, f.affine, "parallelogram isotropy");
      break;
    }
    case catalog::FixtureKind::tensor:
      v &= expect(gamma_identity(g, f.field, TensorLaw::affine, o).pass, f.affine, "affine (Gamma identity)");
      v &= expect(gamma_identity(g, f.field, TensorLaw::multiplicative, o).pass, f.multiplicative,
                  "multiplicative (Gamma identity)");
      break;
  }
  return v;
}

/// F affine iff F - ->f is multiplicative, for every fixture; for affine
/// ones also F - <-f.
Verdict decomposition_verdict(const Groupoid& g, const catalog::Fixture& f, const CheckOptions& o) {
  Verdict v;
  switch (f.kind) {
    case catalog::FixtureKind::multivector: {
      const MultiVectorField pi = f.field.to_multivector();
      const MultiVectorField core = restrict_project(g, pi);
      v &= expect(multiplicative_mv_fast(g, pi - translate_right(g, core), o).pass, f.affine, "Pi_r multiplicative");
      if (f.affine) v &= multiplicative_mv_fast(g, pi - translate_left(g, core), o);
      break;
    }
    case catalog::FixtureKind::form: {
      const DifferentialForm w = f.field.to_form();
      const DifferentialForm theta = unit_restriction(g, w);
      v &= expect(multiplicative_form_identity(g, w - pullback(g.tgt(), theta), o).pass, f.affine,
                  "Theta_r multiplicative");
      if (f.affine) v &= multiplicative_form_identity(g, w - pullback(g.src(), theta), o);
      break;
    }
    case catalog::FixtureKind::tensor: {
      const AlgebroidSection core = restrict_project(g, f.field);
      v &= expect(gamma_identity(g, f.field - translate_right(g, core), TensorLaw::multiplicative, o).pass, f.affine,
                  "F_r multiplicative");
      if (f.affine) v &= gamma_identity(g, f.field - translate_left(g, core), TensorLaw::multiplicative, o);
      break;
    }
  }
  return v;
}

const char* decomposition_ref(catalog::FixtureKind kind) {
  switch (kind) {
    case catalog::FixtureKind::multivector: return "prop:leftright";
    case catalog::FixtureKind::form: return "prop:aff-mul-form";
    case catalog::FixtureKind::tensor: return "prop:affine-mult";
  }
  return "";
}

// ---- structure -------------------------------------------------------------------

/// Associativity, units, inverses and linearity of source and target in
/// the 2-vector space of affine (p,q)-tensors.
Verdict two_vector_space_laws(const Groupoid& g, std::size_t p, std::size_t q, DataSource& data,
                              const CheckOptions& o) {
  auto section = [&] { return data.section(g, p, q); };
  const TensorField lambda = chain_map(g, section());
  const AffineTensor a(g, lambda + translate_right(g, section()) + translate_left(g, section()), o);
  const AffineTensor b = AffineTensor::trusted(g, a.source() + translate_left(g, section()));
  const AffineTensor c = AffineTensor::trusted(g, b.source() + translate_left(g, section()));
  Verdict v = gamma_identity(g, b.field(), TensorLaw::affine, o);
  const AffineTensor ab = tensor_compose(a, b, o);
  v &= compare(ab.source(), b.source(), o, "source of a composite");
  v &= compare(ab.target(), a.target(), o, "target of a composite");
  v &= compare(tensor_compose(ab, c, o).field(), tensor_compose(a, tensor_compose(b, c, o), o).field(), o,
               "associativity");
  v &= compare(tensor_compose(tensor_unit(g, a.target(), o), a, o).field(), a.field(), o, "left unit");
  v &= compare(tensor_compose(a, tensor_unit(g, a.source(), o), o).field(), a.field(), o, "right unit");
  const AffineTensor inv = tensor_inverse(a);
  v &= compare(tensor_compose(a, inv, o).field(), a.target(), o, "a * a^-1");
  v &= compare(tensor_compose(inv, a, o).field(), a.source(), o, "a^-1 * a");
  const Rational r = data.nonzero();
  const AffineTensor combo = a + r * b;
  v &= compare(combo.source(), a.source() + r * b.source(), o, "source is linear");
  v &= compare(combo.target(), a.target() + r * b.target(), o, "target is linear");
  if (q == 0) {
    // The multivector operations agree with the tensor ones.
    const AffineMV pa = AffineMV::trusted(g, a.field().to_multivector());
    const AffineMV pb = AffineMV::trusted(g, b.field().to_multivector());
    v &= compare(mv_compose(pa, pb, o).field(), ab.field().to_multivector(), o, "multivector composition");
    v &= compare(mv_inverse(pa).field(), inv.field().to_multivector(), o, "multivector inverse");
  }
  if (p == 0) {
    const AffineForm fa = AffineForm::trusted(g, a.field().to_form());
    const AffineForm fb = AffineForm::trusted(g, b.field().to_form());
    v &= compare(form_compose(fa, fb, o).field(), ab.field().to_form(), o, "form composition");
    v &= compare(form_inverse(fa).field(), inv.field().to_form(), o, "form inverse");
  }
  return v;
}

MultiVectorField random_affine_mv(const Groupoid& g, std::size_t k, DataSource& data) {
  return translate_right(g, data.mv_section(g, k)) + translate_left(g, data.mv_section(g, k));
}

PMatrix random_affine11(const Groupoid& g, DataSource& data) {
  const std::size_t n = g.dim_G();
  return PMatrix::identity(n, Poly(n)) * Poly::constant(n, data.nonzero()) +
         translate_right(g, data.section(g, 1, 1)).to_matrix() + translate_left(g, data.section(g, 1, 1)).to_matrix();
}

bool is_pair_times_group(const std::string& name) { return name.find("_heisenberg") != std::string::npos; }

void structure_checks(const std::string& label, const Groupoid& g, const std::vector<catalog::Fixture>& fixtures,
                      const CheckOptions& o, std::vector<CheckRecord>& out) {
  DataSource data(o.seed);
  const std::size_t rank = g.rank(), dim = g.dim_G(), m = g.dim_M();

  // Shapes of the 2-vector space: vector fields, forms, (1,1)-tensors.
  const std::vector<std::tuple<std::size_t, std::size_t, const char*>> shapes{
      {1, 0, "thm:2-group-vf"}, {2, 0, "thm:2-group-vf"}, {0, 1, "thm:2-group-form"},
      {0, 2, "thm:2-group-form"}, {1, 1, "thm:ver1"}};
  for (const auto& [p, q, ref] : shapes) {
    if (p > dim || q > dim) continue;
    const std::string inst = label + "/(" + std::to_string(p) + "," + std::to_string(q) + ")";
    out.push_back(record("two-vector-space", ref, inst, guarded([&] { return two_vector_space_laws(g, p, q, data, o); })));
  }

  for (std::size_t k = 1; k <= std::min<std::size_t>(2, rank); ++k) {
    const std::string inst = label + "/k=" + std::to_string(k);
    const AffineMV pk = AffineMV::trusted(g, random_affine_mv(g, k, data));
    out.push_back(record("k-differential", "eq:inf", inst,
                         guarded([&] { return check_k_differential(pk, k_differential_of(pk, o), o); })));
    const AffineMV q1 = AffineMV::trusted(g, random_affine_mv(g, 1, data));
    out.push_back(record("decomposition-iso", "eq:schouten-bracket", inst,
                         guarded([&] { return decomposition_iso_check(pk, q1, o); })));
  }

  if (rank >= 1) {
    out.push_back(record("lie2-functoriality", "eq:functor", label, guarded([&] {
                           const AffineMV p1 = AffineMV::trusted(g, random_affine_mv(g, 1, data));
                           const AffineMV p2 = AffineMV::trusted(g, random_affine_mv(g, 1, data));
                           const AffineMV p1p =
                               AffineMV::trusted(g, p1.source() + translate_left(g, data.mv_section(g, 1)));
                           const AffineMV p2p =
                               AffineMV::trusted(g, p2.source() + translate_left(g, data.mv_section(g, 1)));
                           return lie2_functoriality_check(p1, p1p, p2, p2p, o);
                         })));
  }

  if (rank >= 2) {
    out.push_back(record("poisson", "prop:pi-r-poisson", label, guarded([&] {
                           const AffineMV p = AffineMV::trusted(g, translate_right(g, data.mv_section(g, 2)));
                           return poisson_checks(p, o).consistent;
                         })));
  }

  // Forms: the cochain isomorphism on the affine form fixtures (or seeded
  // pullbacks off the catalog) and the IM equations on each of them.
  std::vector<DifferentialForm> battery;
  for (const auto& f : fixtures)
    if (f.kind == catalog::FixtureKind::form && f.affine) battery.push_back(f.field.to_form());
  if (battery.empty() && m > 0) {
    for (std::size_t k = 1; k <= std::min<std::size_t>(2, m); ++k) {
      battery.push_back(pullback(g.src(), data.base_form(g, k)) + pullback(g.tgt(), data.base_form(g, k)));
    }
  }
  if (!battery.empty()) {
    out.push_back(record("cochain-iso", "eq:iso", label, guarded([&] { return cochain_iso_check(g, battery, o); })));
    for (std::size_t i = 0; i < battery.size(); ++i) {
      if (battery[i].degree() == 0) continue;
      out.push_back(record("im-form", "sec:im-forms", label + "/form" + std::to_string(i + 1), guarded([&] {
                             const IMExtraction ex = im_form_extract(AffineForm::trusted(g, battery[i]), o);
                             return check_im_form(ex.im, o);
                           })));
    }
  }

  // (1,1)-tensors.
  out.push_back(record("hor1", "lem:hor1", label, guarded([&] {
                         const Affine11 a(g, random_affine11(g, data), o);
                         const Affine11 b(g, random_affine11(g, data), o);
                         return hor1_check(a, b, o);
                       })));
  out.push_back(record("monoidal-interchange", "eq:eqc", label, guarded([&] {
                         const Affine11 n1(g, random_affine11(g, data), o);
                         const Affine11 n2(g, random_affine11(g, data), o);
                         const Affine11 n3 = Affine11::trusted(
                             g, n1.source() + translate_left(g, data.section(g, 1, 1)).to_matrix());
                         const Affine11 n4 = Affine11::trusted(
                             g, n2.source() + translate_left(g, data.section(g, 1, 1)).to_matrix());
                         return monoidal_interchange_check(n1, n2, n3, n4, o);
                       })));
  if (rank >= 2 && m >= 2) {
    out.push_back(record("pi-theta", "eq:eqe", label, guarded([&] {
                           const AffineMV p = AffineMV::trusted(g, random_affine_mv(g, 2, data));
                           const DifferentialForm theta = data.base_form(g, 2), alpha = data.base_form(g, 2);
                           const AffineForm t = AffineForm::trusted(
                               g, pullback(g.src(), theta) + pullback(g.tgt(), alpha) - pullback(g.src(), alpha));
                           const PiThetaReport rep = pi_compose_theta(p, t, o);
                           Verdict v = rep.component;
                           v &= rep.translations;
                           v &= rep.affine;
                           return v;
                         })));
  }
  if (m == 0 && rank == 3 && !lie_algebroid(g).structure[0][1].is_zero()) {
    out.push_back(record("group-cases", "ex:group", label,
                         guarded([&] { return group_cases_check(g.data(), 0, o).verdict; })));
  }
  if (is_pair_times_group(g.name())) {
    out.push_back(record("group-cases", "prop:pair-times-group", label, guarded([&] {
                           return group_cases_check(catalog::make_heisenberg(), m, o).verdict;
                         })));
  }
}

}  // namespace

Report run_suite(const std::string& suite, const std::string& groupoid_label, const GroupoidData& data,
                 const std::vector<catalog::Fixture>& fixtures, const CheckOptions& options) {
  const bool all = suite == "full";
  if (!all && suite != "fixtures" && suite != "structure") throw std::invalid_argument("unknown suite '" + suite + "'");
  Report rep{"check", groupoid_label, options, {}, {}};
  const Groupoid g(data);

  if (all || suite == "structure") {
    const AxiomReport axioms = validate_axioms(g);
    std::string detail;
    for (const auto& v : axioms.violations) detail += (detail.empty() ? "" : "; ") + v;
    rep.checks.push_back({"groupoid-axioms", "sec:groupoid-structure", groupoid_label, axioms.ok(), detail, {}});
    rep.checks.push_back(record("lie-algebroid", "sec:groupoid-structure", groupoid_label,
                                guarded([&] { return check_algebroid(lie_algebroid(g), options); })));
  }
  if (all || suite == "fixtures") {
    for (const auto& f : fixtures) {
      const std::string inst = groupoid_label + "/" + f.name;
      rep.checks.push_back(record("fixture-" + catalog::to_string(f.kind), f.ref, inst,
                                  guarded([&] { return fixture_verdict(g, f, options); })));
      rep.checks.push_back(record("decomposition", decomposition_ref(f.kind), inst,
                                  guarded([&] { return decomposition_verdict(g, f, options); })));
    }
  }
  if (all || suite == "structure") structure_checks(groupoid_label, g, fixtures, options, rep.checks);
  return rep;
}

std::vector<CheckRecord> run_predicate(const std::string& predicate, const Groupoid& g, const io::FieldInput& field,
                                       const std::string& instance, const CheckOptions& options) {
  const auto need = [&](io::FieldKind kind) {
    if (field.kind != kind) {
      throw ArityError("predicate '" + predicate + "' expects a field of kind " + io::to_string(kind));
    }
  };
  std::vector<CheckRecord> out;
  if (predicate == "affine-mv" || predicate == "multiplicative-mv") {
    need(io::FieldKind::mv);
    const MultiVectorField pi = field.multivector();
    const bool affine = predicate == "affine-mv";
    const DualVerdict d = affine ? check_affine_mv(g, pi, options) : check_multiplicative_mv(g, pi, options);
    const char* ref = affine ? "def:affine-vf" : "def:multiplicative-vf";
    out.push_back(record(predicate, ref, instance, d.fast));
    out.push_back(record(predicate + "/oracle", ref, instance, d.oracle));
  } else if (predicate == "affine-form") {
    need(io::FieldKind::form);
    const DifferentialForm w = field.form();
    out.push_back(record(predicate, "def:aff-form", instance, affine_form_identity(g, w, options)));
    out.push_back(record(predicate + "/oracle", "def:aff-form", instance, parallelogram_isotropy(g, w, options)));
  } else if (predicate == "multiplicative-form") {
    need(io::FieldKind::form);
    out.push_back(record(predicate, "def:multiplicative-form", instance,
                         multiplicative_form_identity(g, field.form(), options)));
  } else if (predicate == "affine-tensor" || predicate == "multiplicative-tensor") {
    const bool affine = predicate == "affine-tensor";
    out.push_back(record(predicate, "def:affine-tensor", instance,
                         gamma_identity(g, field.field, affine ? TensorLaw::affine : TensorLaw::multiplicative,
                                        options)));
  } else {
    throw std::invalid_argument("unknown predicate '" + predicate + "'");
  }
  return out;
}

}  // namespace affinoid
