#include "affinoid/affine/multivector.hpp"

#include "affinoid/errors.hpp"

namespace affinoid {

namespace {

void check_field(const Groupoid& g, const MultiVectorField& pi) {
  if (pi.generators() != g.dim_G() || pi.num_vars() != g.dim_G()) {
    throw ArityError("multivector field does not live on the groupoid");
  }
  if (pi.degree() == 0) throw DegreeError("affine multivector checks need degree >= 1; use the function checks");
}

MultiVectorField frame_section(const Groupoid& g, std::size_t a) {
  return MultiVectorField::basis(g.rank(), Subset{1} << a, Poly::constant(g.dim_M(), 1));
}

bool same(const MultiVectorField& a, const MultiVectorField& b, const CheckOptions& options) {
  return compare(a, b, options, "").pass;
}

MultiVectorField zero_like(const MultiVectorField& a) {
  return MultiVectorField(a.generators(), a.num_vars(), a.degree());
}

}  // namespace

Verdict affine_mv_fast(const Groupoid& g, const MultiVectorField& pi, const CheckOptions& options) {
  check_field(g, pi);
  Verdict v;
  for (std::size_t a = 0; a < g.rank() && v.pass; ++a) {
    const MultiVectorField w = schouten_bracket(pi, translate_right(g, frame_section(g, a)));
    v &= right_invariant(g, w, options);
    if (!v.pass) v.detail = "[Pi, ->e" + std::to_string(a + 1) + "] is not right-invariant";
  }
  const std::size_t n = g.dim_G();
  for (std::size_t j = 0; j < g.dim_M() && v.pass; ++j) {
    const DifferentialForm dt = derham_d(DifferentialForm::function(n, g.tgt()[j]));
    v &= right_invariant(g, interior_product(dt, pi), options);
    if (!v.pass) v.detail = "i_{t^*dx" + std::to_string(j + 1) + "} Pi is not right-invariant";
  }
  return v;
}

Verdict multiplicative_mv_fast(const Groupoid& g, const MultiVectorField& pi, const CheckOptions& options) {
  Verdict v = affine_mv_fast(g, pi, options);
  if (!v.pass) return v;
  const MultiVectorField core = restrict_project(g, pi);
  v &= compare(core, zero_like(core), options, "pr_{wedge^k A} Pi|_M vanishes");
  return v;
}

DualVerdict check_affine_mv(const Groupoid& g, const MultiVectorField& pi, const CheckOptions& options) {
  return {affine_mv_fast(g, pi, options), coisotropy_oracle(g, pi, OracleShape::parallelograms, options)};
}

DualVerdict check_multiplicative_mv(const Groupoid& g, const MultiVectorField& pi, const CheckOptions& options) {
  return {multiplicative_mv_fast(g, pi, options), coisotropy_oracle(g, pi, OracleShape::triangles, options)};
}

namespace {

bool decide(const DualVerdict& d, const char* what) {
  if (!d.agree()) throw StructureError(std::string(what) + ": fast path and coisotropy oracle disagree");
  return d.value();
}

}  // namespace

bool is_affine_mv(const Groupoid& g, const MultiVectorField& pi, const CheckOptions& options) {
  return decide(check_affine_mv(g, pi, options), "is_affine_mv");
}

bool is_multiplicative_mv(const Groupoid& g, const MultiVectorField& pi, const CheckOptions& options) {
  return decide(check_multiplicative_mv(g, pi, options), "is_multiplicative_mv");
}

// ---- AffineMV -----------------------------------------------------------------

AffineMV::AffineMV(const Groupoid* g, MultiVectorField pi, MultiVectorField core)
    : g_(g), field_(std::move(pi)), core_(std::move(core)) {}

AffineMV::AffineMV(const Groupoid& g, MultiVectorField pi, const CheckOptions& options)
    : g_(&g), field_(std::move(pi)), core_(restrict_project(g, field_)) {
  const Verdict v = affine_mv_fast(g, field_, options);
  if (!v.pass) throw StructureError("not an affine multivector field: " + v.detail);
}

AffineMV AffineMV::trusted(const Groupoid& g, MultiVectorField pi) {
  check_field(g, pi);
  MultiVectorField core = restrict_project(g, pi);
  return AffineMV(&g, std::move(pi), std::move(core));
}

MultiVectorField AffineMV::source() const { return field_ - translate_right(*g_, core_); }
MultiVectorField AffineMV::target() const { return field_ - translate_left(*g_, core_); }

AffineMV operator+(const AffineMV& a, const AffineMV& b) {
  return AffineMV(a.g_, a.field_ + b.field_, a.core_ + b.core_);
}
AffineMV operator-(const AffineMV& a, const AffineMV& b) {
  return AffineMV(a.g_, a.field_ - b.field_, a.core_ - b.core_);
}
AffineMV operator*(const Rational& c, const AffineMV& a) { return AffineMV(a.g_, c * a.field_, c * a.core_); }

SourceTarget mv_source_target(const AffineMV& p) { return {p.source(), p.target()}; }

AffineMV mv_compose(const AffineMV& p, const AffineMV& q, const CheckOptions& options) {
  if (&p.groupoid() != &q.groupoid() || p.degree() != q.degree()) {
    throw ComposabilityError("affine fields of different groupoids or degrees");
  }
  if (!same(p.source(), q.target(), options)) throw ComposabilityError("s(P) != t(Q)");
  return AffineMV::trusted(p.groupoid(), p.field() + translate_left(p.groupoid(), q.core()));
}

AffineMV mv_inverse(const AffineMV& p) {
  const Groupoid& g = p.groupoid();
  return AffineMV::trusted(g, p.field() - translate_right(g, p.core()) - translate_left(g, p.core()));
}

AffineMV mv_unit(const Groupoid& g, const MultiVectorField& gamma, const CheckOptions& options) {
  const Verdict v = multiplicative_mv_fast(g, gamma, options);
  if (!v.pass) throw StructureError("identity arrows sit at multiplicative fields: " + v.detail);
  return AffineMV::trusted(g, gamma);
}

Verdict lie2_functoriality_check(const AffineMV& p1, const AffineMV& p1p, const AffineMV& p2, const AffineMV& p2p,
                                 const CheckOptions& options) {
  const AffineMV c1 = mv_compose(p1, p1p, options);
  const AffineMV c2 = mv_compose(p2, p2p, options);
  const Groupoid& g = p1.groupoid();
  const MultiVectorField lhs = schouten_bracket(c1.field(), c2.field());
  const AffineMV b = AffineMV::trusted(g, schouten_bracket(p1.field(), p2.field()));
  const AffineMV bp = AffineMV::trusted(g, schouten_bracket(p1p.field(), p2p.field()));
  try {
    return compare(lhs, mv_compose(b, bp, options).field(), options, "bracket is a functor");
  } catch (const ComposabilityError&) {
    return Verdict::fail("brackets of composable pairs are not composable");
  }
}

// ---- k-differentials ---------------------------------------------------------

MultiVectorField KDifferential::apply(const Poly& f) const {
  MultiVectorField out(algebroid.rank, algebroid.dim_M, degree - 1);
  for (std::size_t j = 0; j < algebroid.dim_M; ++j) {
    const Poly df = f.derivative(j);
    if (!df.is_zero()) out += df * delta0[j];
  }
  return out;
}

namespace {

/// delta(e_{i1} ^ ... ^ e_{il}) for a derivation of degree k-1.
MultiVectorField apply_to_frame(const KDifferential& d, Subset set) {
  const std::size_t r = d.algebroid.rank, m = d.algebroid.dim_M;
  if (set == 0) return MultiVectorField(r, m, d.degree - 1);
  const Subset low = set & (~set + 1);
  const Subset rest = set & ~low;
  std::size_t a = 0;
  while ((Subset{1} << a) != low) ++a;
  const MultiVectorField x = MultiVectorField::basis(r, low, Poly::constant(m, 1));
  const MultiVectorField y = MultiVectorField::basis(r, rest, Poly::constant(m, 1));
  MultiVectorField out = wedge(d.delta1[a], y);
  const MultiVectorField tail = wedge(x, apply_to_frame(d, rest));
  if ((d.degree - 1) % 2 == 0) out += tail;
  else out -= tail;
  return out;
}

}  // namespace

MultiVectorField KDifferential::apply(const MultiVectorField& section) const {
  if (section.generators() != algebroid.rank || section.num_vars() != algebroid.dim_M) {
    throw ArityError("k-differential applied to a field that is not a section of wedge A");
  }
  MultiVectorField out(algebroid.rank, algebroid.dim_M, degree + section.degree() - 1);
  for (const Subset set : section.index_sets()) {
    const Poly& c = section[set];
    if (c.is_zero()) continue;
    out += wedge(apply(c), MultiVectorField::basis(algebroid.rank, set, Poly::constant(algebroid.dim_M, 1)));
    out += c * apply_to_frame(*this, set);
  }
  return out;
}

MultiVectorField delta_direct(const AffineMV& p, const MultiVectorField& section, const CheckOptions& options) {
  const Groupoid& g = p.groupoid();
  const MultiVectorField w = schouten_bracket(p.field(), translate_right(g, section));
  const Verdict v = right_invariant(g, w, options);
  if (!v.pass) throw StructureError("[Pi, ->u] is not right-invariant; Pi is not affine");
  return restrict_project(g, w);
}

KDifferential k_differential_of(const AffineMV& p, const CheckOptions& options) {
  const Groupoid& g = p.groupoid();
  KDifferential d;
  d.algebroid = lie_algebroid(g);
  d.degree = p.degree();
  for (std::size_t j = 0; j < g.dim_M(); ++j) {
    d.delta0.push_back(delta_direct(p, MultiVectorField::function(g.rank(), Poly::variable(g.dim_M(), j)), options));
  }
  for (std::size_t a = 0; a < g.rank(); ++a) d.delta1.push_back(delta_direct(p, frame_section(g, a), options));
  return d;
}

Verdict check_k_differential(const AffineMV& p, const KDifferential& d, const CheckOptions& options) {
  const Groupoid& g = p.groupoid();
  const std::size_t m = g.dim_M(), r = g.rank();
  Verdict v;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i; j < m; ++j) {
      const Poly xi = Poly::variable(m, i), xj = Poly::variable(m, j);
      const MultiVectorField direct = delta_direct(p, MultiVectorField::function(r, xi * xj), options);
      v &= compare(direct, xj * d.delta0[i] + xi * d.delta0[j], options,
                   "delta0(fg) = delta0(f) g + f delta0(g)");
    }
  }
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t a = 0; a < r; ++a) {
      const Poly xj = Poly::variable(m, j);
      const MultiVectorField e = frame_section(g, a);
      v &= compare(delta_direct(p, xj * e, options), wedge(d.delta0[j], e) + xj * d.delta1[a], options,
                   "delta1(fX) = delta0(f) X + f delta1(X)");
    }
  }
  for (std::size_t a = 0; a < r; ++a) {
    for (std::size_t b = a + 1; b < r; ++b) {
      const MultiVectorField ea = frame_section(g, a), eb = frame_section(g, b);
      const MultiVectorField lhs = d.apply(algebroid_bracket(d.algebroid, ea, eb));
      const MultiVectorField rhs = algebroid_bracket(d.algebroid, d.delta1[a], eb) +
                                   algebroid_bracket(d.algebroid, ea, d.delta1[b]);
      v &= compare(lhs, rhs, options, "delta1[X,Y] = [delta1 X, Y] + [X, delta1 Y]");
    }
  }
  return v;
}

Verdict decomposition_iso_check(const AffineMV& p, const AffineMV& q, const CheckOptions& options) {
  const Groupoid& g = p.groupoid();
  const std::size_t k = p.degree(), l = q.degree();
  const MultiVectorField lhs = restrict_project(g, schouten_bracket(p.field(), q.field()));
  const KDifferential dp = k_differential_of(p, options);
  const KDifferential dq = k_differential_of(q, options);
  MultiVectorField rhs = dp.apply(q.core()) - algebroid_bracket(dp.algebroid, p.core(), q.core());
  if ((k - 1) * (l - 1) % 2 == 0) rhs -= dq.apply(p.core());
  else rhs += dq.apply(p.core());
  return compare(lhs, rhs, options, "pr[Pi,Pi'] = delta_Pi pi' - (-1)^{(k-1)(l-1)} delta_Pi' pi - [pi,pi']");
}

PoissonReport poisson_checks(const AffineMV& p, const CheckOptions& options) {
  if (p.degree() != 2) throw DegreeError("Poisson checks need a bivector field");
  const Groupoid& g = p.groupoid();
  PoissonReport rep;
  const MultiVectorField bracket = schouten_bracket(p.field(), p.field());
  const MultiVectorField zero3 = zero_like(bracket);
  rep.is_poisson = same(bracket, zero3, options);
  const MultiVectorField pr = p.source(), pl = p.target();
  rep.right_poisson = same(schouten_bracket(pr, pr), zero3, options);
  rep.left_poisson = same(schouten_bracket(pl, pl), zero3, options);
  rep.bracket_right_invariant = right_invariant(g, bracket, options).pass;
  rep.bracket_left_invariant = left_invariant(g, bracket, options).pass;
  const KDifferential dr = k_differential_of(AffineMV::trusted(g, pr), options);
  rep.obstruction = Rational(2) * dr.apply(p.core()) + algebroid_bracket(dr.algebroid, p.core(), p.core());
  const AffineMV inv = mv_inverse(p);
  rep.inverse_is_poisson = same(schouten_bracket(inv.field(), inv.field()), zero3, options);

  Verdict& c = rep.consistent;
  if (rep.right_poisson != rep.bracket_right_invariant) {
    c &= Verdict::fail("Pi_r Poisson differs from [Pi,Pi] right-invariant");
  }
  if (rep.left_poisson != rep.bracket_left_invariant) {
    c &= Verdict::fail("Pi_l Poisson differs from [Pi,Pi] left-invariant");
  }
  if (rep.right_poisson && rep.is_poisson != same(rep.obstruction, zero_like(rep.obstruction), options)) {
    c &= Verdict::fail("Pi Poisson differs from 2 delta_{Pi_r} pi + [pi,pi] = 0");
  }
  if (rep.is_poisson && !rep.inverse_is_poisson) c &= Verdict::fail("inverse of an affine Poisson field is not Poisson");
  if (rep.is_poisson && !(rep.right_poisson && rep.left_poisson)) {
    c &= Verdict::fail("affine Poisson field with non-Poisson Pi_r or Pi_l");
  }
  return rep;
}

}  // namespace affinoid
