#include "affinoid/affine/tensors.hpp"

#include "affinoid/catalog/groupoids.hpp"
#include "affinoid/errors.hpp"

namespace affinoid {

namespace {

void check_on_groupoid(const Groupoid& g, const TensorField& f) {
  const std::size_t n = g.dim_G();
  if (f.contra_dim() != n || f.cov_dim() != n || f.num_vars() != n) {
    throw ArityError("tensor does not live on the groupoid");
  }
}

Point column(const QMatrix& m, std::size_t c) { return m.column(c); }

Point matvec(const QMatrix& m, const Point& v) { return m * std::span<const Rational>(v); }

Verdict compare_matrix(const PMatrix& lhs, const PMatrix& rhs, const CheckOptions& options, const std::string& what) {
  if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) return Verdict::fail(what + ": shapes differ");
  std::vector<Poly> a, b;
  for (std::size_t r = 0; r < lhs.rows(); ++r)
    for (std::size_t c = 0; c < lhs.cols(); ++c) {
      a.push_back(lhs(r, c));
      b.push_back(rhs(r, c));
    }
  return compare(a, b, options, what);
}

/// Antisymmetric matrix of a degree-2 field: entry (i,j) is the value on the
/// i-th and j-th basis (co)vectors.
template <Variance V>
PMatrix two_field_matrix(const AlternatingField<V>& w) {
  if (w.degree() != 2) throw DegreeError("expected a field of degree 2");
  const std::size_t n = w.generators();
  PMatrix m(n, n, Poly(w.num_vars()));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Poly& c = w[(Subset{1} << i) | (Subset{1} << j)];
      m(i, j) = c;
      m(j, i) = -c;
    }
  return m;
}

PMatrix at_units(const Groupoid& g, const PMatrix& m) {
  return substitute(m, g.unit().components(), g.dim_M());
}

}  // namespace

// ---- affine functions --------------------------------------------------------

Verdict affine_function_identity(const Groupoid& g, const Poly& f, const CheckOptions& options) {
  if (f.num_vars() != g.dim_G()) throw ArityError("function does not live on the groupoid");
  const PolyMap base_of_first = compose(g.unit(), compose(g.src(), g.first()));
  const Poly lhs = g.mult().pull(f);
  const Poly rhs = g.first().pull(f) + g.second().pull(f) - base_of_first.pull(f);
  return compare(lhs, rhs, options, "F(gh) = F(g) + F(h) - F(s(g))");
}

bool is_affine_function(const Groupoid& g, const Poly& f, const CheckOptions& options) {
  return affine_function_identity(g, f, options).pass;
}

bool is_multiplicative_function(const Groupoid& g, const Poly& f, const CheckOptions& options) {
  return is_affine_function(g, f, options) && polys_equal(g.unit().pull(f), Poly(g.dim_M()), options);
}

// ---- Gamma -------------------------------------------------------------------

Rational tensor_eval_on_Gamma(const Groupoid& g, const TensorField& f, const GammaPoint& point) {
  check_on_groupoid(g, f);
  if (point.base.size() != g.dim_G()) throw ArityError("Gamma point has a base of the wrong dimension");
  return f.evaluate(point.base, point.vectors, point.covectors);
}

GammaPoint gamma_source_unit(const Groupoid& g, const GammaPoint& point) {
  const Point base = g.src().evaluate(point.base);
  const QMatrix ds = g.src().jacobian_at(point.base);
  GammaPoint u{g.unit().evaluate(base), {}, {}};
  for (const auto& x : point.vectors) u.vectors.push_back(unit_vector(g, base, matvec(ds, x)));
  for (const auto& xi : point.covectors) {
    u.covectors.push_back(unit_covector(g, base, covector_source(g, point.base, xi)));
  }
  return u;
}

GammaPoint gamma_multiply(const Groupoid& g, const GammaPoint& a, const GammaPoint& b) {
  if (a.vectors.size() != b.vectors.size() || a.covectors.size() != b.covectors.size()) {
    throw ArityError("Gamma points have different slot counts");
  }
  GammaPoint out{g.multiply(a.base, b.base), {}, {}};
  for (std::size_t i = 0; i < a.vectors.size(); ++i) {
    out.vectors.push_back(multiply_vectors(g, a.base, b.base, a.vectors[i], b.vectors[i]));
  }
  for (std::size_t i = 0; i < a.covectors.size(); ++i) {
    out.covectors.push_back(multiply_covectors(g, a.base, b.base, a.covectors[i], b.covectors[i]));
  }
  return out;
}

namespace {

/// Slot data for one basis element of the composable tangent (or cotangent)
/// pairs: the two factors, their product and the source unit.
struct SlotPair {
  Point first, second, product, unit;
};

std::vector<SlotPair> tangent_slots(const Groupoid& g, const Point& p, const Point& at_g, const Point& base) {
  const QMatrix jm = g.mult().jacobian_at(p);
  const QMatrix ds = g.src().jacobian_at(at_g);
  std::vector<SlotPair> out;
  const auto basis = composable_tangent_basis(g, p);
  for (std::size_t c = 0; c < basis.size(); ++c) {
    const auto& [x, y] = basis[c];
    out.push_back({x, y, column(jm, c), unit_vector(g, base, matvec(ds, x))});
  }
  return out;
}

std::vector<SlotPair> covector_slots(const Groupoid& g, const Point& at_g, const Point& at_h, const Point& base) {
  const std::size_t n = g.dim_G(), r = g.rank();
  const QMatrix lf = evaluate(g.left_frame(), at_g);
  const QMatrix rf = evaluate(g.right_frame(), at_h);
  // (xi, eta) composable iff xi(<-e_a) = eta(->e_a) for every a.
  QMatrix m(r, 2 * n, Rational(0));
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t i = 0; i < n; ++i) {
      m(a, i) = lf(i, a);
      m(a, n + i) = -rf(i, a);
    }
  std::vector<SlotPair> out;
  for (const auto& v : kernel_basis(m)) {
    Point xi(v.begin(), v.begin() + n), eta(v.begin() + n, v.end());
    Point zeta = multiply_covectors(g, at_g, at_h, xi, eta);
    Point unit = unit_covector(g, base, covector_source(g, at_g, xi));
    out.push_back({std::move(xi), std::move(eta), std::move(zeta), std::move(unit)});
  }
  return out;
}

std::vector<Point> pick(const std::vector<SlotPair>& slots, const std::vector<std::size_t>& idx, Point SlotPair::*part) {
  std::vector<Point> out;
  for (auto i : idx) out.push_back(slots[i].*part);
  return out;
}

}  // namespace

Verdict gamma_identity(const Groupoid& g, const TensorField& f, TensorLaw law, const CheckOptions& options) {
  check_on_groupoid(g, f);
  const std::size_t p = f.p(), q = f.q();
  if (f.is_zero()) return Verdict::ok();
  RationalSampler sampler(options.seed);
  for (std::size_t sample = 0; sample < options.samples; ++sample) {
    const Point pt = sampler.point(g.dim_P());
    const Point at_g = g.first().evaluate(pt), at_h = g.second().evaluate(pt), at_gh = g.mult().evaluate(pt);
    const Point base = g.src().evaluate(at_g);
    const Point at_unit = g.unit().evaluate(base);
    const auto tangents = tangent_slots(g, pt, at_g, base);
    const auto covectors = p > 0 ? covector_slots(g, at_g, at_h, base) : std::vector<SlotPair>{};
    for (const Subset ts : k_subsets(tangents.size(), q)) {
      const auto ti = subset_elements(ts);
      for (const Subset cs : k_subsets(covectors.size(), p)) {
        const auto ci = subset_elements(cs);
        const Rational lhs =
            f.evaluate(at_gh, pick(tangents, ti, &SlotPair::product), pick(covectors, ci, &SlotPair::product));
        Rational rhs =
            f.evaluate(at_g, pick(tangents, ti, &SlotPair::first), pick(covectors, ci, &SlotPair::first)) +
            f.evaluate(at_h, pick(tangents, ti, &SlotPair::second), pick(covectors, ci, &SlotPair::second));
        if (law == TensorLaw::affine) {
          rhs -= f.evaluate(at_unit, pick(tangents, ti, &SlotPair::unit), pick(covectors, ci, &SlotPair::unit));
        }
        if (lhs != rhs) {
          return Verdict::fail(law == TensorLaw::affine ? "not an affine function on Gamma"
                                                        : "not a multiplicative function on Gamma",
                               pt);
        }
      }
    }
  }
  return Verdict::ok();
}

bool is_affine_tensor(const Groupoid& g, const TensorField& f, const CheckOptions& options) {
  return gamma_identity(g, f, TensorLaw::affine, options).pass;
}

bool is_multiplicative_tensor(const Groupoid& g, const TensorField& f, const CheckOptions& options) {
  return gamma_identity(g, f, TensorLaw::multiplicative, options).pass;
}

// ---- the (p,q) 2-vector space --------------------------------------------------

AffineTensor::AffineTensor(const Groupoid* g, TensorField f, AlgebroidSection core)
    : g_(g), field_(std::move(f)), core_(std::move(core)) {}

AffineTensor::AffineTensor(const Groupoid& g, TensorField f, const CheckOptions& options)
    : g_(&g), field_(std::move(f)), core_(restrict_project(g, field_)) {
  const Verdict v = gamma_identity(g, field_, TensorLaw::affine, options);
  if (!v.pass) throw StructureError("not an affine tensor: " + v.detail);
}

AffineTensor AffineTensor::trusted(const Groupoid& g, TensorField f) {
  check_on_groupoid(g, f);
  AlgebroidSection core = restrict_project(g, f);
  return AffineTensor(&g, std::move(f), std::move(core));
}

TensorField AffineTensor::source() const { return field_ - translate_right(*g_, core_); }
TensorField AffineTensor::target() const { return field_ - translate_left(*g_, core_); }

AffineTensor operator+(const AffineTensor& a, const AffineTensor& b) {
  return AffineTensor(a.g_, a.field_ + b.field_, a.core_ + b.core_);
}

AffineTensor operator*(const Rational& c, const AffineTensor& a) {
  return AffineTensor(a.g_, c * a.field_, c * a.core_);
}

TensorSourceTarget tensor_source_target(const AffineTensor& t) { return {t.source(), t.target()}; }

AffineTensor tensor_compose(const AffineTensor& a, const AffineTensor& b, const CheckOptions& options) {
  const Verdict v = compare(a.source(), b.target(), options, "s(F1) = t(F2)");
  if (!v.pass) throw ComposabilityError("tensors are not composable: " + v.detail + " does not hold");
  return AffineTensor::trusted(a.groupoid(), a.field() + translate_left(a.groupoid(), b.core()));
}

AffineTensor tensor_inverse(const AffineTensor& t) {
  const Groupoid& g = t.groupoid();
  return AffineTensor::trusted(g, t.field() - translate_right(g, t.core()) - translate_left(g, t.core()));
}

AffineTensor tensor_unit(const Groupoid& g, const TensorField& lambda, const CheckOptions& options) {
  const Verdict v = gamma_identity(g, lambda, TensorLaw::multiplicative, options);
  if (!v.pass) throw StructureError("identity arrows sit at multiplicative tensors: " + v.detail);
  return AffineTensor::trusted(g, lambda);
}

TensorField chain_map(const Groupoid& g, const AlgebroidSection& f) {
  return translate_right(g, f) - translate_left(g, f);
}

Verdict fleft_check(const Groupoid& g, const MultiVectorField& u, const DifferentialForm& beta,
                    const CheckOptions& options) {
  const TensorField f = TensorField::product(u, beta);
  Verdict v = compare(translate_left(g, f), TensorField::product(translate_left(g, u), pullback(g.src(), beta)),
                      options, "<-(u x beta) = <-u x s^* beta");
  v &= compare(translate_right(g, f), TensorField::product(translate_right(g, u), pullback(g.tgt(), beta)), options,
               "->(u x beta) = ->u x t^* beta");
  return v;
}

// ---- (1,1)-tensors -------------------------------------------------------------

AlgebroidSection section_from_matrix(const Groupoid& g, const PMatrix& n) {
  if (n.rows() != g.rank() || n.cols() != g.dim_M()) throw ArityError("section matrix must be rank x dim_M");
  AlgebroidSection s = make_section(g, 1, 1);
  for (std::size_t a = 0; a < n.rows(); ++a)
    for (std::size_t j = 0; j < n.cols(); ++j) s.at(Subset{1} << a, Subset{1} << j) = n(a, j);
  return s;
}

PMatrix section_matrix(const AlgebroidSection& n) { return n.to_matrix(); }

UnitBlocks unit_blocks(const Groupoid& g, const PMatrix& big_n) {
  const std::size_t m = g.dim_M(), r = g.rank();
  const PMatrix b = g.splitting_inverse() * at_units(g, big_n) * g.splitting();
  return {b.block(0, 0, m, m), b.block(0, m, m, r), b.block(m, 0, r, m), b.block(m, m, r, r)};
}

Affine11::Affine11(AffineTensor t, PMatrix big_n, UnitBlocks blocks)
    : tensor_(std::move(t)), matrix_(std::move(big_n)), blocks_(std::move(blocks)) {}

Affine11::Affine11(const Groupoid& g, PMatrix big_n, const CheckOptions& options)
    : tensor_(g, TensorField::from_matrix(big_n), options), matrix_(std::move(big_n)), blocks_(unit_blocks(g, matrix_)) {
  if (!blocks_.upper_right.is_zero()) throw StructureError("N|_M maps A into TM");
}

Affine11 Affine11::trusted(const Groupoid& g, PMatrix big_n) {
  AffineTensor t = AffineTensor::trusted(g, TensorField::from_matrix(big_n));
  UnitBlocks blocks = unit_blocks(g, big_n);
  return Affine11(std::move(t), std::move(big_n), std::move(blocks));
}

Affine11 Affine11::identity(const Groupoid& g) { return trusted(g, PMatrix::identity(g.dim_G(), Poly(g.dim_G()))); }

PMatrix Affine11::source() const { return tensor_.source().to_matrix(); }
PMatrix Affine11::target() const { return tensor_.target().to_matrix(); }

Affine11 t11_compose(const Affine11& a, const Affine11& b) {
  if (&a.groupoid() != &b.groupoid()) throw ArityError("(1,1)-tensors on different groupoids");
  return Affine11::trusted(a.groupoid(), a.matrix() * b.matrix());
}

Affine11 t11_multiply(const Affine11& a, const Affine11& b, const CheckOptions& options) {
  const AffineTensor c = tensor_compose(a.tensor(), b.tensor(), options);
  return Affine11::trusted(a.groupoid(), c.field().to_matrix());
}

Verdict hor1_check(const Affine11& a, const Affine11& b, const CheckOptions& options) {
  const Groupoid& g = a.groupoid();
  const Affine11 c = t11_compose(a, b);
  Verdict v = compare_matrix(c.source(), a.source() * b.source(), options, "(N N')_r = N_r N'_r");
  v &= compare_matrix(c.target(), a.target() * b.target(), options, "(N N')_l = N_l N'_l");
  const UnitBlocks& x = a.blocks();
  const UnitBlocks& y = b.blocks();
  const PMatrix rho = lie_algebroid(g).anchor;
  // n_A is the A block of the multiplicative part N_r, which differs from the
  // A block of N|_M by n rho.
  const PMatrix shadow_a = unit_blocks(g, a.source()).n_A;
  v &= compare_matrix(c.blocks().n, shadow_a * y.n + x.n * y.n_TM + x.n * rho * y.n, options,
                      "n(N N') = n_A n' + n n'_TM + n rho n' with n_A from N_r");
  v &= compare_matrix(c.blocks().n, x.n_A * y.n + x.n * y.n_TM, options,
                      "n(N N') = n_A n' + n n'_TM with the blocks of N|_M");
  if (!c.blocks().upper_right.is_zero()) v &= Verdict::fail("N N' maps A into TM at the units");
  v &= gamma_identity(g, c.tensor().field(), TensorLaw::affine, options);
  return v;
}

Verdict monoidal_interchange_check(const Affine11& n1, const Affine11& n2, const Affine11& n3, const Affine11& n4,
                                   const CheckOptions& options) {
  const Groupoid& g = n1.groupoid();
  const PMatrix lhs = t11_compose(t11_multiply(n1, n3, options), t11_multiply(n2, n4, options)).matrix();
  Verdict v;
  try {
    const Affine11 rhs = t11_multiply(t11_compose(n1, n2), t11_compose(n3, n4), options);
    v &= compare_matrix(lhs, rhs.matrix(), options, "(N1 * N3)(N2 * N4) = (N1 N2) * (N3 N4)");
  } catch (const ComposabilityError&) {
    v &= Verdict::fail("N1 N2 and N3 N4 are not composable");
  }
  const Affine11 id = Affine11::identity(g);
  if (!id.blocks().n.is_zero()) v &= Verdict::fail("the identity is not multiplicative");
  v &= compare_matrix(t11_compose(id, n1).matrix(), n1.matrix(), options, "I N = N");
  v &= compare_matrix(t11_compose(n1, id).matrix(), n1.matrix(), options, "N I = N");
  // Units at x = (N1)_r and y = (N2)_r: their composite is again a unit.
  const Affine11 ux = Affine11::trusted(g, n1.source());
  const Affine11 uy = Affine11::trusted(g, n2.source());
  const Affine11 uxy = t11_compose(ux, uy);
  v &= compare_matrix(uxy.source(), uxy.matrix(), options, "1_x 1_y = 1_{xy} (source)");
  v &= compare_matrix(uxy.target(), uxy.matrix(), options, "1_x 1_y = 1_{xy} (target)");
  return v;
}

PMatrix pi_theta_matrix(const MultiVectorField& pi, const DifferentialForm& theta) {
  // (Pi Theta X)^k = sum_{i,j} X_i Theta_{ij} Pi^{jk}; both transposes cancel.
  return two_field_matrix(pi) * two_field_matrix(theta);
}

PiThetaReport pi_compose_theta(const AffineMV& p, const AffineForm& t, const CheckOptions& options) {
  if (&p.groupoid() != &t.groupoid()) throw ArityError("fields on different groupoids");
  if (p.degree() != 2 || t.degree() != 2) throw DegreeError("Pi o Theta needs a bivector and a 2-form");
  const Groupoid& g = p.groupoid();
  const std::size_t m = g.dim_M(), r = g.rank();
  PiThetaReport rep{Affine11::trusted(g, pi_theta_matrix(p.field(), t.field())), {}, {}, {}};

  const PMatrix& s = g.splitting();
  const PMatrix sinv = g.splitting_inverse();
  const PMatrix pi_split = sinv * at_units(g, two_field_matrix(p.field())) * sinv.transpose();
  const PMatrix theta_split = s.transpose() * at_units(g, two_field_matrix(t.field())) * s;
  const PMatrix theta_r_split = s.transpose() * at_units(g, two_field_matrix(t.source())) * s;
  const PMatrix pi_a_star = pi_split.block(m, 0, r, m);
  const PMatrix pi = pi_split.block(m, m, r, r);
  const PMatrix theta = theta_split.block(0, 0, m, m);
  const PMatrix theta_tm = theta_r_split.block(m, 0, r, m);
  const PMatrix rho = lie_algebroid(g).anchor;
  rep.component = compare_matrix(rep.product.blocks().n,
                                 pi_a_star * theta + pi * theta_tm + pi * rho.transpose() * theta, options,
                                 "n(Pi Theta) = pi_A* theta + pi theta_TM + pi rho^* theta");

  rep.translations = compare_matrix(rep.product.source(), pi_theta_matrix(p.source(), t.source()), options,
                                    "(Pi Theta)_r = Pi_r Theta_r");
  rep.translations &= compare_matrix(rep.product.target(), pi_theta_matrix(p.target(), t.target()), options,
                                     "(Pi Theta)_l = Pi_l Theta_l");

  rep.affine = gamma_identity(g, rep.product.tensor().field(), TensorLaw::affine, options);
  if (!rep.product.blocks().upper_right.is_zero()) rep.affine &= Verdict::fail("Pi Theta maps A into TM");
  return rep;
}

// ---- groups and Pair x group ---------------------------------------------------

PMatrix adjoint_matrix(const Groupoid& group) {
  if (group.dim_M() != 0) throw StructureError("Ad is defined here for groups only");
  const std::size_t n = group.dim_G();
  const PolyMap inv_g = compose(group.inv(), PolyMap::projection(2 * n, 0, n));
  const PolyMap conj = compose(group.product(), group.product().concat(inv_g));
  const PMatrix j = conj.jacobian().block(0, n, n, n);
  const Point e = group.unit().evaluate(Point{});
  std::vector<Poly> values;
  for (std::size_t i = 0; i < n; ++i) values.push_back(Poly::variable(n, i));
  for (const auto& c : e) values.push_back(Poly::constant(n, c));
  return substitute(j, values, n);
}

bool ad_equivariant(const Groupoid& group, const PMatrix& l) {
  const PMatrix ad = adjoint_matrix(group);
  return ad * l == l * ad;
}

PMatrix right_extension(const Groupoid& group, const QMatrix& l) {
  const PMatrix& rf = group.right_frame();
  return rf * to_poly_matrix(l, group.dim_G()) * unimodular_inverse(rf);
}

namespace {

struct NamedMatrix {
  std::string label;
  QMatrix l;
};

std::vector<NamedMatrix> constant_family(std::size_t n) {
  std::vector<NamedMatrix> out;
  out.push_back({"identity", QMatrix::identity(n, Rational(0))});
  out.push_back({"zero", QMatrix(n, n, Rational(0))});
  QMatrix swap = QMatrix::identity(n, Rational(0));
  if (n > 1) {
    swap(0, 0) = swap(n - 1, n - 1) = 0;
    swap(0, n - 1) = swap(n - 1, 0) = 1;
    out.push_back({"swap e1 and e" + std::to_string(n), swap});
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      QMatrix e(n, n, Rational(0));
      e(i, j) = 1;
      out.push_back({"E" + std::to_string(i + 1) + std::to_string(j + 1), e});
    }
  return out;
}

PMatrix embed_matrix(const PMatrix& m, std::size_t vars, std::size_t offset) {
  PMatrix out(m.rows(), m.cols(), Poly(vars));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, c).embed(vars, offset);
  return out;
}

void record(GroupCasesReport& rep, const Groupoid& g, std::string label, const PMatrix& big_n, bool expect_affine,
            bool expect_multiplicative, const CheckOptions& options) {
  const TensorField f = TensorField::from_matrix(big_n);
  GroupCase c{std::move(label), expect_affine, expect_multiplicative, is_affine_tensor(g, f, options),
              is_multiplicative_tensor(g, f, options)};
  if (c.affine != c.expect_affine || c.multiplicative != c.expect_multiplicative) {
    rep.verdict &= Verdict::fail("group case '" + c.label + "' has an unexpected verdict");
  }
  rep.cases.push_back(std::move(c));
}

}  // namespace

GroupCasesReport group_cases_check(const GroupoidData& group_data, std::size_t pair_dim, const CheckOptions& options) {
  const Groupoid group(group_data);
  if (group.dim_M() != 0) throw StructureError("group_cases_check expects a group");
  const std::size_t h = group.dim_G();
  const auto family = constant_family(h);
  GroupCasesReport rep;

  if (pair_dim == 0) {
    for (const auto& [label, l] : family) {
      const bool eq = ad_equivariant(group, to_poly_matrix(l, h));
      record(rep, group, label, right_extension(group, l), eq, eq, options);
    }
    return rep;
  }

  const Groupoid g(catalog::make_product(catalog::make_pair(pair_dim), group_data));
  const std::size_t n = pair_dim, dim = g.dim_G();
  // A(z) = I + z_1 E_{1n}, B(z) = 2 I + diag(z) as bundle maps of TM.
  auto a_of = [&](std::size_t offset) {
    PMatrix m = PMatrix::identity(n, Poly(dim));
    m(0, n - 1) += Poly::variable(dim, offset);
    return m;
  };
  auto b_of = [&](std::size_t offset) {
    PMatrix m(n, n, Poly(dim));
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Poly::constant(dim, 2) + Poly::variable(dim, offset + i);
    return m;
  };
  auto block = [&](const PMatrix& n1, const PMatrix& n2, const QMatrix& l) {
    PMatrix big(dim, dim, Poly(dim));
    big.set_block(0, 0, n1);
    big.set_block(n, n, n2);
    big.set_block(2 * n, 2 * n, embed_matrix(right_extension(group, l), dim, 2 * n));
    return big;
  };
  const PMatrix zero(n, n, Poly(dim));

  const NamedMatrix* equivariant = &family[0];
  const NamedMatrix* other = nullptr;
  for (const auto& nm : family) {
    const bool eq = ad_equivariant(group, to_poly_matrix(nm.l, h));
    if (eq && nm.label != "identity" && nm.label != "zero" && equivariant == &family[0]) equivariant = &nm;
    if (!eq && other == nullptr) other = &nm;
  }

  record(rep, g, "N1 = N2, L = identity", block(a_of(0), a_of(n), family[0].l), true, true, options);
  record(rep, g, "N1 != N2, L = " + equivariant->label, block(a_of(0), b_of(n), equivariant->l), true, false,
         options);
  record(rep, g, "N1 = 0, L = zero", block(zero, b_of(n), family[1].l), true, false, options);
  if (other != nullptr) {
    record(rep, g, "N1 = N2, L = " + other->label, block(a_of(0), a_of(n), other->l), false, false, options);
  }
  return rep;
}

}  // namespace affinoid
