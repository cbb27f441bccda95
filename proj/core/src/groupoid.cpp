#include "affinoid/groupoid/groupoid.hpp"

namespace affinoid {

namespace {

void require(bool cond, const std::string& what) {
  if (!cond) throw ArityError("groupoid data: " + what);
}

PolyMap sub_map(const PolyMap& m, std::size_t offset, std::size_t count) {
  return compose(PolyMap::projection(m.codomain_dim(), offset, count), m);
}

PMatrix columns(const PMatrix& m, std::size_t c0, std::size_t count) { return m.block(0, c0, m.rows(), count); }

}  // namespace

Groupoid::Groupoid(GroupoidData data) : data_(std::move(data)) {
  const std::size_t n = data_.dim_G, m = data_.dim_M;
  require(m <= n, "dim_M exceeds dim_G");
  require(data_.src.domain_dim() == n && data_.src.codomain_dim() == m, "src must map R^dim_G to R^dim_M");
  require(data_.tgt.domain_dim() == n && data_.tgt.codomain_dim() == m, "tgt must map R^dim_G to R^dim_M");
  require(data_.unit.domain_dim() == m && data_.unit.codomain_dim() == n, "unit must map R^dim_M to R^dim_G");
  require(data_.inv.domain_dim() == n && data_.inv.codomain_dim() == n, "inv must map R^dim_G to itself");
  require(data_.comp_param.codomain_dim() == 2 * n, "comp_param must land in R^(2 dim_G)");
  require(data_.mult.domain_dim() == data_.comp_param.domain_dim() && data_.mult.codomain_dim() == n,
          "mult must map R^dim_P to R^dim_G");
  require(data_.splitting.rows() == n && data_.splitting.cols() == n, "splitting must be dim_G x dim_G");
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      require(data_.splitting(r, c).num_vars() == m, "splitting entries must be polynomials on the base");

  // comp_param(p) = Phi p + c0.
  const std::size_t dp = data_.comp_param.domain_dim();
  QMatrix phi(2 * n, dp, Rational(0));
  QVector c0(2 * n, Rational(0));
  for (std::size_t r = 0; r < 2 * n; ++r) {
    const Poly& comp = data_.comp_param[r];
    if (comp.degree() > 1) throw StructureError("comp_param must be affine-linear");
    c0[r] = comp.constant_term();
    for (std::size_t c = 0; c < dp; ++c) phi(r, c) = comp.coefficient(Monomial::variable(c));
  }
  const auto left = left_inverse(phi);
  if (!left) throw StructureError("comp_param must be injective");
  std::vector<Poly> coords;
  for (std::size_t r = 0; r < dp; ++r) {
    Poly acc(2 * n);
    for (std::size_t c = 0; c < 2 * n; ++c) {
      if ((*left)(r, c) == 0) continue;
      acc += (*left)(r, c) * (Poly::variable(2 * n, c) - Poly::constant(2 * n, c0[c]));
    }
    coords.push_back(std::move(acc));
  }
  pair_coords_ = PolyMap(2 * n, std::move(coords));
  first_ = sub_map(data_.comp_param, 0, n);
  second_ = sub_map(data_.comp_param, n, n);
  product_ = compose(data_.mult, pair_coords_);

  // Composable triples: pairs (p1, p2) with second(p1) = first(p2).
  QMatrix constraint(n, 2 * dp, Rational(0));
  QVector rhs(n, Rational(0));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < dp; ++c) {
      constraint(r, c) = phi(n + r, c);
      constraint(r, dp + c) = -phi(r, c);
    }
    rhs[r] = c0[r] - c0[n + r];
  }
  const LinearSolution sol = linsolve(constraint, rhs);
  if (!sol.consistent()) throw StructureError("comp_param admits no composable triples");
  const std::size_t dq = sol.kernel.size();
  std::vector<Poly> tri;
  for (std::size_t r = 0; r < 2 * dp; ++r) {
    Poly acc = Poly::constant(dq, (*sol.particular)[r]);
    for (std::size_t k = 0; k < dq; ++k) {
      if (sol.kernel[k][r] != 0) acc += sol.kernel[k][r] * Poly::variable(dq, k);
    }
    tri.push_back(std::move(acc));
  }
  triples_ = PolyMap(dq, std::move(tri));

  triangles_ = first_.concat(second_).concat(data_.mult);
  {
    const PolyMap p1 = compose(PolyMap::projection(2 * dp, 0, dp), triples_);
    const PolyMap p2 = compose(PolyMap::projection(2 * dp, dp, dp), triples_);
    const PolyMap b = compose(second_, p1), c = compose(second_, p2);
    const PolyMap ab = compose(data_.mult, p1), bc = compose(data_.mult, p2);
    parallelograms_ = b.concat(ab).concat(bc).concat(compose(product_, ab.concat(c)));
  }

  splitting_inv_ = unimodular_inverse(data_.splitting);

  // Frames. With u = e_t(g) the unit over t(g) and e_s(g) the unit over s(g):
  //   right(g) = D1 product(u, g) S_A(t g)
  //   left(g)  = -D2 product(g, e_s(g)) Dinv(e_s(g)) S_A(s g)
  const PolyMap id = PolyMap::identity(n);
  const PolyMap unit_t = compose(data_.unit, data_.tgt);
  const PolyMap unit_s = compose(data_.unit, data_.src);
  const PMatrix dprod = product_.jacobian();
  const PMatrix d1 = substitute(columns(dprod, 0, n), unit_t.concat(id).components(), n);
  const PMatrix d2 = substitute(columns(dprod, n, n), id.concat(unit_s).components(), n);
  const PMatrix dinv = substitute(data_.inv.jacobian(), unit_s.components(), n);
  const PMatrix sa = splitting_A();
  right_frame_ = d1 * substitute(sa, data_.tgt.components(), n);
  left_frame_ = -(d2 * dinv * substitute(sa, data_.src.components(), n));

  for (std::size_t p = 0; p <= rank(); ++p) {
    right_frame_pow_.push_back(exterior_power(right_frame_, p));
    left_frame_pow_.push_back(exterior_power(left_frame_, p));
  }
  const PMatrix jt = data_.tgt.jacobian(), js = data_.src.jacobian();
  for (std::size_t q = 0; q <= m; ++q) {
    tgt_jac_pow_.push_back(exterior_power(jt, q));
    src_jac_pow_.push_back(exterior_power(js, q));
  }
  for (std::size_t k = 0; k <= n; ++k) {
    splitting_pow_.push_back(exterior_power(data_.splitting, k));
    splitting_inv_pow_.push_back(exterior_power(splitting_inv_, k));
  }
}

PMatrix Groupoid::splitting_A() const { return columns(data_.splitting, dim_M(), rank()); }

bool Groupoid::composable(const std::vector<Rational>& g, const std::vector<Rational>& h) const {
  if (g.size() != dim_G() || h.size() != dim_G()) throw ArityError("arrow has the wrong dimension");
  return data_.src.evaluate(g) == data_.tgt.evaluate(h);
}

std::vector<Rational> Groupoid::multiply(const std::vector<Rational>& g, const std::vector<Rational>& h) const {
  if (!composable(g, h)) throw ComposabilityError("arrows are not composable: s(g) != t(h)");
  std::vector<Rational> gh = g;
  gh.insert(gh.end(), h.begin(), h.end());
  return product_.evaluate(gh);
}

AxiomReport validate_axioms(const Groupoid& g) {
  AxiomReport report;
  const std::size_t n = g.dim_G(), m = g.dim_M();
  auto expect = [&report](bool holds, const char* what) {
    if (!holds) report.violations.emplace_back(what);
  };
  const PolyMap id_g = PolyMap::identity(n), id_m = PolyMap::identity(m);
  expect(compose(g.src(), g.unit()) == id_m, "s o unit = id");
  expect(compose(g.tgt(), g.unit()) == id_m, "t o unit = id");
  expect(compose(g.src(), g.inv()) == g.tgt(), "s o inv = t");
  expect(compose(g.tgt(), g.inv()) == g.src(), "t o inv = s");
  expect(compose(g.src(), g.first()) == compose(g.tgt(), g.second()), "comp_param lands in composable pairs");
  expect(g.dim_P() + m == 2 * n, "dim_P = 2 dim_G - dim_M");
  expect(compose(g.src(), g.mult()) == compose(g.src(), g.second()), "s(gh) = s(h)");
  expect(compose(g.tgt(), g.mult()) == compose(g.tgt(), g.first()), "t(gh) = t(g)");

  const PolyMap unit_t = compose(g.unit(), g.tgt()), unit_s = compose(g.unit(), g.src());
  expect(compose(g.product(), unit_t.concat(id_g)) == id_g, "left unit law");
  expect(compose(g.product(), id_g.concat(unit_s)) == id_g, "right unit law");
  expect(compose(g.product(), id_g.concat(g.inv())) == unit_t, "g inv(g) = unit(t(g))");
  expect(compose(g.product(), g.inv().concat(id_g)) == unit_s, "inv(g) g = unit(s(g))");
  expect(compose(g.mult(), compose(g.pair_coordinates(), g.comp_param())) == g.mult(),
         "product agrees with mult on the parametrized pairs");

  // Associativity on composable triples ((a, b), (b, c)).
  const std::size_t dp = g.dim_P();
  const PolyMap p1 = compose(PolyMap::projection(2 * dp, 0, dp), g.triples());
  const PolyMap p2 = compose(PolyMap::projection(2 * dp, dp, dp), g.triples());
  const PolyMap a = compose(g.first(), p1), c = compose(g.second(), p2);
  const PolyMap ab = compose(g.mult(), p1), bc = compose(g.mult(), p2);
  expect(compose(g.product(), ab.concat(c)) == compose(g.product(), a.concat(bc)), "associativity");

  // Splitting: TM block is the unit embedding, A block lies in ker ds.
  const PMatrix du = g.unit().jacobian();
  expect(g.splitting().block(0, 0, n, m) == du, "splitting TM block equals d(unit)");
  const PMatrix ds_at_units = substitute(g.src().jacobian(), g.unit().components(), m);
  expect((ds_at_units * g.splitting_A()).is_zero(), "splitting A block lies in ker ds");
  return report;
}

}  // namespace affinoid
