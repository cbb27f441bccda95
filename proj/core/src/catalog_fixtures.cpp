#include "affinoid/catalog/fixtures.hpp"

#include "affinoid/affine/forms.hpp"
#include "affinoid/affine/tensors.hpp"
#include "affinoid/exterior/calculus.hpp"

namespace affinoid::catalog {

std::string to_string(FixtureKind kind) {
  switch (kind) {
    case FixtureKind::multivector: return "mv";
    case FixtureKind::form: return "form";
    case FixtureKind::tensor: return "tensor";
  }
  return "mv";
}

namespace {

bool is_pair(const std::string& id) { return id.rfind("pair", 0) == 0 && id.find('_') == std::string::npos; }
bool is_abelian(const std::string& id) { return id.rfind("abelian", 0) == 0; }
bool is_pair_group(const std::string& id) { return id.find("_heisenberg") != std::string::npos; }

Poly var(std::size_t n, std::size_t i) { return Poly::variable(n, i); }
Poly cst(std::size_t n, const Rational& c) { return Poly::constant(n, c); }

// Deterministic sections on the base: pi_i = (i+1) + x_{i mod m} and
// gamma_i = 2 + x_{(i+1) mod m} / 2, so pi + gamma never vanishes.
MultiVectorField section_pi(const Groupoid& g, std::size_t k) {
  MultiVectorField s = make_mv_section(g, k);
  const std::size_t m = g.dim_M();
  std::size_t i = 0;
  for (const Subset a : s.index_sets()) {
    s[a] = cst(m, Rational(static_cast<long>(i) + 1));
    if (m > 0) s[a] += var(m, i % m);
    ++i;
  }
  return s;
}

MultiVectorField section_gamma(const Groupoid& g, std::size_t k) {
  MultiVectorField s = make_mv_section(g, k);
  const std::size_t m = g.dim_M();
  std::size_t i = 0;
  for (const Subset a : s.index_sets()) {
    s[a] = cst(m, 2);
    if (m > 0) s[a] += Rational(1, 2) * var(m, (i + 1) % m);
    ++i;
  }
  return s;
}

DifferentialForm base_form(std::size_t m, std::size_t k) {
  DifferentialForm w(m, k);
  std::size_t i = 0;
  for (const Subset a : w.index_sets()) {
    w[a] = cst(m, Rational(static_cast<long>(i) + 1)) + var(m, i % m);
    ++i;
  }
  return w;
}

/// Adds x1 * x_n to the first coefficient.
template <Variance V>
AlternatingField<V> mix(AlternatingField<V> w) {
  const std::size_t n = w.num_vars();
  w[w.index_sets().front()] += var(n, 0) * var(n, n - 1);
  return w;
}

/// Adds x_n^3 to the first coefficient.
MultiVectorField cubic(MultiVectorField w) {
  const std::size_t n = w.num_vars();
  w[w.index_sets().front()] += var(n, n - 1) * var(n, n - 1) * var(n, n - 1);
  return w;
}

/// Linear k-vector field with coefficient x_{i mod n} + 2 x_{(i+1) mod n}.
MultiVectorField linear_field(std::size_t n, std::size_t k) {
  MultiVectorField v(n, k);
  std::size_t i = 0;
  for (const Subset s : v.index_sets()) {
    v[s] = var(n, i % n) + Rational(2) * var(n, (i + 1) % n);
    ++i;
  }
  return v;
}

/// Componentwise field on Pair(R^n): Pi on the x factor and Pi' on the y
/// factor, with Pi_i = 1 + x_{i mod n}^2 and Pi'_i = c * (Pi_i in y) + shift.
/// In translation notation (Pi, Pi') = ->Pi + <-Pi' and <-u = (-1)^k (0, u),
/// so the multiplicative (Pi, -Pi) has c = (-1)^(k+1) here.
MultiVectorField pair_field(std::size_t n, std::size_t k, const Rational& c, const Rational& shift) {
  MultiVectorField v(2 * n, k);
  const auto sets = k_subsets(n, k);
  for (std::size_t i = 0; i < sets.size(); ++i) {
    const Poly px = cst(2 * n, 1) + var(2 * n, i % n) * var(2 * n, i % n);
    const Poly py = cst(2 * n, 1) + var(2 * n, n + i % n) * var(2 * n, n + i % n);
    v[sets[i]] = px;
    v[sets[i] << n] = c * py + cst(2 * n, shift);
  }
  return v;
}

Fixture mv(std::string name, const MultiVectorField& m, bool affine, bool mult, std::string ref) {
  return {std::move(name), FixtureKind::multivector, TensorField::from_multivector(m), affine, mult, std::move(ref)};
}

Fixture form(std::string name, const DifferentialForm& w, bool affine, bool mult, std::string ref) {
  return {std::move(name), FixtureKind::form, TensorField::from_form(w), affine, mult, std::move(ref)};
}

Fixture tensor(std::string name, const PMatrix& n, bool affine, bool mult, std::string ref) {
  return {std::move(name), FixtureKind::tensor, TensorField::from_matrix(n), affine, mult, std::move(ref)};
}

std::string suffix(std::size_t k) { return "-" + std::to_string(k); }

void multivector_fixtures(const std::string& id, const Groupoid& g, std::vector<Fixture>& out) {
  const std::size_t kmax = std::min<std::size_t>(2, g.rank());
  for (std::size_t k = 1; k <= kmax; ++k) {
    const MultiVectorField pi = section_pi(g, k), gamma = section_gamma(g, k);
    const MultiVectorField right = translate_right(g, pi);
    out.push_back(mv("right-translation" + suffix(k), right, true, false, "ex:right-translation-vf"));
    if (is_abelian(id)) {
      const MultiVectorField lin = linear_field(g.dim_G(), k);
      out.push_back(mv("linear" + suffix(k), lin, true, true, "ex:abelian-vf"));
      out.push_back(mv("linear-plus-constant" + suffix(k), lin + right, true, false, "ex:abelian-vf"));
    } else {
      out.push_back(
          mv("right-minus-left" + suffix(k), right - translate_left(g, pi), true, true, "ex:right-translation-vf"));
      out.push_back(mv("right-plus-left" + suffix(k), right + translate_left(g, gamma), true, false, "prop:leftright"));
    }
    if (is_pair(id)) {
      const std::size_t n = g.dim_M();
      if (k <= n) {
        out.push_back(mv("pair-affine" + suffix(k), pair_field(n, k, 3, 1), true, false, "ex:pair-vf"));
        out.push_back(mv("pair-multiplicative" + suffix(k), pair_field(n, k, k % 2 == 1 ? 1 : -1, 0), true, true, "ex:pair-vf"));
      }
    }
    out.push_back(mv("mixed" + suffix(k), mix(right), false, false, "derived"));
    out.push_back(mv("cubic" + suffix(k), cubic(right), false, false, "derived"));
  }
  if (id == "abelian1") {
    out.push_back(mv("x-squared", MultiVectorField::basis(1, 1, var(1, 0) * var(1, 0)), false, false,
                     "ex:abelian-vf"));
  }
}

void form_fixtures(const std::string& id, const Groupoid& g, std::vector<Fixture>& out) {
  const std::size_t m = g.dim_M();
  if (m > 0) {
    for (std::size_t k = 1; k <= std::min<std::size_t>(2, m); ++k) {
      const DifferentialForm theta = base_form(m, k);
      const DifferentialForm s_theta = pullback(g.src(), theta), t_theta = pullback(g.tgt(), theta);
      out.push_back(form("source-pullback" + suffix(k), s_theta, true, false, "ex:pullback-forms"));
      out.push_back(form("target-pullback" + suffix(k), t_theta, true, false, "ex:pullback-forms"));
      out.push_back(form("target-minus-source" + suffix(k), t_theta - s_theta, true, true, "ex:pullback-forms"));
      if (is_pair(id)) {
        // pr1^* alpha + pr2^* beta with pr1 = t and pr2 = s.
        const DifferentialForm beta = Rational(-2) * base_form(m, k) + base_form(m, k).map(
                                                                          [&](const Poly& p) { return p * p; }, m);
        out.push_back(
            form("pair-forms" + suffix(k), t_theta + pullback(g.src(), beta), true, false, "ex:pair-forms"));
      }
      out.push_back(form("mixed-form" + suffix(k), mix(s_theta), false, false, "derived"));
    }
    return;
  }
  // Groups: affine forms are the multiplicative 1-forms.
  const auto basis = form_space(g, 1, 1, FormClass::multiplicative);
  DifferentialForm one(g.dim_G(), 1);
  for (std::size_t i = 0; i < basis.size(); ++i) one += Rational(static_cast<long>(i) + 1) * basis[i];
  out.push_back(form(is_abelian(id) ? "constant-1-form" : "multiplicative-1-form", one, true, true, "ex:group-forms"));
  out.push_back(form("mixed-form-1", mix(one), false, false, "derived"));
  if (g.dim_G() >= 2) {
    const std::size_t n = g.dim_G();
    out.push_back(form("constant-2-form", DifferentialForm::basis(n, 0b11, cst(n, 1)), false, false,
                       "ex:group-forms"));
  }
}

PMatrix diag_blocks(std::size_t dim, const std::vector<std::pair<std::size_t, PMatrix>>& blocks) {
  PMatrix big(dim, dim, Poly(dim));
  for (const auto& [at, b] : blocks) big.set_block(at, at, b);
  return big;
}

PMatrix embed_matrix(const PMatrix& m, std::size_t vars, std::size_t offset) {
  PMatrix out(m.rows(), m.cols(), Poly(vars));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, c).embed(vars, offset);
  return out;
}

/// The first Ad-equivariant L other than identity and zero, and the first
/// non-equivariant one (empty when every L is equivariant).
std::pair<QMatrix, QMatrix> group_maps(const Groupoid& group) {
  const std::size_t h = group.dim_G();
  QMatrix eq = QMatrix::identity(h, Rational(0)), other;
  bool found_eq = false, found_other = false;
  for (std::size_t i = 0; i < h; ++i)
    for (std::size_t j = 0; j < h; ++j) {
      QMatrix e(h, h, Rational(0));
      e(i, j) = 1;
      const bool is_eq = ad_equivariant(group, to_poly_matrix(e, h));
      if (is_eq && !found_eq) eq = e, found_eq = true;
      if (!is_eq && !found_other) other = e, found_other = true;
    }
  return {eq, other};
}

void tensor_fixtures(const std::string& id, const Groupoid& g, std::vector<Fixture>& out) {
  const std::size_t dim = g.dim_G(), m = g.dim_M(), r = g.rank();
  const PMatrix identity = PMatrix::identity(dim, Poly(dim));
  out.push_back(tensor("identity-11", identity, true, true, "derived"));
  PMatrix mixed = identity;
  mixed(0, 0) += var(dim, 0) * var(dim, dim - 1);
  out.push_back(tensor("mixed-11", mixed, false, false, "derived"));

  if (m > 0) {
    PMatrix n(r, m, Poly(m));
    for (std::size_t a = 0; a < r; ++a)
      for (std::size_t j = 0; j < m; ++j) {
        n(a, j) = cst(m, Rational(static_cast<long>(a + j) + 1));
        if (a == j) n(a, j) += var(m, j);
      }
    const AlgebroidSection sec = section_from_matrix(g, n);
    const PMatrix right = translate_right(g, sec).to_matrix(), left = translate_left(g, sec).to_matrix();
    out.push_back(tensor("right-translation-11", right, true, false, "prop:affine-mult"));
    out.push_back(tensor("chain-map-11", right - left, true, true, "prop:affine-mult"));
  }

  if (is_pair(id)) {
    // (N, N') normal form: diag(A(x), B(y)).
    PMatrix a = PMatrix::identity(m, Poly(dim)), a_y = a, b = a;
    a(0, m - 1) += var(dim, 0);
    a_y(0, m - 1) += var(dim, m);
    for (std::size_t i = 0; i < m; ++i) b(i, i) = cst(dim, 2) + var(dim, m + i);
    out.push_back(tensor("pair-normal-form-11", diag_blocks(dim, {{0, a}, {m, b}}), true, false, "Ex:pair"));
    out.push_back(tensor("pair-multiplicative-11", diag_blocks(dim, {{0, a}, {m, a_y}}), true, true, "Ex:pair"));
  }

  if (m == 0) {
    const auto [eq, other] = group_maps(g);
    out.push_back(tensor("equivariant-11", right_extension(g, eq), true, true, "Ex:group"));
    if (other.rows() > 0) {
      out.push_back(tensor("non-equivariant-11", right_extension(g, other), false, false, "Ex:group"));
    }
  }

  if (is_pair_group(id)) {
    const std::size_t n = m;
    const Groupoid group(make_heisenberg());
    const auto [eq, other] = group_maps(group);
    PMatrix a = PMatrix::identity(n, Poly(dim)), a_y = a, b = a;
    a(0, n - 1) += var(dim, 0);
    a_y(0, n - 1) += var(dim, n);
    for (std::size_t i = 0; i < n; ++i) b(i, i) = cst(dim, 2) + var(dim, n + i);
    const PMatrix l_eq = embed_matrix(right_extension(group, eq), dim, 2 * n);
    const PMatrix l_other = embed_matrix(right_extension(group, other), dim, 2 * n);
    out.push_back(tensor("block-multiplicative-11", diag_blocks(dim, {{0, a}, {n, a_y}, {2 * n, l_eq}}), true, true,
                         "prop:pair-times-group"));
    out.push_back(tensor("block-affine-11", diag_blocks(dim, {{0, a}, {n, b}, {2 * n, l_eq}}), true, false,
                         "prop:pair-times-group"));
    out.push_back(tensor("block-non-equivariant-11", diag_blocks(dim, {{0, a}, {n, a_y}, {2 * n, l_other}}), false,
                         false, "prop:pair-times-group"));
  }
}

}  // namespace

CatalogEntry entry(const std::string& id) {
  CatalogEntry e{id, lookup(id), {}};
  const Groupoid g(e.groupoid);
  multivector_fixtures(id, g, e.fixtures);
  form_fixtures(id, g, e.fixtures);
  tensor_fixtures(id, g, e.fixtures);
  return e;
}

std::vector<CatalogEntry> entries() {
  std::vector<CatalogEntry> out;
  for (const auto& id : groupoid_ids()) out.push_back(entry(id));
  return out;
}

}  // namespace affinoid::catalog
