#include "affinoid/affine/forms.hpp"

#include <map>

#include "affinoid/errors.hpp"

namespace affinoid {

namespace {

void check_form(const Groupoid& g, const DifferentialForm& w) {
  if (w.generators() != g.dim_G() || w.num_vars() != g.dim_G()) {
    throw ArityError("differential form does not live on the groupoid");
  }
}

/// Block `index` of a map into a product of copies of G.
PolyMap block(const PolyMap& f, std::size_t index, std::size_t size) {
  const auto& c = f.components();
  return PolyMap(f.domain_dim(), std::vector<Poly>(c.begin() + static_cast<std::ptrdiff_t>(index * size),
                                                   c.begin() + static_cast<std::ptrdiff_t>((index + 1) * size)));
}

bool same(const DifferentialForm& a, const DifferentialForm& b, const CheckOptions& options) {
  return compare(a, b, options, "").pass;
}

DifferentialForm zero_like(const DifferentialForm& a) {
  return DifferentialForm(a.generators(), a.num_vars(), a.degree());
}

enum class Residual { multiplicative, affine_source, affine_target };

/// m^* Theta - pr1^* Theta - pr2^* Theta (+ the theta correction).
DifferentialForm residual(const Groupoid& g, const DifferentialForm& w, Residual kind) {
  DifferentialForm r = pullback(g.mult(), w) - pullback(g.first(), w) - pullback(g.second(), w);
  if (kind == Residual::affine_source) r += pullback(compose(g.src(), g.first()), unit_restriction(g, w));
  if (kind == Residual::affine_target) r += pullback(compose(g.tgt(), g.second()), unit_restriction(g, w));
  return r;
}

}  // namespace

DifferentialForm unit_restriction(const Groupoid& g, const DifferentialForm& big_theta) {
  check_form(g, big_theta);
  return pullback(g.unit(), big_theta);
}

Verdict multiplicative_form_identity(const Groupoid& g, const DifferentialForm& w, const CheckOptions& options) {
  check_form(g, w);
  const DifferentialForm r = residual(g, w, Residual::multiplicative);
  return compare(r, zero_like(r), options, "m^*Theta = pr1^*Theta + pr2^*Theta");
}

Verdict affine_form_identity(const Groupoid& g, const DifferentialForm& w, const CheckOptions& options) {
  check_form(g, w);
  const DifferentialForm r = residual(g, w, Residual::affine_source);
  return compare(r, zero_like(r), options, "m^*Theta = pr1^*Theta + pr2^*Theta - pr1^*s^*theta");
}

Verdict affine_form_identity_target(const Groupoid& g, const DifferentialForm& w, const CheckOptions& options) {
  check_form(g, w);
  const DifferentialForm r = residual(g, w, Residual::affine_target);
  return compare(r, zero_like(r), options, "m^*Theta = pr1^*Theta + pr2^*Theta - pr2^*t^*theta");
}

Verdict parallelogram_isotropy(const Groupoid& g, const DifferentialForm& w, const CheckOptions& options) {
  check_form(g, w);
  const PolyMap& par = g.parallelograms();
  const std::size_t n = g.dim_G();
  const DifferentialForm sum = pullback(block(par, 0, n), w) - pullback(block(par, 1, n), w) -
                               pullback(block(par, 2, n), w) + pullback(block(par, 3, n), w);
  return compare(sum, zero_like(sum), options, "parallelograms are isotropic");
}

bool is_multiplicative_form(const Groupoid& g, const DifferentialForm& w, const CheckOptions& options) {
  return multiplicative_form_identity(g, w, options).pass;
}

bool is_affine_form(const Groupoid& g, const DifferentialForm& w, const CheckOptions& options) {
  const bool a = affine_form_identity(g, w, options).pass;
  if (a != affine_form_identity_target(g, w, options).pass) {
    throw StructureError("the two expressions of the affine form condition disagree");
  }
  return a;
}

// ---- AffineForm ----------------------------------------------------------------

AffineForm::AffineForm(const Groupoid* g, DifferentialForm big_theta, DifferentialForm theta)
    : g_(g), field_(std::move(big_theta)), theta_(std::move(theta)) {}

AffineForm::AffineForm(const Groupoid& g, DifferentialForm big_theta, const CheckOptions& options)
    : g_(&g), field_(std::move(big_theta)), theta_(unit_restriction(g, field_)) {
  const Verdict v = affine_form_identity(g, field_, options);
  if (!v.pass) throw StructureError("not an affine form: " + v.detail);
}

AffineForm AffineForm::trusted(const Groupoid& g, DifferentialForm big_theta) {
  DifferentialForm theta = unit_restriction(g, big_theta);
  return AffineForm(&g, std::move(big_theta), std::move(theta));
}

DifferentialForm AffineForm::source() const { return field_ - pullback(g_->tgt(), theta_); }
DifferentialForm AffineForm::target() const { return field_ - pullback(g_->src(), theta_); }

AffineForm operator+(const AffineForm& a, const AffineForm& b) {
  return AffineForm(a.g_, a.field_ + b.field_, a.theta_ + b.theta_);
}
AffineForm operator*(const Rational& c, const AffineForm& a) { return AffineForm(a.g_, c * a.field_, c * a.theta_); }

FormSourceTarget form_source_target(const AffineForm& f) { return {f.source(), f.target()}; }

AffineForm form_compose(const AffineForm& a, const AffineForm& b, const CheckOptions& options) {
  if (&a.groupoid() != &b.groupoid() || a.degree() != b.degree()) {
    throw ComposabilityError("affine forms of different groupoids or degrees");
  }
  if (!same(a.source(), b.target(), options)) throw ComposabilityError("s(Theta) != t(Theta')");
  return AffineForm::trusted(a.groupoid(), a.field() + pullback(a.groupoid().src(), b.theta()));
}

AffineForm form_inverse(const AffineForm& a) {
  const Groupoid& g = a.groupoid();
  return AffineForm::trusted(g, a.field() - pullback(g.src(), a.theta()) - pullback(g.tgt(), a.theta()));
}

AffineForm form_unit(const Groupoid& g, const DifferentialForm& lambda, const CheckOptions& options) {
  const Verdict v = multiplicative_form_identity(g, lambda, options);
  if (!v.pass) throw StructureError("identity arrows sit at multiplicative forms: " + v.detail);
  return AffineForm::trusted(g, lambda);
}

CochainPair phi(const AffineForm& f) { return {f.source(), f.theta()}; }

DifferentialForm phi_inverse(const Groupoid& g, const CochainPair& pair) {
  return pair.multiplicative + pullback(g.tgt(), pair.base);
}

Verdict cochain_iso_check(const Groupoid& g, const std::vector<DifferentialForm>& battery,
                          const CheckOptions& options) {
  Verdict v;
  std::vector<CochainPair> images;
  for (const DifferentialForm& w : battery) {
    const Verdict affine = affine_form_identity(g, w, options);
    if (!affine.pass) return Verdict::fail("battery form is not affine: " + affine.detail, affine.witness);
    const AffineForm f = AffineForm::trusted(g, w);
    const CochainPair p = phi(f);
    v &= multiplicative_form_identity(g, p.multiplicative, options);
    v &= compare(phi_inverse(g, p), w, options, "Phi^{-1} Phi = id");
    const DifferentialForm dw = derham_d(w);
    v &= affine_form_identity(g, dw, options);
    const CochainPair pd = phi(AffineForm::trusted(g, dw));
    v &= compare(derham_d(p.multiplicative), pd.multiplicative, options, "d Phi = Phi d (multiplicative part)");
    v &= compare(derham_d(p.base), pd.base, options, "d Phi = Phi d (base part)");
    images.push_back(p);
  }
  for (std::size_t i = 0; i < images.size(); ++i) {
    const CochainPair& pi = images[i];
    const CochainPair& pj = images[(i + 1) % images.size()];
    if (pi.base.degree() != pj.base.degree()) continue;
    const CochainPair back = phi(AffineForm::trusted(g, phi_inverse(g, {pi.multiplicative, pj.base})));
    v &= compare(back.multiplicative, pi.multiplicative, options, "Phi Phi^{-1} = id (multiplicative part)");
    v &= compare(back.base, pj.base, options, "Phi Phi^{-1} = id (base part)");
  }
  return v;
}

// ---- IM forms ------------------------------------------------------------------

namespace {

DifferentialForm extend(const IMForm& im, const std::vector<DifferentialForm>& values,
                        const MultiVectorField& section, std::size_t degree) {
  if (section.degree() != 1 || section.generators() != im.algebroid.rank ||
      section.num_vars() != im.algebroid.dim_M) {
    throw ArityError("IM forms take sections of A");
  }
  const std::size_t m = im.algebroid.dim_M;
  DifferentialForm out(m, m, degree);
  for (std::size_t a = 0; a < im.algebroid.rank; ++a) {
    const Poly& c = section[Subset{1} << a];
    if (!c.is_zero()) out += c * values[a];
  }
  return out;
}

/// i_v w; contracting a function is a caller error.
DifferentialForm contract(const MultiVectorField& v, const DifferentialForm& w) {
  if (w.degree() == 0) throw DegreeError("contraction of a function");
  return interior_product(v, w);
}

}  // namespace

DifferentialForm IMForm::mu_of(const MultiVectorField& section) const {
  return extend(*this, mu, section, degree - 1);
}

DifferentialForm IMForm::nu_of(const MultiVectorField& section) const { return extend(*this, nu, section, degree); }

Verdict check_im_form(const IMForm& im, const CheckOptions& options) {
  const LieAlgebroidData& alg = im.algebroid;
  const std::size_t r = alg.rank, m = alg.dim_M;
  std::vector<MultiVectorField> sections;
  for (std::size_t a = 0; a < r; ++a) {
    const MultiVectorField e = MultiVectorField::basis(r, Subset{1} << a, Poly::constant(m, 1));
    sections.push_back(e);
    for (std::size_t j = 0; j < m; ++j) sections.push_back(Poly::variable(m, j) * e);
  }
  Verdict v;
  for (const MultiVectorField& x : sections) {
    const MultiVectorField rx = anchor_of(alg, x);
    const DifferentialForm mx = im.mu_of(x), nx = im.nu_of(x);
    for (const MultiVectorField& y : sections) {
      const MultiVectorField ry = anchor_of(alg, y);
      const DifferentialForm my = im.mu_of(y), ny = im.nu_of(y);
      const MultiVectorField xy = algebroid_bracket(alg, x, y);
      if (im.degree >= 2) {
        v &= compare(contract(rx, my), -contract(ry, mx), options, "i_{rho X} mu(Y) = -i_{rho Y} mu(X)");
      }
      v &= compare(im.mu_of(xy), lie_derivative(rx, my) - contract(ry, derham_d(mx)) - contract(ry, nx), options,
                   "mu([X,Y]) = L_{rho X} mu(Y) - i_{rho Y} d mu(X) - i_{rho Y} nu(X)");
      v &= compare(im.nu_of(xy), lie_derivative(rx, ny) - contract(ry, derham_d(nx)), options,
                   "nu([X,Y]) = L_{rho X} nu(Y) - i_{rho Y} d nu(X)");
      if (!v.pass) return v;
    }
  }
  return v;
}

IMExtraction im_form_extract(const AffineForm& f, const CheckOptions& options) {
  if (f.degree() == 0) throw DegreeError("IM forms need degree >= 1");
  const Groupoid& g = f.groupoid();
  const std::size_t n = g.dim_G();
  IMExtraction out;
  out.theta = f.theta();
  IMForm& im = out.im;
  im.algebroid = lie_algebroid(g);
  im.degree = f.degree();
  const DifferentialForm big = f.source();
  const DifferentialForm dbig = derham_d(big);
  for (std::size_t a = 0; a < g.rank(); ++a) {
    MultiVectorField e(n, n, 1);
    for (std::size_t i = 0; i < n; ++i) e[Subset{1} << i] = g.right_frame()(i, a);
    im.mu.push_back(pullback(g.unit(), interior_product(e, big)));
    im.nu.push_back(pullback(g.unit(), interior_product(e, dbig)));
  }
  const Verdict v = check_im_form(im, options);
  if (!v.pass) throw StructureError("extracted data is not an IM form: " + v.detail);
  return out;
}

// ---- solution spaces -------------------------------------------------------------

namespace {

void monomials_up_to(std::size_t n, unsigned d, std::size_t var, Monomial current, std::vector<Monomial>& out) {
  if (var == n) {
    out.push_back(current);
    return;
  }
  for (unsigned e = 0; e + current.degree() <= d; ++e) {
    Monomial next = current;
    next.set(var, e);
    monomials_up_to(n, d, var + 1, next, out);
  }
}

}  // namespace

std::vector<DifferentialForm> form_space(const Groupoid& g, std::size_t k, unsigned max_degree, FormClass kind) {
  const std::size_t n = g.dim_G();
  std::vector<Monomial> monos;
  monomials_up_to(n, max_degree, 0, Monomial(), monos);
  std::vector<DifferentialForm> unknowns;
  for (const Subset set : k_subsets(n, k))
    for (const Monomial& mono : monos) unknowns.push_back(DifferentialForm::basis(n, set, Poly::monomial(n, mono)));

  std::map<std::pair<Subset, Monomial>, std::size_t> rows;
  std::vector<std::vector<std::pair<std::size_t, Rational>>> columns;
  const Residual which = kind == FormClass::affine ? Residual::affine_source : Residual::multiplicative;
  for (const DifferentialForm& u : unknowns) {
    const DifferentialForm r = residual(g, u, which);
    auto& col = columns.emplace_back();
    for (const Subset set : r.index_sets()) {
      for (const auto& term : r[set].terms()) {
        const auto [it, inserted] = rows.try_emplace({set, term.monomial}, rows.size());
        col.emplace_back(it->second, term.coeff);
      }
    }
  }
  QMatrix mat(rows.size(), unknowns.size(), Rational(0));
  for (std::size_t c = 0; c < columns.size(); ++c)
    for (const auto& [row, value] : columns[c]) mat(row, c) = value;

  std::vector<DifferentialForm> basis;
  for (const QVector& kv : kernel_basis(mat)) {
    DifferentialForm w(n, n, k);
    for (std::size_t c = 0; c < kv.size(); ++c)
      if (kv[c] != 0) w += kv[c] * unknowns[c];
    basis.push_back(std::move(w));
  }
  return basis;
}

}  // namespace affinoid
