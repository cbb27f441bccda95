#include "affinoid/exterior/calculus.hpp"

namespace affinoid {

namespace {

template <Variance V>
void check_compatible(const AlternatingField<V>& a, const AlternatingField<V>& b) {
  if (a.generators() != b.generators() || a.num_vars() != b.num_vars()) {
    throw ArityError("fields live on different spaces");
  }
}

template <Variance V>
void check_coordinate_field(const AlternatingField<V>& a) {
  if (a.generators() != a.num_vars()) {
    throw ArityError("operation needs a field on a coordinate space (generators = variables)");
  }
}

}  // namespace

template <Variance V>
AlternatingField<V> wedge(const AlternatingField<V>& a, const AlternatingField<V>& b) {
  check_compatible(a, b);
  AlternatingField<V> out(a.generators(), a.num_vars(), a.degree() + b.degree());
  const auto is = a.index_sets();
  const auto js = b.index_sets();
  for (std::size_t x = 0; x < is.size(); ++x) {
    const Poly& ca = a.coeffs()[x];
    if (ca.is_zero()) continue;
    for (std::size_t y = 0; y < js.size(); ++y) {
      if (is[x] & js[y]) continue;
      const Poly& cb = b.coeffs()[y];
      if (cb.is_zero()) continue;
      if (shuffle_sign(is[x], js[y]) < 0) out[is[x] | js[y]] -= ca * cb;
      else out[is[x] | js[y]] += ca * cb;
    }
  }
  return out;
}

template MultiVectorField wedge(const MultiVectorField&, const MultiVectorField&);
template DifferentialForm wedge(const DifferentialForm&, const DifferentialForm&);

template <Variance V>
AlternatingField<V> left_derivative(const AlternatingField<V>& a, std::size_t i) {
  if (a.degree() == 0) throw DegreeError("algebraic derivative of a degree-0 field");
  if (i >= a.generators()) throw ArityError("generator index out of range");
  AlternatingField<V> out(a.generators(), a.num_vars(), a.degree() - 1);
  const auto is = a.index_sets();
  for (std::size_t x = 0; x < is.size(); ++x) {
    if (!((is[x] >> i) & 1) || a.coeffs()[x].is_zero()) continue;
    const Subset rest = is[x] & ~(Subset{1} << i);
    if (count_below(is[x], i) % 2) out[rest] -= a.coeffs()[x];
    else out[rest] += a.coeffs()[x];
  }
  return out;
}

template <Variance V>
AlternatingField<V> right_derivative(const AlternatingField<V>& a, std::size_t i) {
  if (a.degree() == 0) throw DegreeError("algebraic derivative of a degree-0 field");
  if (i >= a.generators()) throw ArityError("generator index out of range");
  AlternatingField<V> out(a.generators(), a.num_vars(), a.degree() - 1);
  const auto is = a.index_sets();
  for (std::size_t x = 0; x < is.size(); ++x) {
    if (!((is[x] >> i) & 1) || a.coeffs()[x].is_zero()) continue;
    const Subset rest = is[x] & ~(Subset{1} << i);
    const int above = subset_size(is[x]) - 1 - count_below(is[x], i);
    if (above % 2) out[rest] -= a.coeffs()[x];
    else out[rest] += a.coeffs()[x];
  }
  return out;
}

template <Variance V>
AlternatingField<V> coefficient_derivative(const AlternatingField<V>& a, std::size_t var) {
  return a.map([var](const Poly& p) { return p.derivative(var); }, a.num_vars());
}

template MultiVectorField left_derivative(const MultiVectorField&, std::size_t);
template DifferentialForm left_derivative(const DifferentialForm&, std::size_t);
template MultiVectorField right_derivative(const MultiVectorField&, std::size_t);
template DifferentialForm right_derivative(const DifferentialForm&, std::size_t);
template MultiVectorField coefficient_derivative(const MultiVectorField&, std::size_t);
template DifferentialForm coefficient_derivative(const DifferentialForm&, std::size_t);

MultiVectorField interior_product(const DifferentialForm& xi, const MultiVectorField& p) {
  if (xi.degree() != 1) throw DegreeError("interior product needs a 1-form");
  if (p.degree() == 0) throw DegreeError("interior product into a function");
  if (xi.generators() != p.generators() || xi.num_vars() != p.num_vars()) {
    throw ArityError("interior product of fields on different spaces");
  }
  MultiVectorField out(p.generators(), p.num_vars(), p.degree() - 1);
  for (std::size_t i = 0; i < p.generators(); ++i) {
    const Poly& c = xi[Subset{1} << i];
    if (!c.is_zero()) out += c * left_derivative(p, i);
  }
  return out;
}

DifferentialForm interior_product(const MultiVectorField& x, const DifferentialForm& w) {
  if (x.degree() != 1) throw DegreeError("interior product needs a vector field");
  if (w.degree() == 0) return DifferentialForm(w.generators(), w.num_vars(), 0);
  if (x.generators() != w.generators() || x.num_vars() != w.num_vars()) {
    throw ArityError("interior product of fields on different spaces");
  }
  DifferentialForm out(w.generators(), w.num_vars(), w.degree() - 1);
  for (std::size_t i = 0; i < w.generators(); ++i) {
    const Poly& c = x[Subset{1} << i];
    if (!c.is_zero()) out += c * left_derivative(w, i);
  }
  return out;
}

MultiVectorField schouten_bracket(const MultiVectorField& p, const MultiVectorField& q) {
  check_compatible(p, q);
  check_coordinate_field(p);
  if (p.degree() + q.degree() == 0) throw DegreeError("Schouten bracket of two functions");
  const std::size_t n = p.generators();
  const std::size_t deg = p.degree() + q.degree() - 1;
  MultiVectorField out(n, n, deg);
  for (std::size_t i = 0; i < n; ++i) {
    if (p.degree() > 0) out += wedge(right_derivative(p, i), coefficient_derivative(q, i));
    if (q.degree() > 0) out -= wedge(coefficient_derivative(p, i), left_derivative(q, i));
  }
  return out;
}

DifferentialForm derham_d(const DifferentialForm& w) {
  check_coordinate_field(w);
  const std::size_t n = w.generators();
  DifferentialForm out(n, n, w.degree() + 1);
  for (std::size_t i = 0; i < n; ++i) {
    out += wedge(DifferentialForm::basis(n, Subset{1} << i, Poly::constant(n, 1)), coefficient_derivative(w, i));
  }
  return out;
}

DifferentialForm lie_derivative(const MultiVectorField& x, const DifferentialForm& w) {
  DifferentialForm out = interior_product(x, derham_d(w));
  if (w.degree() > 0) out += derham_d(interior_product(x, w));
  return out;
}

DifferentialForm pull(const PMatrix& s, const DifferentialForm& w) {
  if (s.rows() != w.generators()) throw ArityError("covariant transport: matrix rows must match generators");
  const std::size_t k = w.degree();
  DifferentialForm out(s.cols(), w.num_vars(), k);
  const PMatrix e = exterior_power(s, k);
  const auto targets = k_subsets(s.cols(), k);
  for (std::size_t a = 0; a < e.rows(); ++a) {
    const Poly& c = w.coeffs()[a];
    if (c.is_zero()) continue;
    for (std::size_t b = 0; b < e.cols(); ++b) {
      if (!e(a, b).is_zero()) out[targets[b]] += e(a, b) * c;
    }
  }
  return out;
}

MultiVectorField push(const PMatrix& j, const MultiVectorField& p) {
  if (j.cols() != p.generators()) throw ArityError("push: matrix columns must match generators");
  const std::size_t k = p.degree();
  MultiVectorField out(j.rows(), p.num_vars(), k);
  const PMatrix e = exterior_power(j, k);
  const auto targets = k_subsets(j.rows(), k);
  for (std::size_t a = 0; a < e.rows(); ++a) {
    Poly acc(p.num_vars());
    for (std::size_t b = 0; b < e.cols(); ++b) {
      if (!e(a, b).is_zero() && !p.coeffs()[b].is_zero()) acc += e(a, b) * p.coeffs()[b];
    }
    out[targets[a]] = std::move(acc);
  }
  return out;
}

DifferentialForm pullback(const PolyMap& f, const DifferentialForm& w) {
  if (w.generators() != f.codomain_dim() || w.num_vars() != f.codomain_dim()) {
    throw ArityError("pullback of a form on the wrong space");
  }
  const DifferentialForm composed =
      w.map([&f](const Poly& c) { return f.pull(c); }, f.domain_dim());
  return pull(f.jacobian(), composed);
}

std::vector<Rational> pushforward_linear(const QMatrix& j, std::span<const Rational> coeffs, std::size_t k) {
  if (coeffs.size() != binomial(j.cols(), k)) throw ArityError("coefficient array does not match degree");
  const QMatrix e = exterior_power(j, k);
  return e * coeffs;
}

Rational slot_determinant(Subset s, const std::vector<std::vector<Rational>>& slots) {
  const auto elems = subset_elements(s);
  if (elems.size() != slots.size()) throw ArityError("slot count does not match degree");
  QMatrix m(slots.size(), slots.size(), Rational(0));
  for (std::size_t a = 0; a < slots.size(); ++a)
    for (std::size_t b = 0; b < elems.size(); ++b) {
      if (elems[b] >= slots[a].size()) throw ArityError("slot vector too short");
      m(a, b) = slots[a][elems[b]];
    }
  return determinant(m);
}

namespace {

template <Variance V>
Rational evaluate_alternating(const AlternatingField<V>& a, std::span<const Rational> point,
                              const std::vector<std::vector<Rational>>& slots) {
  if (slots.size() != a.degree()) throw ArityError("wrong number of slot arguments");
  for (const auto& s : slots) {
    if (s.size() != a.generators()) throw ArityError("slot argument has wrong length");
  }
  Rational total = 0;
  const auto is = a.index_sets();
  for (std::size_t x = 0; x < is.size(); ++x) {
    if (a.coeffs()[x].is_zero()) continue;
    total += a.coeffs()[x].evaluate(point) * slot_determinant(is[x], slots);
  }
  return total;
}

}  // namespace

Rational evaluate(const MultiVectorField& p, std::span<const Rational> point,
                  const std::vector<std::vector<Rational>>& covectors) {
  return evaluate_alternating(p, point, covectors);
}

Rational evaluate(const DifferentialForm& w, std::span<const Rational> point,
                  const std::vector<std::vector<Rational>>& vectors) {
  return evaluate_alternating(w, point, vectors);
}

}  // namespace affinoid
