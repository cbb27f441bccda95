#include "affinoid/exterior/tensor.hpp"

#include "affinoid/exterior/calculus.hpp"

namespace affinoid {

TensorField::TensorField(std::size_t contra_dim, std::size_t cov_dim, std::size_t num_vars, std::size_t p,
                         std::size_t q)
    : contra_dim_(contra_dim), cov_dim_(cov_dim), num_vars_(num_vars), p_(p), q_(q) {
  coeffs_.assign(binomial(contra_dim, p) * binomial(cov_dim, q), Poly(num_vars));
}

std::size_t TensorField::index(Subset contra, Subset cov) const {
  if (static_cast<std::size_t>(subset_size(contra)) != p_ || static_cast<std::size_t>(subset_size(cov)) != q_ ||
      (contra >> contra_dim_) != 0 || (cov >> cov_dim_) != 0) {
    throw ArityError("tensor index sets do not match the tensor's type");
  }
  return subset_rank(contra) * binomial(cov_dim_, q_) + subset_rank(cov);
}

void TensorField::check_shape(const TensorField& o) const {
  if (contra_dim_ != o.contra_dim_ || cov_dim_ != o.cov_dim_ || num_vars_ != o.num_vars_ || p_ != o.p_ ||
      q_ != o.q_) {
    throw ArityError("tensor fields of different shape");
  }
}

TensorField TensorField::from_multivector(const MultiVectorField& m) {
  TensorField t(m.generators(), m.generators(), m.num_vars(), m.degree(), 0);
  t.coeffs_ = m.coeffs();
  return t;
}

TensorField TensorField::from_multivector(const MultiVectorField& m, std::size_t cov_dim) {
  TensorField t(m.generators(), cov_dim, m.num_vars(), m.degree(), 0);
  t.coeffs_ = m.coeffs();
  return t;
}

TensorField TensorField::from_form(const DifferentialForm& w) {
  TensorField t(w.generators(), w.generators(), w.num_vars(), 0, w.degree());
  t.coeffs_ = w.coeffs();
  return t;
}

TensorField TensorField::from_matrix(const PMatrix& n) {
  if (n.rows() != n.cols()) throw ArityError("(1,1)-tensor matrix must be square");
  const std::size_t vars = n.zero().num_vars();
  TensorField t(n.rows(), n.cols(), vars, 1, 1);
  for (std::size_t i = 0; i < n.rows(); ++i)
    for (std::size_t j = 0; j < n.cols(); ++j) t.at(Subset{1} << i, Subset{1} << j) = n(i, j);
  return t;
}

TensorField TensorField::product(const MultiVectorField& m, const DifferentialForm& w) {
  if (m.num_vars() != w.num_vars()) throw ArityError("tensor product of fields in different variables");
  TensorField t(m.generators(), w.generators(), m.num_vars(), m.degree(), w.degree());
  const auto is = m.index_sets();
  const auto ks = w.index_sets();
  for (std::size_t a = 0; a < is.size(); ++a)
    for (std::size_t b = 0; b < ks.size(); ++b) t.at(is[a], ks[b]) = m.coeffs()[a] * w.coeffs()[b];
  return t;
}

MultiVectorField TensorField::to_multivector() const {
  if (q_ != 0) throw DegreeError("tensor has covariant slots");
  MultiVectorField m(contra_dim_, num_vars_, p_);
  for (const Subset s : contra_sets()) m[s] = at(s, 0);
  return m;
}

DifferentialForm TensorField::to_form() const {
  if (p_ != 0) throw DegreeError("tensor has contravariant slots");
  DifferentialForm w(cov_dim_, num_vars_, q_);
  for (const Subset s : cov_sets()) w[s] = at(0, s);
  return w;
}

PMatrix TensorField::to_matrix() const {
  if (p_ != 1 || q_ != 1) throw DegreeError("not a (1,1)-tensor");
  PMatrix n(contra_dim_, cov_dim_, Poly(num_vars_));
  for (std::size_t i = 0; i < contra_dim_; ++i)
    for (std::size_t j = 0; j < cov_dim_; ++j) n(i, j) = at(Subset{1} << i, Subset{1} << j);
  return n;
}

MultiVectorField TensorField::contra_slice(Subset cov) const {
  MultiVectorField m(contra_dim_, num_vars_, p_);
  for (const Subset s : contra_sets()) m[s] = at(s, cov);
  return m;
}

void TensorField::set_contra_slice(Subset cov, const MultiVectorField& m) {
  if (m.generators() != contra_dim_ || m.num_vars() != num_vars_ || m.degree() != p_) {
    throw ArityError("slice has the wrong shape");
  }
  for (const Subset s : contra_sets()) at(s, cov) = m[s];
}

bool TensorField::is_zero() const {
  for (const auto& c : coeffs_)
    if (!c.is_zero()) return false;
  return true;
}

TensorField TensorField::map(const std::function<Poly(const Poly&)>& fn, std::size_t new_num_vars) const {
  TensorField out(contra_dim_, cov_dim_, new_num_vars, p_, q_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    out.coeffs_[i] = fn(coeffs_[i]);
    if (out.coeffs_[i].num_vars() != new_num_vars) throw ArityError("coefficient map changed arity");
  }
  return out;
}

Rational TensorField::evaluate(std::span<const Rational> point, const std::vector<std::vector<Rational>>& vectors,
                               const std::vector<std::vector<Rational>>& covectors) const {
  if (vectors.size() != q_ || covectors.size() != p_) throw ArityError("wrong number of tensor slots");
  for (const auto& v : vectors)
    if (v.size() != cov_dim_) throw ArityError("tangent slot has wrong length");
  for (const auto& c : covectors)
    if (c.size() != contra_dim_) throw ArityError("covector slot has wrong length");
  const auto is = contra_sets();
  const auto ks = cov_sets();
  std::vector<Rational> cov_dets;
  for (const Subset k : ks) cov_dets.push_back(slot_determinant(k, vectors));
  Rational total = 0;
  for (std::size_t a = 0; a < is.size(); ++a) {
    Rational contra_det;
    bool have = false;
    for (std::size_t b = 0; b < ks.size(); ++b) {
      const Poly& c = coeffs_[a * ks.size() + b];
      if (c.is_zero() || cov_dets[b] == 0) continue;
      if (!have) {
        contra_det = slot_determinant(is[a], covectors);
        have = true;
      }
      total += c.evaluate(point) * contra_det * cov_dets[b];
    }
  }
  return total;
}

TensorField& TensorField::operator+=(const TensorField& o) {
  check_shape(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

TensorField& TensorField::operator-=(const TensorField& o) {
  check_shape(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

TensorField& TensorField::operator*=(const Poly& f) {
  for (auto& c : coeffs_) c *= f;
  return *this;
}

TensorField& TensorField::operator*=(const Rational& c) {
  for (auto& p : coeffs_) p *= c;
  return *this;
}

}  // namespace affinoid
