#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "affinoid/errors.hpp"
#include "affinoid/exact/poly.hpp"
#include "affinoid/exact/rational.hpp"
#include "affinoid/exact/subsets.hpp"

namespace affinoid {

inline Rational zero_like(const Rational&) { return Rational(0); }
inline Rational one_like(const Rational&) { return Rational(1); }
inline Poly zero_like(const Poly& p) { return Poly(p.num_vars()); }
inline Poly one_like(const Poly& p) { return Poly::constant(p.num_vars(), 1); }
inline bool is_zero_value(const Rational& r) { return r == 0; }
inline bool is_zero_value(const Poly& p) { return p.is_zero(); }

/// Dense row-major matrix over Rational or Poly. Every matrix carries a zero
/// element so that empty products and identities know their ring.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, T zero)
      : rows_(rows), cols_(cols), zero_(std::move(zero)), data_(rows * cols, zero_) {}

  static Matrix identity(std::size_t n, const T& zero) {
    Matrix m(n, n, zero);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one_like(zero);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const T& zero() const { return zero_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<T> column(std::size_t c) const {
    std::vector<T> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
    return out;
  }
  std::vector<T> row(std::size_t r) const {
    return std::vector<T>(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_, zero_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw ArityError("matrix block out of range");
    Matrix b(nr, nc, zero_);
    for (std::size_t r = 0; r < nr; ++r)
      for (std::size_t c = 0; c < nc; ++c) b(r, c) = (*this)(r0 + r, c0 + c);
    return b;
  }

  void set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
    if (r0 + b.rows() > rows_ || c0 + b.cols() > cols_) throw ArityError("matrix block out of range");
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (std::size_t c = 0; c < b.cols(); ++c) (*this)(r0 + r, c0 + c) = b(r, c);
  }

  bool is_zero() const {
    for (const auto& v : data_)
      if (!is_zero_value(v)) return false;
    return true;
  }

  Matrix& operator+=(const Matrix& o) {
    check_shape(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_shape(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }
  Matrix& operator*=(const T& c) {
    for (auto& v : data_) v *= c;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator-(Matrix a) {
    for (auto& v : a.data_) v = -v;
    return a;
  }
  friend Matrix operator*(Matrix a, const T& c) { return a *= c; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw ArityError("matrix product shape mismatch");
    Matrix p(a.rows_, b.cols_, a.zero_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (is_zero_value(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          if (!is_zero_value(b(k, j))) p(i, j) += aik * b(k, j);
        }
      }
    return p;
  }

  friend std::vector<T> operator*(const Matrix& a, std::span<const T> v) {
    if (a.cols_ != v.size()) throw ArityError("matrix-vector shape mismatch");
    std::vector<T> out(a.rows_, a.zero_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (!is_zero_value(a(i, k)) && !is_zero_value(v[k])) out[i] += a(i, k) * v[k];
      }
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  void check_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ArityError("matrix shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  T zero_{};
  std::vector<T> data_;
};

using QMatrix = Matrix<Rational>;
using PMatrix = Matrix<Poly>;

/// Determinants of all |rows| x |rows| minors using the given rows (in order)
/// and any column subset of that size, keyed by column mask. Division free,
/// so it works over polynomial entries.
template <class T>
std::unordered_map<Subset, T> row_minors(const Matrix<T>& m, const std::vector<std::size_t>& rows) {
  std::unordered_map<Subset, T> prev{{Subset{0}, one_like(m.zero())}};
  for (std::size_t k = 1; k <= rows.size(); ++k) {
    std::unordered_map<Subset, T> next;
    const std::size_t r = rows[k - 1];
    for (const Subset cols : k_subsets(m.cols(), k)) {
      T acc = m.zero();
      int pos = 0;
      for (std::size_t j = 0; j < m.cols(); ++j) {
        if (!((cols >> j) & 1)) continue;
        const T& entry = m(r, j);
        if (!is_zero_value(entry)) {
          const T& sub = prev.at(cols & ~(Subset{1} << j));
          if (!is_zero_value(sub)) {
            // Expansion along the last row: sign (-1)^{(k-1)+pos}.
            if ((k - 1 + pos) % 2) acc -= entry * sub;
            else acc += entry * sub;
          }
        }
        ++pos;
      }
      next.emplace(cols, std::move(acc));
    }
    prev = std::move(next);
  }
  return prev;
}

template <class T>
T determinant(const Matrix<T>& m) {
  if (m.rows() != m.cols()) throw ArityError("determinant of a non-square matrix");
  std::vector<std::size_t> rows(m.rows());
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i;
  auto minors = row_minors(m, rows);
  return minors.at(m.cols() == 0 ? Subset{0} : (Subset{1} << m.cols()) - 1);
}

/// k-th exterior power: entry (I, J) is det m[I, J], with I and J ranging over
/// k-subsets in colex order.
template <class T>
Matrix<T> exterior_power(const Matrix<T>& m, std::size_t k) {
  const auto row_sets = k_subsets(m.rows(), k);
  const auto col_sets = k_subsets(m.cols(), k);
  Matrix<T> out(row_sets.size(), col_sets.size(), m.zero());
  for (std::size_t a = 0; a < row_sets.size(); ++a) {
    const auto minors = row_minors(m, subset_elements(row_sets[a]));
    for (std::size_t b = 0; b < col_sets.size(); ++b) out(a, b) = minors.at(col_sets[b]);
  }
  return out;
}

/// Adjugate (transpose of the cofactor matrix).
template <class T>
Matrix<T> adjugate(const Matrix<T>& m) {
  if (m.rows() != m.cols()) throw ArityError("adjugate of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix<T> adj(n, n, m.zero());
  if (n == 0) return adj;
  if (n == 1) {
    adj(0, 0) = one_like(m.zero());
    return adj;
  }
  const Subset all = (Subset{1} << n) - 1;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::size_t> rows;
    for (std::size_t r = 0; r < n; ++r)
      if (r != i) rows.push_back(r);
    const auto minors = row_minors(m, rows);
    for (std::size_t j = 0; j < n; ++j) {
      T c = minors.at(all & ~(Subset{1} << j));
      if ((i + j) % 2) c = -c;
      adj(j, i) = std::move(c);
    }
  }
  return adj;
}

/// Entrywise evaluation of a polynomial matrix.
QMatrix evaluate(const PMatrix& m, std::span<const Rational> point);

/// Entrywise substitution x_i -> values[i].
PMatrix substitute(const PMatrix& m, std::span<const Poly> values, std::size_t target_vars);

/// Constant polynomial matrix with the given rational entries.
PMatrix to_poly_matrix(const QMatrix& m, std::size_t num_vars);

/// Inverse of a polynomial matrix whose determinant is a nonzero constant.
/// Throws SplittingError otherwise (the only caller is splitting inversion).
PMatrix unimodular_inverse(const PMatrix& m);

std::string to_string(const QMatrix& m);

}  // namespace affinoid
