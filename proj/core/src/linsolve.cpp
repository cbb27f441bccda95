#include "affinoid/exact/linsolve.hpp"

namespace affinoid {

RowEchelon rref(QMatrix a) {
  RowEchelon out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < a.rows() && a(pivot, col) == 0) ++pivot;
    if (pivot == a.rows()) continue;
    if (pivot != row) {
      for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(row, c), a(pivot, c));
    }
    const Rational inv = 1 / a(row, col);
    for (std::size_t c = col; c < a.cols(); ++c) a(row, c) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, col) == 0) continue;
      const Rational f = a(r, col);
      for (std::size_t c = col; c < a.cols(); ++c) a(r, c) -= f * a(row, c);
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.reduced = std::move(a);
  return out;
}

namespace {

std::vector<QVector> kernel_from(const RowEchelon& e, std::size_t n) {
  std::vector<bool> is_pivot(n, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<QVector> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    QVector v(n, Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

LinearSolution linsolve(const QMatrix& a, const QVector& b) {
  if (b.size() != a.rows()) throw ArityError("linsolve: right-hand side has wrong length");
  const std::size_t n = a.cols();
  QMatrix aug(a.rows(), n + 1, Rational(0));
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
    aug(r, n) = b[r];
  }
  RowEchelon e = rref(std::move(aug));
  LinearSolution sol;
  if (!e.pivots.empty() && e.pivots.back() == n) {
    e.pivots.pop_back();
    sol.rank = e.pivots.size();
    // An inconsistent system still reports the kernel of A.
    sol.kernel = kernel_from(e, n);
    return sol;
  }
  sol.rank = e.pivots.size();
  QVector x(n, Rational(0));
  for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.reduced(r, n);
  sol.particular = std::move(x);
  sol.kernel = kernel_from(e, n);
  return sol;
}

std::vector<QVector> kernel_basis(const QMatrix& a) { return kernel_from(rref(a), a.cols()); }

std::size_t rank(const QMatrix& a) { return rref(a).rank(); }

std::optional<QMatrix> inverse(const QMatrix& a) {
  if (a.rows() != a.cols()) throw ArityError("inverse of a non-square matrix");
  const std::size_t n = a.rows();
  QMatrix aug(n, 2 * n, Rational(0));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
    aug(r, n + r) = 1;
  }
  RowEchelon e = rref(std::move(aug));
  if (e.rank() < n || (n > 0 && e.pivots[n - 1] != n - 1)) return std::nullopt;
  return e.reduced.block(0, n, n, n);
}

std::optional<QMatrix> left_inverse(const QMatrix& a) {
  const QMatrix at = a.transpose();
  auto gram_inv = inverse(at * a);
  if (!gram_inv) return std::nullopt;
  return *gram_inv * at;
}

QMatrix column_matrix(const std::vector<QVector>& columns, std::size_t rows) {
  QMatrix m(rows, columns.size(), Rational(0));
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw ArityError("column has wrong length");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

}  // namespace affinoid
