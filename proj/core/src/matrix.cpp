#include "affinoid/exact/matrix.hpp"

namespace affinoid {

QMatrix evaluate(const PMatrix& m, std::span<const Rational> point) {
  QMatrix out(m.rows(), m.cols(), Rational(0));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, c).evaluate(point);
  return out;
}

PMatrix substitute(const PMatrix& m, std::span<const Poly> values, std::size_t target_vars) {
  PMatrix out(m.rows(), m.cols(), Poly(target_vars));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, c).substitute(values, target_vars);
  return out;
}

PMatrix to_poly_matrix(const QMatrix& m, std::size_t num_vars) {
  PMatrix out(m.rows(), m.cols(), Poly(num_vars));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = Poly::constant(num_vars, m(r, c));
  return out;
}

PMatrix unimodular_inverse(const PMatrix& m) {
  const Poly det = determinant(m);
  if (!det.is_constant() || det.is_zero()) {
    throw SplittingError("matrix determinant is not a nonzero constant: " + to_string(det));
  }
  PMatrix inv = adjugate(m);
  inv *= Poly::constant(m.zero().num_vars(), 1 / det.constant_term());
  return inv;
}

std::string to_string(const QMatrix& m) {
  std::string out = "[";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out += r ? ", [" : "[";
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) out += ", ";
      out += to_string(m(r, c));
    }
    out += "]";
  }
  return out + "]";
}

}  // namespace affinoid
