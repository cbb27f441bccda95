#pragma once

#include <optional>
#include <vector>

#include "affinoid/exact/matrix.hpp"

namespace affinoid {

using QVector = std::vector<Rational>;

struct RowEchelon {
  QMatrix reduced;                   // reduced row-echelon form
  std::vector<std::size_t> pivots;   // pivot column of each nonzero row
  std::size_t rank() const { return pivots.size(); }
};

RowEchelon rref(QMatrix a);

/// Solution set of A x = b. `particular` is empty when the system is
/// inconsistent (NoSolution is a value, not an error).
struct LinearSolution {
  std::size_t rank = 0;
  std::optional<QVector> particular;
  std::vector<QVector> kernel;
  bool consistent() const { return particular.has_value(); }
};

LinearSolution linsolve(const QMatrix& a, const QVector& b);

/// Basis of {x : A x = 0}, one vector per free column.
std::vector<QVector> kernel_basis(const QMatrix& a);

std::size_t rank(const QMatrix& a);

/// Inverse of a square rational matrix; std::nullopt when singular.
std::optional<QMatrix> inverse(const QMatrix& a);

/// (A^T A)^{-1} A^T for A of full column rank; std::nullopt otherwise.
std::optional<QMatrix> left_inverse(const QMatrix& a);

QMatrix column_matrix(const std::vector<QVector>& columns, std::size_t rows);

}  // namespace affinoid
