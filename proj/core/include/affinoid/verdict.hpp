#pragma once

#include <string>
#include <vector>

#include "affinoid/exact/sampling.hpp"
#include "affinoid/exterior/alternating.hpp"
#include "affinoid/exterior/tensor.hpp"

namespace affinoid {

/// Outcome of a predicate or identity check. A failing verdict carries a
/// short description and, when one was found, an exact rational point at
/// which the two sides differ.
struct Verdict {
  bool pass = true;
  std::string detail;
  std::vector<Rational> witness;

  explicit operator bool() const { return pass; }

  static Verdict ok() { return {}; }
  static Verdict fail(std::string detail, std::vector<Rational> witness = {}) {
    return {false, std::move(detail), std::move(witness)};
  }

  /// Keeps the first failure.
  Verdict& operator&=(const Verdict& other) {
    if (pass && !other.pass) *this = other;
    return *this;
  }
};

Verdict compare(const Poly& lhs, const Poly& rhs, const CheckOptions& options, const std::string& what);
Verdict compare(const std::vector<Poly>& lhs, const std::vector<Poly>& rhs, const CheckOptions& options,
                const std::string& what);

template <Variance V>
Verdict compare(const AlternatingField<V>& lhs, const AlternatingField<V>& rhs, const CheckOptions& options,
                const std::string& what) {
  if (lhs.generators() != rhs.generators() || lhs.num_vars() != rhs.num_vars() || lhs.degree() != rhs.degree()) {
    return Verdict::fail(what + ": operands have different shapes");
  }
  return compare(lhs.coeffs(), rhs.coeffs(), options, what);
}

Verdict compare(const TensorField& lhs, const TensorField& rhs, const CheckOptions& options, const std::string& what);

}  // namespace affinoid
