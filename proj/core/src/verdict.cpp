#include "affinoid/verdict.hpp"

namespace affinoid {

Verdict compare(const Poly& lhs, const Poly& rhs, const CheckOptions& options, const std::string& what) {
  if (lhs.num_vars() != rhs.num_vars()) return Verdict::fail(what + ": operands live in different variables");
  if (polys_equal(lhs, rhs, options)) return Verdict::ok();
  return Verdict::fail(what, find_witness(lhs, rhs, options));
}

Verdict compare(const std::vector<Poly>& lhs, const std::vector<Poly>& rhs, const CheckOptions& options,
                const std::string& what) {
  if (lhs.size() != rhs.size()) return Verdict::fail(what + ": operands have different lengths");
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    Verdict v = compare(lhs[i], rhs[i], options, what);
    if (!v) return v;
  }
  return Verdict::ok();
}

Verdict compare(const TensorField& lhs, const TensorField& rhs, const CheckOptions& options,
                const std::string& what) {
  if (lhs.contra_dim() != rhs.contra_dim() || lhs.cov_dim() != rhs.cov_dim() || lhs.num_vars() != rhs.num_vars() ||
      lhs.p() != rhs.p() || lhs.q() != rhs.q()) {
    return Verdict::fail(what + ": operands have different shapes");
  }
  return compare(lhs.coeffs(), rhs.coeffs(), options, what);
}

}  // namespace affinoid
