#include "affinoid/exact/subsets.hpp"

#include "affinoid/errors.hpp"

namespace affinoid {

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::vector<Subset> k_subsets(std::size_t n, std::size_t k) {
  if (n > 31) throw ArityError("subset universe too large");
  std::vector<Subset> out;
  if (k > n) return out;
  out.reserve(binomial(n, k));
  if (k == 0) {
    out.push_back(0);
    return out;
  }
  // Gosper's hack walks masks of fixed popcount in increasing order.
  Subset s = (Subset{1} << k) - 1;
  const Subset limit = Subset{1} << n;
  while (s < limit) {
    out.push_back(s);
    const Subset c = s & (~s + 1);
    const Subset r = s + c;
    s = (((r ^ s) >> 2) / c) | r;
  }
  return out;
}

std::size_t subset_rank(Subset s) {
  std::size_t rank = 0;
  std::size_t j = 1;
  for (std::size_t e = 0; s != 0; ++e, s >>= 1) {
    if (s & 1) rank += binomial(e, j++);
  }
  return rank;
}

std::vector<std::size_t> subset_elements(Subset s) {
  std::vector<std::size_t> out;
  for (std::size_t e = 0; s != 0; ++e, s >>= 1) {
    if (s & 1) out.push_back(e);
  }
  return out;
}

Subset subset_from(const std::vector<std::size_t>& elements) {
  Subset s = 0;
  for (auto e : elements) {
    if (e >= 31) throw ArityError("subset element out of range");
    s |= Subset{1} << e;
  }
  return s;
}

int shuffle_sign(Subset i, Subset j) {
  int inversions = 0;
  for (std::size_t e = 0; j >> e; ++e) {
    if ((j >> e) & 1) inversions += std::popcount(i >> (e + 1));
  }
  return (inversions % 2) ? -1 : 1;
}

}  // namespace affinoid
