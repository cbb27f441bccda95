#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace affinoid {

/// Subsets of {0..n-1} are bitmasks. Dense storage of exterior powers orders
/// the k-subsets by numeric mask value (colex order).
using Subset = std::uint32_t;

inline int subset_size(Subset s) { return std::popcount(s); }

/// All k-subsets of {0..n-1} in colex order.
std::vector<Subset> k_subsets(std::size_t n, std::size_t k);

/// Position of `s` within k_subsets(n, |s|); independent of n.
std::size_t subset_rank(Subset s);

std::size_t binomial(std::size_t n, std::size_t k);

/// Elements in increasing order.
std::vector<std::size_t> subset_elements(Subset s);

Subset subset_from(const std::vector<std::size_t>& elements);

/// Number of i in s with i < j.
inline int count_below(Subset s, std::size_t j) { return std::popcount(s & ((Subset{1} << j) - 1)); }

/// Sign of the shuffle that sorts the concatenation (I, J) of disjoint sets:
/// (-1)^{#{(i,j) : i in I, j in J, i > j}}.
int shuffle_sign(Subset i, Subset j);

}  // namespace affinoid
