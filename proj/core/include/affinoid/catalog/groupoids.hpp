#pragma once

#include <string>
#include <vector>

#include "affinoid/groupoid/groupoid.hpp"

namespace affinoid::catalog {

/// Pair groupoid R^n x R^n => R^n with coordinates (x, y), s(x,y) = y,
/// t(x,y) = x, composable pairs parametrized by (x, y, z).
GroupoidData make_pair(std::size_t n);

/// The vector group R^n over a point; the product is addition.
GroupoidData make_abelian(std::size_t n);

/// Heisenberg group on (a, b, c) with (a,b,c)(a',b',c') = (a+a', b+b', c+c'+ab').
GroupoidData make_heisenberg();

/// Componentwise product G1 x G2 => M1 x M2.
GroupoidData make_product(const GroupoidData& g1, const GroupoidData& g2);

/// Pair(R^n) x Heisenberg => R^n.
GroupoidData make_product_pair_group(std::size_t n);

/// Identifiers accepted by `lookup`, in a fixed order.
std::vector<std::string> groupoid_ids();

/// Throws std::out_of_range for an unknown id.
GroupoidData lookup(const std::string& id);

}  // namespace affinoid::catalog
