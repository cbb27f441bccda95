#include "affinoid/catalog/groupoids.hpp"

#include <stdexcept>

namespace affinoid::catalog {

namespace {

Poly var(std::size_t n, std::size_t i) { return Poly::variable(n, i); }

std::vector<Poly> vars(std::size_t n, std::size_t offset, std::size_t count) {
  std::vector<Poly> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(var(n, offset + i));
  return out;
}

std::vector<Poly> cat(std::vector<Poly> a, const std::vector<Poly>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

/// Re-expresses a map's components in a larger variable set, shifting its
/// variables by `offset`.
std::vector<Poly> embed_all(const PolyMap& m, std::size_t target_vars, std::size_t offset) {
  std::vector<Poly> out;
  for (const auto& c : m.components()) out.push_back(c.embed(target_vars, offset));
  return out;
}

}  // namespace

GroupoidData make_pair(std::size_t n) {
  GroupoidData d;
  d.name = "pair" + std::to_string(n);
  d.dim_G = 2 * n;
  d.dim_M = n;
  d.src = PolyMap(2 * n, vars(2 * n, n, n));
  d.tgt = PolyMap(2 * n, vars(2 * n, 0, n));
  d.unit = PolyMap(n, cat(vars(n, 0, n), vars(n, 0, n)));
  d.inv = PolyMap(2 * n, cat(vars(2 * n, n, n), vars(2 * n, 0, n)));
  // P = (x, y, z) -> ((x, y), (y, z)), product (x, z).
  d.comp_param = PolyMap(3 * n, cat(cat(vars(3 * n, 0, 2 * n), vars(3 * n, n, n)), vars(3 * n, 2 * n, n)));
  d.mult = PolyMap(3 * n, cat(vars(3 * n, 0, n), vars(3 * n, 2 * n, n)));
  // TM = diagonal (v, v); A = (v, 0).
  d.splitting = PMatrix(2 * n, 2 * n, Poly(n));
  for (std::size_t i = 0; i < n; ++i) {
    d.splitting(i, i) = Poly::constant(n, 1);
    d.splitting(n + i, i) = Poly::constant(n, 1);
    d.splitting(i, n + i) = Poly::constant(n, 1);
  }
  return d;
}

GroupoidData make_abelian(std::size_t n) {
  GroupoidData d;
  d.name = "abelian" + std::to_string(n);
  d.dim_G = n;
  d.dim_M = 0;
  d.src = PolyMap(n, {});
  d.tgt = PolyMap(n, {});
  d.unit = PolyMap::constant(0, std::vector<Rational>(n, Rational(0)));
  std::vector<Poly> neg;
  for (std::size_t i = 0; i < n; ++i) neg.push_back(-var(n, i));
  d.inv = PolyMap(n, neg);
  d.comp_param = PolyMap::identity(2 * n);
  std::vector<Poly> sum;
  for (std::size_t i = 0; i < n; ++i) sum.push_back(var(2 * n, i) + var(2 * n, n + i));
  d.mult = PolyMap(2 * n, sum);
  d.splitting = PMatrix::identity(n, Poly(0));
  return d;
}

GroupoidData make_heisenberg() {
  GroupoidData d;
  d.name = "heisenberg";
  d.dim_G = 3;
  d.dim_M = 0;
  d.src = PolyMap(3, {});
  d.tgt = PolyMap(3, {});
  d.unit = PolyMap::constant(0, {0, 0, 0});
  d.inv = PolyMap(3, {parse_poly("-x1", 3), parse_poly("-x2", 3), parse_poly("-x3 + x1 * x2", 3)});
  d.comp_param = PolyMap::identity(6);
  d.mult = PolyMap(6, {parse_poly("x1 + x4", 6), parse_poly("x2 + x5", 6), parse_poly("x3 + x6 + x1 * x5", 6)});
  d.splitting = PMatrix::identity(3, Poly(0));
  return d;
}

GroupoidData make_product(const GroupoidData& g1, const GroupoidData& g2) {
  GroupoidData d;
  d.name = g1.name + "_" + g2.name;
  const std::size_t n1 = g1.dim_G, n2 = g2.dim_G, m1 = g1.dim_M, m2 = g2.dim_M;
  const std::size_t p1 = g1.comp_param.domain_dim(), p2 = g2.comp_param.domain_dim();
  d.dim_G = n1 + n2;
  d.dim_M = m1 + m2;
  const std::size_t n = d.dim_G, m = d.dim_M, p = p1 + p2;
  d.src = PolyMap(n, cat(embed_all(g1.src, n, 0), embed_all(g2.src, n, n1)));
  d.tgt = PolyMap(n, cat(embed_all(g1.tgt, n, 0), embed_all(g2.tgt, n, n1)));
  d.unit = PolyMap(m, cat(embed_all(g1.unit, m, 0), embed_all(g2.unit, m, m1)));
  d.inv = PolyMap(n, cat(embed_all(g1.inv, n, 0), embed_all(g2.inv, n, n1)));
  const auto c1 = embed_all(g1.comp_param, p, 0);
  const auto c2 = embed_all(g2.comp_param, p, p1);
  std::vector<Poly> comp;
  comp.insert(comp.end(), c1.begin(), c1.begin() + n1);
  comp.insert(comp.end(), c2.begin(), c2.begin() + n2);
  comp.insert(comp.end(), c1.begin() + n1, c1.end());
  comp.insert(comp.end(), c2.begin() + n2, c2.end());
  d.comp_param = PolyMap(p, comp);
  d.mult = PolyMap(p, cat(embed_all(g1.mult, p, 0), embed_all(g2.mult, p, p1)));
  // Columns: TM1, TM2, A1, A2.
  d.splitting = PMatrix(n, n, Poly(m));
  for (std::size_t r = 0; r < n1; ++r) {
    for (std::size_t c = 0; c < m1; ++c) d.splitting(r, c) = g1.splitting(r, c).embed(m, 0);
    for (std::size_t c = m1; c < n1; ++c) d.splitting(r, m + (c - m1)) = g1.splitting(r, c).embed(m, 0);
  }
  for (std::size_t r = 0; r < n2; ++r) {
    for (std::size_t c = 0; c < m2; ++c) d.splitting(n1 + r, m1 + c) = g2.splitting(r, c).embed(m, m1);
    for (std::size_t c = m2; c < n2; ++c)
      d.splitting(n1 + r, m + (n1 - m1) + (c - m2)) = g2.splitting(r, c).embed(m, m1);
  }
  return d;
}

GroupoidData make_product_pair_group(std::size_t n) { return make_product(make_pair(n), make_heisenberg()); }

std::vector<std::string> groupoid_ids() {
  return {"pair1", "pair2", "pair3", "abelian1", "abelian2", "abelian3", "heisenberg", "pair1_heisenberg",
          "pair2_heisenberg"};
}

GroupoidData lookup(const std::string& id) {
  if (id == "pair1") return make_pair(1);
  if (id == "pair2") return make_pair(2);
  if (id == "pair3") return make_pair(3);
  if (id == "abelian1") return make_abelian(1);
  if (id == "abelian2") return make_abelian(2);
  if (id == "abelian3") return make_abelian(3);
  if (id == "heisenberg") return make_heisenberg();
  if (id == "pair1_heisenberg") return make_product_pair_group(1);
  if (id == "pair2_heisenberg") return make_product_pair_group(2);
  throw std::out_of_range("unknown catalog groupoid '" + id + "'");
}

}  // namespace affinoid::catalog
