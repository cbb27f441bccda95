#include <benchmark/benchmark.h>

#include "affinoid/affine/forms.hpp"
#include "affinoid/affine/multivector.hpp"
#include "affinoid/affine/tensors.hpp"
#include "affinoid/catalog/fixtures.hpp"
#include "affinoid/exterior/calculus.hpp"
#include "affinoid/suite.hpp"

namespace {

using namespace affinoid;

const catalog::Fixture& fixture(const catalog::CatalogEntry& e, const std::string& name) {
  for (const auto& f : e.fixtures)
    if (f.name == name) return f;
  throw std::out_of_range(name);
}

void BM_PolyProduct(benchmark::State& state) {
  const Poly a = parse_poly("x1^2 + 3/2 * x2 * x3 - x4 + 1", 4);
  const Poly b = parse_poly("x1 * x2 - 2 * x3^2 + x4^3", 4);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_PolyProduct);

void BM_SchoutenBracket(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  MultiVectorField p(n, 2), q(n, 2);
  for (const Subset s : p.index_sets()) {
    p[s] = Poly::variable(n, subset_rank(s) % n) * Poly::variable(n, 0);
    q[s] = Poly::variable(n, (subset_rank(s) + 1) % n) + Poly::constant(n, 1);
  }
  for (auto _ : state) benchmark::DoNotOptimize(schouten_bracket(p, q));
}
BENCHMARK(BM_SchoutenBracket)->Arg(2)->Arg(4)->Arg(6);

void BM_AffineMvFastPath(benchmark::State& state) {
  const auto e = catalog::entry("pair2_heisenberg");
  const Groupoid g(e.groupoid);
  const MultiVectorField pi = fixture(e, "right-plus-left-2").field.to_multivector();
  for (auto _ : state) benchmark::DoNotOptimize(affine_mv_fast(g, pi));
}
BENCHMARK(BM_AffineMvFastPath)->Unit(benchmark::kMillisecond);

void BM_CoisotropyOracle(benchmark::State& state) {
  const auto e = catalog::entry("pair2_heisenberg");
  const Groupoid g(e.groupoid);
  const MultiVectorField pi = fixture(e, "right-plus-left-2").field.to_multivector();
  for (auto _ : state) benchmark::DoNotOptimize(coisotropy_oracle(g, pi, OracleShape::parallelograms, {}));
}
BENCHMARK(BM_CoisotropyOracle)->Unit(benchmark::kMillisecond);

void BM_AffineFormIdentity(benchmark::State& state) {
  const auto e = catalog::entry("pair3");
  const Groupoid g(e.groupoid);
  const DifferentialForm w = fixture(e, "pair-forms-2").field.to_form();
  for (auto _ : state) benchmark::DoNotOptimize(affine_form_identity(g, w));
}
BENCHMARK(BM_AffineFormIdentity)->Unit(benchmark::kMillisecond);

void BM_GammaIdentity11(benchmark::State& state) {
  const auto e = catalog::entry("pair1_heisenberg");
  const Groupoid g(e.groupoid);
  const TensorField f = fixture(e, "block-affine-11").field;
  for (auto _ : state) benchmark::DoNotOptimize(gamma_identity(g, f, TensorLaw::affine));
}
BENCHMARK(BM_GammaIdentity11)->Unit(benchmark::kMillisecond);

void BM_FullSuite(benchmark::State& state) {
  const auto e = catalog::entry("pair2");
  CheckOptions o;
  o.seed = 7;
  for (auto _ : state) benchmark::DoNotOptimize(run_suite("full", "catalog:pair2", e.groupoid, e.fixtures, o));
}
BENCHMARK(BM_FullSuite)->Unit(benchmark::kMillisecond)->Iterations(2);

}  // namespace

BENCHMARK_MAIN();
