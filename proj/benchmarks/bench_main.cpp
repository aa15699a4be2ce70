#include <benchmark/benchmark.h>

#include "wittorders/crossed.hpp"
#include "wittorders/lifting.hpp"

using namespace wittorders;

static void WittPolynomialGeneration(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gen_witt_polys(3, n));
}
BENCHMARK(WittPolynomialGeneration)->DenseRange(2, 4);

static void WittMultiplication(benchmark::State& state) {
  const WittRing w(FiniteField::prime(2), static_cast<std::size_t>(state.range(0)));
  const WittVector a = w.element(w.cardinality() - 1);
  const WittVector b = w.element(w.cardinality() / 3);
  for (auto _ : state) benchmark::DoNotOptimize(w.mul(a, b));
}
BENCHMARK(WittMultiplication)->DenseRange(2, 5);

static void HowellElimination(benchmark::State& state) {
  const auto size = static_cast<std::size_t>(state.range(0));
  const CoefficientRing ring(3, 4);
  Matrix m(size, size);
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j < size; ++j) {
      m.at(i, j) = ring.from_int(static_cast<std::int64_t>((i * 7 + j * 13 + i * j) % 81) * 3);
    }
  }
  for (auto _ : state) benchmark::DoNotOptimize(howell_form(ring, m));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(HowellElimination)->RangeMultiplier(2)->Range(4, 64)->Complexity();

static void AutomorphismCheck(benchmark::State& state) {
  const auto a = group_algebra(cyclic_group(static_cast<std::size_t>(state.range(0))), CoefficientRing(2, 3));
  const Matrix id = identity_matrix(a->ring(), a->rank());
  for (auto _ : state) benchmark::DoNotOptimize(check_automorphism(*a, id));
}
BENCHMARK(AutomorphismCheck)->DenseRange(2, 8, 2);

static void CocycleSolve(benchmark::State& state) {
  const auto a = group_algebra(symmetric_group_3(), CoefficientRing(3, 3));
  const Bimodule t = regular_bimodule(*a);
  const auto gens = cocycle_generators(*a, t);
  const Cochain2 g = unflatten(gens.front(), 36, 6);
  for (auto _ : state) benchmark::DoNotOptimize(solve_coboundary(*a, t, g, 1));
}
BENCHMARK(CocycleSolve)->Unit(benchmark::kMillisecond);

static void HigmanLift(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const CoefficientRing ring(3, n);
  const auto a = group_algebra(cyclic_group(3), ring);
  Matrix beta(3, 3);
  beta.at(0, 0) = beta.at(1, 2) = beta.at(2, 1) = ring.one();
  beta.at(1, 1) = ring.from_int(27);
  for (auto _ : state) benchmark::DoNotOptimize(higman_lift({a, beta}, {1, n, 64}));
}
BENCHMARK(HigmanLift)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

static void EnumerateCrossedProducts(benchmark::State& state) {
  const auto R = group_algebra(GroupTable(), CoefficientRing(3, 2));
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_crossed_products(R, cyclic_group(2), {}));
  }
}
BENCHMARK(EnumerateCrossedProducts)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
