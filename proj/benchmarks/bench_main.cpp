#include "sph/harness.hpp"
#include "sph/jack.hpp"
#include "sph/repcalc.hpp"
#include "sph/symfunc.hpp"

#include <benchmark/benchmark.h>

using namespace sph;

// Jack expansions and structure constants are memoized process-wide, so after the first
// iteration these measure lookups; the first-build cost shows up in the scan benchmarks.
static void BM_JackJ(benchmark::State& state) {
  auto parts = partitions_of(static_cast<int>(state.range(0)));
  for (auto _ : state)
    for (const auto& p : parts) benchmark::DoNotOptimize(jack_J(p).monomial_coeffs.size());
}
BENCHMARK(BM_JackJ)->DenseRange(4, 10, 2);

static void BM_StructureConstants(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  auto parts = partitions_of(n);
  for (auto _ : state)
    for (const auto& a : parts) benchmark::DoNotOptimize(structure_constants(a, Partition({n})).size());
}
BENCHMARK(BM_StructureConstants)->DenseRange(2, 5);

static void BM_InnerProductK(benchmark::State& state) {
  auto parts = partitions_of(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(
        inner_product_k(SymFuncExpr::single(Basis::jack, parts.front()), SymFuncExpr::single(Basis::jack, parts.back())));
}
BENCHMARK(BM_InnerProductK)->DenseRange(4, 8, 2);

static void BM_TensorMultiplicityE6Adjoint(benchmark::State& state) {
  auto c = instantiate_case("He.5");
  IVec theta = c->weight({0, 1});
  for (auto _ : state) benchmark::DoNotOptimize(tensor_multiplicity(theta, theta, theta, c->ambient));
}
BENCHMARK(BM_TensorMultiplicityE6Adjoint);

static void BM_LrCoefficient(benchmark::State& state) {
  Partition a({3, 2, 1}), b({2, 2, 1}), c({4, 3, 2, 1, 1});
  for (auto _ : state) benchmark::DoNotOptimize(lr_coefficient(a, b, c));
}
BENCHMARK(BM_LrCoefficient);

static void BM_EnumerateTriples(benchmark::State& state) {
  auto c = instantiate_case("Sph.A14");
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_triples(*c, state.range(0)).size());
}
BENCHMARK(BM_EnumerateTriples)->Arg(4)->Arg(6);

static void BM_ConjectureScan(benchmark::State& state) {
  RunOptions opt;
  opt.jobs = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(run_conjecture_check("Sph.A6", {{"n", 3}}, state.range(0), opt));
}
BENCHMARK(BM_ConjectureScan)->Args({4, 1})->Args({6, 1})->Args({6, 2})->Unit(benchmark::kMillisecond);

static void BM_IsogenySuite(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(run_isogeny_suite());
}
BENCHMARK(BM_IsogenySuite)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
