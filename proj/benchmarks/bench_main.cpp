#include <benchmark/benchmark.h>

#include "sgraph/sgraph.hpp"

using namespace sgraph;

namespace {

SignedGraph pm_kn(int n, bool full) { return catalog(full ? Family::PlusMinusKnFull : Family::PlusMinusKn, n).graph; }

void BM_balance_partition(benchmark::State& state) {
  auto g = pm_kn(static_cast<int>(state.range(0)), false);
  for (auto _ : state) benchmark::DoNotOptimize(balance_partition(g));
}
BENCHMARK(BM_balance_partition)->DenseRange(4, 16, 4);

void BM_chromatic_delcon(benchmark::State& state) {
  auto g = pm_kn(static_cast<int>(state.range(0)), true);
  for (auto _ : state) benchmark::DoNotOptimize(chromatic_poly_delcon(g, false));
}
BENCHMARK(BM_chromatic_delcon)->DenseRange(2, 4);

void BM_chromatic_subset(benchmark::State& state) {
  auto g = pm_kn(static_cast<int>(state.range(0)), false);
  for (auto _ : state) benchmark::DoNotOptimize(chromatic_poly_subset(g, false));
}
BENCHMARK(BM_chromatic_subset)->DenseRange(2, 4);

void BM_characteristic_polynomial(benchmark::State& state) {
  auto g = pm_kn(static_cast<int>(state.range(0)), true);
  for (auto _ : state) benchmark::DoNotOptimize(characteristic_polynomial(g));
}
BENCHMARK(BM_characteristic_polynomial)->DenseRange(2, 4);

void BM_enumerate_acyclic(benchmark::State& state) {
  auto g = pm_kn(static_cast<int>(state.range(0)), false);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_acyclic(g));
}
BENCHMARK(BM_enumerate_acyclic)->DenseRange(2, 4);

void BM_frame_circuits(benchmark::State& state) {
  auto g = pm_kn(static_cast<int>(state.range(0)), false);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_frame_circuits(g));
}
BENCHMARK(BM_frame_circuits)->DenseRange(2, 4);

void BM_spectrum(benchmark::State& state) {
  auto a = adjacency_matrix(reduced_line_graph(complete_graph(static_cast<int>(state.range(0)))));
  for (auto _ : state) benchmark::DoNotOptimize(spectrum(a));
}
BENCHMARK(BM_spectrum)->DenseRange(4, 10, 2);

}  // namespace
BENCHMARK_MAIN();
