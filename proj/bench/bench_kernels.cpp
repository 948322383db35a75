// Serial reference vs OpenMP kernels.
//
//   ./bench_kernels --benchmark_filter=Census

#include <benchmark/benchmark.h>

#include "spinor/bs_word.hpp"
#include "spinor/census.hpp"
#include "spinor/class_scan.hpp"
#include "spinor/cycle_lattice.hpp"

namespace {

std::vector<std::int64_t> weights_for(int n) {
  return spinor::cycles::anticanonical(spinor::bs::build_quiver(spinor::bs::spinor_word(n))).coeffs;
}

void BM_ClassScanSerial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto d = state.range(1);
  const auto w = weights_for(n);
  for (auto _ : state) benchmark::DoNotOptimize(spinor::kernels::scan_classes_serial(w, n - 2, d, false));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(spinor::kernels::count_classes(
                                                   static_cast<int>(w.size()), n - 2, d)));
}

void BM_ClassScanParallel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto d = state.range(1);
  const auto w = weights_for(n);
  for (auto _ : state) benchmark::DoNotOptimize(spinor::kernels::scan_classes_parallel(w, n - 2, d, false));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(spinor::kernels::count_classes(
                                                   static_cast<int>(w.size()), n - 2, d)));
}

void BM_CensusSerial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto p = static_cast<std::uint64_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(spinor::iso::skew_rank_census_serial(n, p));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(spinor::iso::skew_matrix_count(n, p)));
}

void BM_CensusParallel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto p = static_cast<std::uint64_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(spinor::iso::skew_rank_census(n, p));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(spinor::iso::skew_matrix_count(n, p)));
}

}  // namespace

BENCHMARK(BM_ClassScanSerial)->Args({6, 9})->Args({7, 10})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ClassScanParallel)->Args({6, 9})->Args({7, 10})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CensusSerial)->Args({5, 2})->Args({5, 3})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CensusParallel)->Args({5, 2})->Args({5, 3})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
