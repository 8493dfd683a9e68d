#include <benchmark/benchmark.h>

#include "augsimp/kernels.hpp"
#include "augsimp/named_matrices.hpp"

using namespace augsimp;

namespace {

// Fresh matrices each iteration so memoized cells are not reused.
AugMatrix fresh_cad_plus() { return matmul(bin(), breve_cad_plus()); }

void BM_materialize_serial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::serial::materialize(fresh_cad_plus(), {-1, n}, {-1, n}));
}

void BM_materialize_parallel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::materialize(fresh_cad_plus(), {-1, n}, {-1, n}));
}

void BM_product_serial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::serial::product_window(bin(), bin_inv(), {-1, n}, {-1, n}));
}

void BM_product_parallel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::product_window(bin(), bin_inv(), {-1, n}, {-1, n}));
}

}  // namespace

BENCHMARK(BM_materialize_serial)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_materialize_parallel)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_product_serial)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_product_parallel)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
