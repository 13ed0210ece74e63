#include <benchmark/benchmark.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "riley/closed_form.hpp"
#include "riley/oracle.hpp"
#include "riley/root_finder.hpp"

namespace {

using namespace riley;

void BM_s_eval(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  double z = 1.7;
  for (auto _ : state) {
    benchmark::DoNotOptimize(s_eval(k, z));
    z += 1e-12;  // defeat value caching
  }
}
BENCHMARK(BM_s_eval)->Arg(8)->Arg(64)->Arg(200);

void BM_riley_eval(benchmark::State& state) {
  const KnotParams p(static_cast<int>(state.range(0)),
                     static_cast<int>(state.range(1)));
  double y = 2.3;
  for (auto _ : state) {
    benchmark::DoNotOptimize(riley_eval(p, 1.8, y));
    y += 1e-12;
  }
}
BENCHMARK(BM_riley_eval)->Args({1, 1})->Args({5, 5})->Args({8, -8});

void BM_riley_from_matrices(benchmark::State& state) {
  const KnotParams p(static_cast<int>(state.range(0)),
                     static_cast<int>(state.range(1)));
  Cplx y(2.3, 0.1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(riley_from_matrices(p, Cplx(1.8), y));
    y += Cplx(1e-12, 0.0);
  }
}
BENCHMARK(BM_riley_from_matrices)->Args({1, 1})->Args({5, 5})->Args({8, -8});

void BM_riley_poly(benchmark::State& state) {
  const KnotParams p(static_cast<int>(state.range(0)),
                     static_cast<int>(state.range(1)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(riley_poly(p));
  }
}
BENCHMARK(BM_riley_poly)->Args({2, 2})->Args({4, 4})->Unit(benchmark::kMillisecond);

void BM_scan_roots(benchmark::State& state) {
  const KnotParams p(static_cast<int>(state.range(0)),
                     static_cast<int>(state.range(1)));
  const int r = static_cast<int>(state.range(2));
  for (auto _ : state) {
    benchmark::DoNotOptimize(scan_roots(p, r));
  }
}
BENCHMARK(BM_scan_roots)
    ->Args({1, 1, 5})
    ->Args({8, 8, 3})
    ->Args({-2, 5, 12})
    ->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
