// Serial reference histogram vs the OpenMP kernel on the same enumeration.

#include "chordlab/statistics.hpp"

#include <benchmark/benchmark.h>

namespace {

using chordlab::Filter;
using chordlab::Statistic;

void BM_HistogramSerial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(chordlab::histogram_serial(n, Filter::all(), Statistic::sc(1)));
  }
}

void BM_HistogramParallel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int threads = static_cast<int>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(chordlab::histogram(n, Filter::all(), Statistic::sc(1), threads));
  }
}

void BM_HistogramParallelLr(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(chordlab::histogram(n, Filter::all(), Statistic::lr(), 0));
  }
}

}  // namespace

BENCHMARK(BM_HistogramSerial)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HistogramParallel)
    ->ArgsProduct({{5, 6, 7}, {1, 2, 4, 8}})
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HistogramParallelLr)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
