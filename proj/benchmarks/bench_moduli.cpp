#include <benchmark/benchmark.h>

#include "wdparam/moduli_count.hpp"

using namespace wdparam;

static void BM_count_points_n1(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(count_points_pairs(1, 3, static_cast<unsigned long>(state.range(0))));
}
BENCHMARK(BM_count_points_n1)->Arg(5)->Arg(11);

static void BM_count_points_n2(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(count_points_pairs(2, 2, 3));
}
BENCHMARK(BM_count_points_n2);
