#include <benchmark/benchmark.h>

#include "wdparam/field.hpp"

using namespace wdparam;

static void BM_field_mul(benchmark::State& state) {
    FieldContext K(static_cast<unsigned>(state.range(0)), 5);
    FieldElem a = FieldElem::zeta(&K, 1) + FieldElem::sqrt_q_pow(&K, 1);
    FieldElem b = FieldElem::zeta(&K, 2) - FieldElem::from_mpq(&K, mpq_class(3, 7));
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_field_mul)->Arg(3)->Arg(8)->Arg(12);

static void BM_field_inv(benchmark::State& state) {
    FieldContext K(static_cast<unsigned>(state.range(0)), 5);
    FieldElem a = FieldElem::zeta(&K, 1) + FieldElem::sqrt_q_pow(&K, 1) +
                  FieldElem::from_int(&K, 2);
    for (auto _ : state) benchmark::DoNotOptimize(a.inv());
}
BENCHMARK(BM_field_inv)->Arg(3)->Arg(8)->Arg(12);
