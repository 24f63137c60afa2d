#include <benchmark/benchmark.h>

#include "wdparam/local_factors.hpp"
#include "wdparam/monodromy.hpp"
#include "wdparam/random_params.hpp"

using namespace wdparam;

static void BM_gamma_ratio_wd(benchmark::State& state) {
    FieldContext K(8, 3);
    ParamRng rng(42);
    WDParam w = random_wd(rng, &K, BaseField::F, static_cast<unsigned>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(gamma_ratio(w));
}
BENCHMARK(BM_gamma_ratio_wd)->Arg(2)->Arg(4)->Arg(6);

static void BM_pair_divisor(benchmark::State& state) {
    FieldContext K(12, 5);
    ParamRng rng(42);
    SemisimpleParam tau(&K, BaseField::F, {random_summand(rng, &K, BaseField::F, 2)});
    SemisimpleParam phi = random_ss(rng, &K, BaseField::F, 5);
    for (auto _ : state) benchmark::DoNotOptimize(big_gamma(tau, phi));
}
BENCHMARK(BM_pair_divisor);

static void BM_orbit_sweep_cell(benchmark::State& state) {
    FieldContext K(3, 2);
    SemisimpleParam r(&K, BaseField::F,
                      {IrredSummand{0, 1, FieldElem::one(&K)},
                       IrredSummand{0, 1, FieldElem::q_pow(&K, -1)},
                       IrredSummand{0, 1, FieldElem::q_pow(&K, -2)},
                       IrredSummand{0, 1, FieldElem::q_pow(&K, -3)}});
    for (auto _ : state) {
        auto orbits = enumerate_orbits(r, 6);
        Matrix e = twisted_fixed_space(r);
        for (const auto& o : orbits)
            benchmark::DoNotOptimize((ad_operator(o.representative) * e).rank());
    }
}
BENCHMARK(BM_orbit_sweep_cell);
