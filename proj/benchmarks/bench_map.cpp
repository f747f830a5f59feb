#include <benchmark/benchmark.h>

#include "duopoly/fixed_points.hpp"
#include "duopoly/model.hpp"
#include "duopoly/orbits.hpp"
#include "duopoly/stability.hpp"

using namespace duopoly;

namespace {

const ModelParams kSet{0.16, 0.9, 0.46, 0.7, 105.0};

void BM_StepZw(benchmark::State& state) {
    const auto tp = transform_params(kSet);
    DiffSumState s{-0.1, 0.3};
    for (auto _ : state) {
        s = step_zw(s, tp);
        benchmark::DoNotOptimize(s);
    }
}
BENCHMARK(BM_StepZw);

void BM_IterateOrbit(benchmark::State& state) {
    const auto tp = transform_params(kSet);
    OrbitConfig cfg;
    cfg.n_sample = state.range(0);
    for (auto _ : state) {
        auto orbit = iterate_orbit(cfg, tp);
        benchmark::DoNotOptimize(orbit);
    }
}
BENCHMARK(BM_IterateOrbit)->Arg(500)->Arg(5000);

void BM_FindFixedPoints(benchmark::State& state) {
    const auto tp = transform_params(kSet);
    for (auto _ : state) {
        auto roots = find_fixed_points(tp);
        benchmark::DoNotOptimize(roots);
    }
}
BENCHMARK(BM_FindFixedPoints);

void BM_Lyapunov(benchmark::State& state) {
    const auto tp = transform_params(kSet);
    for (auto _ : state) {
        benchmark::DoNotOptimize(lyapunov_largest({-0.1, 0.3}, tp));
    }
}
BENCHMARK(BM_Lyapunov);

}  // namespace

BENCHMARK_MAIN();
