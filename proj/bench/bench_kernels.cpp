// Serial reference kernels against their OpenMP versions.

#include <benchmark/benchmark.h>

#include "triwalk/kernels.hpp"
#include "triwalk/pyramid3d.hpp"
#include "triwalk/verify.hpp"

using namespace triwalk;
using kernels::Exec;

namespace {

Exec mode(const benchmark::State& state) { return state.range(0) ? Exec::Parallel : Exec::Serial; }

void BM_CountTable(benchmark::State& state) {
    const Simplex simplex(static_cast<int>(state.range(1)), 3);
    const DirectionVector dv = all_forward(40);
    for (auto _ : state) benchmark::DoNotOptimize(kernels::count_table(simplex, dv, mode(state)));
    state.SetLabel(std::to_string(simplex.size()) + " points");
}

void BM_GenericCountTable(benchmark::State& state) {
    const Simplex simplex(static_cast<int>(state.range(1)), 3);
    for (auto _ : state) benchmark::DoNotOptimize(kernels::generic_count_table(simplex, 30, mode(state)));
}

void BM_PyramidGf(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(pyramid_gf_coefficients(static_cast<int>(state.range(1)), 40, nullptr, mode(state)));
}

void BM_Verify(benchmark::State& state) {
    VerifyOptions o;
    o.max_L = 3;
    o.max_n = 5;
    o.exec = mode(state);
    for (auto _ : state) benchmark::DoNotOptimize(run_verify(Suite::All, o));
}

}  // namespace

// first argument: 0 serial, 1 OpenMP
BENCHMARK(BM_CountTable)->ArgsProduct({{0, 1}, {8, 16}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GenericCountTable)->ArgsProduct({{0, 1}, {8, 16}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PyramidGf)->ArgsProduct({{0, 1}, {4, 8}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Verify)->ArgsProduct({{0, 1}, {0}})->Unit(benchmark::kMillisecond)->Iterations(2);

BENCHMARK_MAIN();
