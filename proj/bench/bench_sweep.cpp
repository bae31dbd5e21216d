// Serial reference vs OpenMP sweep on the same configurations.

#include "orbint/harness.hpp"

#include <benchmark/benchmark.h>

using namespace orbint;

namespace {

SweepConfig config(Mode mode, std::size_t n, std::size_t samples) {
    SweepConfig c;
    c.mode = mode;
    c.n = n;
    c.samples = samples;
    c.bound = mode == Mode::Induction ? 1 : 2;
    return c;
}

void BM_FlSerial(benchmark::State& state) {
    auto c = config(Mode::Fl, static_cast<std::size_t>(state.range(0)), 64);
    for (auto _ : state) benchmark::DoNotOptimize(run_sweep_serial(c).counts.pass);
}

void BM_FlParallel(benchmark::State& state) {
    auto c = config(Mode::Fl, static_cast<std::size_t>(state.range(0)), 64);
    for (auto _ : state) benchmark::DoNotOptimize(run_sweep(c).counts.pass);
}

void BM_InvarianceSerial(benchmark::State& state) {
    auto c = config(Mode::Invariance, 2, 64);
    for (auto _ : state) benchmark::DoNotOptimize(run_sweep_serial(c).counts.pass);
}

void BM_InvarianceParallel(benchmark::State& state) {
    auto c = config(Mode::Invariance, 2, 64);
    for (auto _ : state) benchmark::DoNotOptimize(run_sweep(c).counts.pass);
}

}  // namespace

BENCHMARK(BM_FlSerial)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FlParallel)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_InvarianceSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_InvarianceParallel)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
