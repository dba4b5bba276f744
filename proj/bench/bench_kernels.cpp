// Serial reference vs OpenMP kernels. Arg 0 in the parallel cases means the
// OpenMP default thread count. Parallel cases report wall time.

#include <benchmark/benchmark.h>

#include <cmath>

#include "wgtunnel/constants.hpp"
#include "wgtunnel/quadrature.hpp"
#include "wgtunnel/sweep.hpp"

using namespace wgtunnel;

namespace {

SweepJob te10_job(int points) {
    SweepJob job;
    job.geometry = {0.02286, 0.01016, 0.02286, 0.00508, 0.03, 2.25, 1.0, 1.0, 1.0};
    job.incident = te(1, 0);
    job.inner = te(1, 0);
    job.omega_min = 2e10;
    job.omega_max = 8e10;
    job.points = points;
    return job;
}

double field(double x, double y) { return std::sin(3 * kPi * x) * std::cos(2 * kPi * y) * std::exp(-x * y); }

void BM_SweepSerial(benchmark::State& state) {
    const auto job = te10_job(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(run_sweep_serial(job));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_SweepParallel(benchmark::State& state) {
    const auto job = te10_job(static_cast<int>(state.range(0)));
    const int workers = static_cast<int>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(run_sweep_parallel(job, workers));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_Quad2dSerial(benchmark::State& state) {
    const auto rule = make_rule(static_cast<int>(state.range(0)), 0, 1, 0, 1);
    for (auto _ : state) benchmark::DoNotOptimize(quad2d(field, rule));
}

void BM_Quad2dParallel(benchmark::State& state) {
    const auto rule = make_rule(static_cast<int>(state.range(0)), 0, 1, 0, 1);
    const int workers = static_cast<int>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(quad2d_parallel(field, rule, workers));
}

}  // namespace

BENCHMARK(BM_SweepSerial)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepParallel)->ArgsProduct({{10000, 100000}, {2, 4, 0}})->UseRealTime()->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Quad2dSerial)->Arg(64)->Arg(512)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_Quad2dParallel)->ArgsProduct({{64, 512}, {2, 4, 0}})->UseRealTime()->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
