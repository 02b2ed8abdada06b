// Serial reference kernels against their OpenMP counterparts.
// Thread count follows NODOID_THREADS.

#include <benchmark/benchmark.h>

#include "nodoid/bifurcation.hpp"
#include "nodoid/geometry.hpp"
#include "nodoid/parallel.hpp"
#include "nodoid/ritz.hpp"

namespace {

void BM_PotentialMatrixSerial(benchmark::State& state) {
    const auto p = nodoid::from_mass(-2.0);
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(nodoid::ritz::potential_matrix(p, n));
}

void BM_PotentialMatrixParallel(benchmark::State& state) {
    const auto p = nodoid::from_mass(-2.0);
    const int n = static_cast<int>(state.range(0));
    state.counters["threads"] = nodoid::thread_limit();
    for (auto _ : state) benchmark::DoNotOptimize(nodoid::ritz::potential_matrix_parallel(p, n));
}

nodoid::bifurcation::ScanOptions scan_options() {
    nodoid::bifurcation::ScanOptions opts;
    opts.method = nodoid::bifurcation::Method::shoot;
    opts.with_known_pairs = false;
    return opts;
}

void BM_ScanSerial(benchmark::State& state) {
    const auto masses = nodoid::bifurcation::mass_grid(-20.0, -0.25, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(nodoid::bifurcation::scan_serial(masses, scan_options()));
}

void BM_ScanParallel(benchmark::State& state) {
    const auto masses = nodoid::bifurcation::mass_grid(-20.0, -0.25, static_cast<int>(state.range(0)));
    state.counters["threads"] = nodoid::thread_limit();
    for (auto _ : state) benchmark::DoNotOptimize(nodoid::bifurcation::scan(masses, scan_options()));
}

}  // namespace

BENCHMARK(BM_PotentialMatrixSerial)->Arg(13)->Arg(21)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PotentialMatrixParallel)->Arg(13)->Arg(21)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ScanSerial)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ScanParallel)->Arg(8)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
