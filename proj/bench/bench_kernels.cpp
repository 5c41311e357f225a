// Serial references against the OpenMP kernels. Run with
// --benchmark_counters_tabular=true for a side-by-side table.
#include <benchmark/benchmark.h>

#include "ssrr/certificate.hpp"
#include "ssrr/polar.hpp"
#include "ssrr/sweep.hpp"

using namespace ssrr;

namespace {

const UpstreamData kUpstream(GasModel(1.4), 1.0, {3.0, 0.0});

void BM_PolarSerial(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(polar_trace_serial(kUpstream, {0.0, 0.0}, static_cast<int>(state.range(0))));
    }
}

void BM_PolarParallel(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(polar_trace(kUpstream, {0.0, 0.0}, static_cast<int>(state.range(0))));
    }
}

SweepGrid bench_grid() { return make_sweep_grid(1.0, 85.0, 43, 1.5, 4.0, 8); }

void BM_SweepSerial(benchmark::State& state) {
    const SweepGrid grid = bench_grid();
    for (auto _ : state) benchmark::DoNotOptimize(sweep_transitions_serial(Scenario::supersonic_wedge, 1.4, grid, 64));
}

void BM_SweepParallel(benchmark::State& state) {
    const SweepGrid grid = bench_grid();
    for (auto _ : state) benchmark::DoNotOptimize(sweep_transitions(Scenario::supersonic_wedge, 1.4, grid, 64));
}

CornerFrame bench_frame() { return corner_frame_from_angles(40.0, 80.0, 0.6); }

void BM_CertificateSerial(benchmark::State& state) {
    const CornerFrame f = bench_frame();
    const double beta = choose_beta(f);
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(check_certificate_serial(f, beta, 1e-3, n, n));
}

void BM_CertificateParallel(benchmark::State& state) {
    const CornerFrame f = bench_frame();
    const double beta = choose_beta(f);
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(check_certificate(f, beta, 1e-3, n, n));
}

}  // namespace

BENCHMARK(BM_PolarSerial)->Arg(256)->Arg(4096);
BENCHMARK(BM_PolarParallel)->Arg(256)->Arg(4096);
BENCHMARK(BM_SweepSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CertificateSerial)->Arg(256)->Arg(1024);
BENCHMARK(BM_CertificateParallel)->Arg(256)->Arg(1024);

BENCHMARK_MAIN();
