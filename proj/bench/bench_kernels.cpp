// Parallel kernels against their serial references.
#include <benchmark/benchmark.h>

#include <cmath>

#include "adelic/kernels.hpp"

using namespace adelic;
using namespace adelic::kernels;

namespace {
QuadraticPhase phaseAt(int level) { return {3, level, 7, 11, 5}; }

Complex integrand(double x) { return {std::exp(-x * x) * std::cos(3 * x), std::sin(x) * std::exp(-x * x)}; }

void histogramParallel(benchmark::State& state) {
    const int level = static_cast<int>(state.range(0));
    const QuadraticPhase q = phaseAt(level);
    const std::int64_t count = conductor(3, level);
    for (auto _ : state) benchmark::DoNotOptimize(phaseHistogram(q, count));
    state.SetItemsProcessed(state.iterations() * count);
}

void histogramSerial(benchmark::State& state) {
    const int level = static_cast<int>(state.range(0));
    const QuadraticPhase q = phaseAt(level);
    const std::int64_t count = conductor(3, level);
    for (auto _ : state) benchmark::DoNotOptimize(phaseHistogramSerial(q, count));
    state.SetItemsProcessed(state.iterations() * count);
}

void trapezoidParallel(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(trapezoid(integrand, -8, 8, state.range(0)));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void trapezoidSerialRef(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(trapezoidSerial(integrand, -8, 8, state.range(0)));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
}  // namespace

BENCHMARK(histogramParallel)->DenseRange(8, 12, 2)->UseRealTime();
BENCHMARK(histogramSerial)->DenseRange(8, 12, 2)->UseRealTime();
BENCHMARK(trapezoidParallel)->Range(1 << 12, 1 << 20)->UseRealTime();
BENCHMARK(trapezoidSerialRef)->Range(1 << 12, 1 << 20)->UseRealTime();

BENCHMARK_MAIN();
