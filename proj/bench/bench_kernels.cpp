#include "support/builders.hpp"

#include "rsg/bitangent.hpp"
#include "rsg/error.hpp"
#include "rsg/shipped_examples.hpp"
#include "rsg/sweep.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace rsg;

namespace {

Graphic workload()
{
    std::mt19937_64 rng(2024);
    Graphic g = build::random_graphic(rng);
    while (g.components.size() < 3) g = build::random_graphic(rng);
    return g;
}

std::vector<double> census_angles(const Graphic& g)
{
    std::vector<double> out;
    for (int i = 1; i < 2000; ++i) {
        const double t = 1.5707963 * i / 2000.0;
        try {
            critical_census(g, t);
            out.push_back(t);
        } catch (const Error&) {
        }
    }
    return out;
}

void bitangents(benchmark::State& state, Execution execution)
{
    const Graphic g = workload();
    BitangentOptions options;
    options.execution = execution;
    for (auto _ : state) benchmark::DoNotOptimize(doubly_tangent_lines(g, options));
    state.counters["segments"] = static_cast<double>(g.segment_count());
}

void census_batch(benchmark::State& state, Execution execution)
{
    const Graphic g = workload();
    const std::vector<double> angles = census_angles(g);
    for (auto _ : state) benchmark::DoNotOptimize(critical_census_batch(g, angles, execution));
    state.counters["angles"] = static_cast<double>(angles.size());
}

void full_sweep(benchmark::State& state, Execution execution)
{
    const Graphic g = example_graphic("bitangent-pair");
    for (auto _ : state) benchmark::DoNotOptimize(analyze(g, execution));
}

} // namespace

BENCHMARK_CAPTURE(bitangents, serial, Execution::Serial)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bitangents, parallel, Execution::Parallel)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(census_batch, serial, Execution::Serial)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(census_batch, parallel, Execution::Parallel)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(full_sweep, serial, Execution::Serial)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(full_sweep, parallel, Execution::Parallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
