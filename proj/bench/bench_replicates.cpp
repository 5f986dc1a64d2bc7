#include <thread>

#include <benchmark/benchmark.h>

#include "rrt/experiments.hpp"

namespace {

constexpr std::uint64_t kReps = 64;

void BM_SimulateRanksSerial(benchmark::State& state) {
    const auto n = static_cast<std::uint64_t>(state.range(0));
    const auto measures = rrt::standard_measures();
    for (auto _ : state) {
        benchmark::DoNotOptimize(rrt::simulate_ranks_serial(n, measures, kReps, 1));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(kReps));
}

void BM_SimulateRanksParallel(benchmark::State& state) {
    const auto n = static_cast<std::uint64_t>(state.range(0));
    const auto workers = static_cast<unsigned>(state.range(1));
    const auto measures = rrt::standard_measures();
    for (auto _ : state) {
        benchmark::DoNotOptimize(rrt::simulate_ranks(n, measures, kReps, 1, workers));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(kReps));
}

void parallel_args(benchmark::internal::Benchmark* b) {
    const auto hw = static_cast<std::int64_t>(std::max(1u, std::thread::hardware_concurrency()));
    for (std::int64_t n : {1'000, 10'000, 100'000}) {
        for (std::int64_t w = 2; w <= std::max<std::int64_t>(2, hw); w *= 2) b->Args({n, w});
    }
}

}  // namespace

BENCHMARK(BM_SimulateRanksSerial)->Arg(1'000)->Arg(10'000)->Arg(100'000)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SimulateRanksParallel)->Apply(parallel_args)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
