#include <benchmark/benchmark.h>

#include "segbuf/adversary.hpp"
#include "segbuf/oracle.hpp"

namespace {

using namespace segbuf;

// Restricted configs: m values, capacity B, 30 random steps.
static void BM_OptimalBenefitRestricted(benchmark::State& state) {
    const auto m = static_cast<std::size_t>(state.range(0));
    const auto b = static_cast<Count>(state.range(1));
    std::vector<Value> values;
    for (std::size_t i = 0; i < m; ++i) values.push_back(Value{1} << i);
    const auto config = SwitchConfig::restricted(values, b);
    const Trace trace = gen_random(config, 30, 4, 42);

    std::uint64_t states = 0;
    for (auto _ : state) {
        const auto result = optimal_benefit(config, trace);
        states = result.state_count;
        benchmark::DoNotOptimize(result.optimal_benefit);
    }
    state.counters["states"] = static_cast<double>(states);
    state.counters["events"] = static_cast<double>(trace.size());
}
BENCHMARK(BM_OptimalBenefitRestricted)->Args({2, 3})->Args({3, 3})->Args({5, 1})->Args({5, 3})->Unit(benchmark::kMicrosecond);

// Past the dense threshold the DP switches to sorted sparse layers.
static void BM_OptimalBenefitSparse(benchmark::State& state) {
    const auto config = SwitchConfig::restricted({1, 2, 3, 5, 8}, 16);
    const Trace trace = gen_random(config, static_cast<std::size_t>(state.range(0)), 4, 7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(optimal_benefit(config, trace).optimal_benefit);
    }
}
BENCHMARK(BM_OptimalBenefitSparse)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);

static void BM_BruteForce(benchmark::State& state) {
    const auto config = SwitchConfig::restricted({1, 2, 4, 8}, 2);
    const Trace trace = gen_random(config, 4, 2, 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(brute_force_benefit(config, trace));
    }
}
BENCHMARK(BM_BruteForce);

}  // namespace
