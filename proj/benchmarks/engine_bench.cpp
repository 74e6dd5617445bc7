#include <benchmark/benchmark.h>

#include "segbuf/adversary.hpp"
#include "segbuf/policies.hpp"

namespace {

using namespace segbuf;

static void BM_SimulateGreedy(benchmark::State& state) {
    const auto config = SwitchConfig::restricted({1, 2, 4, 8, 16}, 8);
    const Trace trace = gen_random(config, static_cast<std::size_t>(state.range(0)), 4, 11);
    GreedyPolicy greedy;
    for (auto _ : state) {
        benchmark::DoNotOptimize(simulate(config, trace, greedy).benefit);
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * trace.size()));
}
BENCHMARK(BM_SimulateGreedy)->Range(64, 1 << 14);

static void BM_LowerBoundConstruction(benchmark::State& state) {
    std::vector<Value> values;
    for (std::int64_t i = 1; i <= state.range(0); ++i) values.push_back(i);
    GreedyPolicy greedy;
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_lower_bound_instance(values, greedy).adv_benefit);
    }
}
BENCHMARK(BM_LowerBoundConstruction)->Arg(4)->Arg(32)->Arg(256);

}  // namespace
