// Serial reference vs OpenMP kernels for the two data-parallel workloads.

#include <benchmark/benchmark.h>

#include "protest/presets.hpp"
#include "protest/sensitivity.hpp"
#include "protest/sweep.hpp"

namespace {

using namespace protest;

Execution mode(const benchmark::State& state) {
    return state.range(0) == 0 ? Execution::serial()
                               : Execution::parallel(static_cast<int>(state.range(0)));
}

void BM_Sweep(benchmark::State& state) {
    const Scenario base = preset_scenario("heatmap-A40").scenario;
    const auto tau_c = AxisSpec::range(AxisTarget::tau_c, 0.0, 1.0, 10.0);
    const auto v_c = AxisSpec::range(AxisTarget::v_c, 0.0, 1.0, 15.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_sweep_2d(base, tau_c, v_c, mode(state)));
    }
    state.SetItemsProcessed(state.iterations() * tau_c.values.size() * v_c.values.size());
}

void BM_Envelopes(benchmark::State& state) {
    const Scenario base = preset_scenario("cs2ii").scenario;
    const auto times = uniform_grid(base.settings.t_max, 10.0);
    constexpr std::size_t kDraws = 200;
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            global_envelopes(base, ParamRanges::defaults(), kDraws, 0, times, mode(state)));
    }
    state.SetItemsProcessed(state.iterations() * kDraws);
}

// Argument: 0 = serial reference, k > 0 = OpenMP with k threads.
BENCHMARK(BM_Sweep)->Arg(0)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Envelopes)->Arg(0)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
