#include "wilf/enumeration.hpp"

#include <benchmark/benchmark.h>

using wilf::SweepOptions;
using wilf::SweepSummary;

static void BM_EnumerateByGenus(benchmark::State& state) {
    const wilf::Int g_max = state.range(0);
    for (auto _ : state) {
        SweepSummary s = wilf::enumerate_by_genus(g_max, nullptr);
        benchmark::DoNotOptimize(s);
    }
    state.SetItemsProcessed(state.iterations() *
                            wilf::enumerate_by_genus(g_max, nullptr).total_visited);
}
BENCHMARK(BM_EnumerateByGenus)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);

static void BM_SweepAllChecks(benchmark::State& state) {
    const wilf::Int g_max = state.range(0);
    for (auto _ : state) {
        SweepSummary s = wilf::sweep_verify(g_max, wilf::all_checks());
        benchmark::DoNotOptimize(s);
    }
}
BENCHMARK(BM_SweepAllChecks)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);

static void BM_SweepParallel(benchmark::State& state) {
    SweepOptions opt;
    opt.traversal.workers = static_cast<int>(state.range(0));
    opt.traversal.split_genus = 8;
    for (auto _ : state) {
        SweepSummary s = wilf::sweep_verify(13, wilf::all_checks(), opt);
        benchmark::DoNotOptimize(s);
    }
}
BENCHMARK(BM_SweepParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
