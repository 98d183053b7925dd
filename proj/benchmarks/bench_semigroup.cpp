#include "wilf/semigroup.hpp"

#include <benchmark/benchmark.h>

using wilf::Int;
using wilf::NumericalSemigroup;

// Sieve cost grows with the conductor; the three fixtures span small, medium
// and wide-gap generator sets.

static void BM_FromGenerators(benchmark::State& state) {
    static const std::vector<std::vector<Int>> fixtures = {
        {5, 7, 9}, {101, 103, 107}, {30, 41, 59, 77}};
    const auto& gens = fixtures[static_cast<std::size_t>(state.range(0))];
    for (auto _ : state) {
        auto sg = NumericalSemigroup::from_generators(gens);
        benchmark::DoNotOptimize(sg);
    }
}
BENCHMARK(BM_FromGenerators)->Arg(0)->Arg(1)->Arg(2);

static void BM_AperySet(benchmark::State& state) {
    const auto sg = NumericalSemigroup::from_generators({101, 103, 107});
    for (auto _ : state) {
        auto ap = sg.apery_set();
        benchmark::DoNotOptimize(ap);
    }
}
BENCHMARK(BM_AperySet);

static void BM_PseudoFrobenius(benchmark::State& state) {
    const auto sg = NumericalSemigroup::from_generators({101, 103, 107});
    for (auto _ : state) {
        auto pf = sg.pseudo_frobenius();
        benchmark::DoNotOptimize(pf);
    }
}
BENCHMARK(BM_PseudoFrobenius);
