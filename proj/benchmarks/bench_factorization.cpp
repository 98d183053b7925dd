#include "wilf/factorization.hpp"
#include "wilf/semigroup.hpp"

#include <benchmark/benchmark.h>

using wilf::NumericalSemigroup;

static void BM_LexMinFactorization(benchmark::State& state) {
    const auto sg = NumericalSemigroup::from_generators({11, 13, 17, 19});
    const wilf::Int n = sg.conductor() + sg.multiplicity() - 1;  // largest Apery value
    for (auto _ : state) {
        auto f = wilf::lex_min_factorization(sg, n);
        benchmark::DoNotOptimize(f);
    }
}
BENCHMARK(BM_LexMinFactorization);

static void BM_AllFactorizations(benchmark::State& state) {
    const auto sg = NumericalSemigroup::from_generators({5, 7, 9});
    for (auto _ : state) {
        auto fs = wilf::all_factorizations(sg, 90);
        benchmark::DoNotOptimize(fs);
    }
}
BENCHMARK(BM_AllFactorizations);

// One DP table set shared across all m residues; dominated by the coin sieve
// up to cap = c + m - 1.
static void BM_AperyFactorizationSet(benchmark::State& state) {
    const auto sg = NumericalSemigroup::from_generators({11, 13, 17, 19});
    for (auto _ : state) {
        auto inst = wilf::apery_factorization_set(sg);
        benchmark::DoNotOptimize(inst);
    }
}
BENCHMARK(BM_AperyFactorizationSet);
