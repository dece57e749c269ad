#include <benchmark/benchmark.h>

#include "esum/cyclotomic.hpp"

using namespace esum;

static void BM_CyclotomicPolynomial(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(
            cyclotomic_polynomial(static_cast<std::uint64_t>(state.range(0))));
}
BENCHMARK(BM_CyclotomicPolynomial)->Arg(12)->Arg(105)->Arg(200);

static void BM_ReductionTable(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(
            reduction_table(static_cast<std::uint64_t>(state.range(0))));
}
BENCHMARK(BM_ReductionTable)->Arg(9)->Arg(49)->Arg(100);
