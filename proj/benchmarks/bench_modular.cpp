#include <benchmark/benchmark.h>

#include "esum/modular.hpp"

using namespace esum;

static void BM_FactorPrimePower(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(factor_prime_power(942841));  // 971^2
}
BENCHMARK(BM_FactorPrimePower);

static void BM_PrimitiveRoot(benchmark::State& state) {
    const Modulus m = factor_prime_power(static_cast<std::uint64_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(primitive_root(m));
}
BENCHMARK(BM_PrimitiveRoot)->Arg(6007)->Arg(942841);

static void BM_MultiplicativeOrder(benchmark::State& state) {
    const Modulus m = factor_prime_power(942841);
    for (auto _ : state) benchmark::DoNotOptimize(multiplicative_order(7, m));
}
BENCHMARK(BM_MultiplicativeOrder);

static void BM_EnumerateAdmissible(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate_admissible(3, 1, 10000));
}
BENCHMARK(BM_EnumerateAdmissible);
