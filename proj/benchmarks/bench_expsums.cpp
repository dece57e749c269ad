#include <benchmark/benchmark.h>

#include "esum/expsums.hpp"

using namespace esum;

static void BM_RestrictedSum(benchmark::State& state) {
    const Modulus m = factor_prime_power(3721);
    const OrderDElement w = element_of_order(m, 5);
    const ExponentVector mv{{1, -1}};
    std::int64_t a = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            restricted_sum(w, mv, {{a, a + 1}}));
        a = (a + 1) % 3721;
    }
}
BENCHMARK(BM_RestrictedSum);

static void BM_SumFamilySweep(benchmark::State& state) {
    const Modulus m = factor_prime_power(151);
    SumFamilySpec spec{5, ExponentVector{{1, -1}},
                       {FullRingRange{}, FullRingRange{}}};
    const SumFamily family(spec, m);
    for (auto _ : state) {
        double acc = 0;
        family.for_each([&](const SumRecord& rec) { acc += rec.value.real(); });
        benchmark::DoNotOptimize(acc);
    }
    state.SetItemsProcessed(state.iterations() *
                            static_cast<std::int64_t>(family.size()));
}
BENCHMARK(BM_SumFamilySweep);

static void BM_KloostermanSweep(benchmark::State& state) {
    const Modulus m = factor_prime_power(6007);
    const UnitTables tables = UnitTables::build(m);
    std::int64_t a = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(kloosterman_complete(tables, a, 1));
        a = a % 6006 + 1;
    }
    state.SetItemsProcessed(state.iterations() *
                            static_cast<std::int64_t>(m.phi_q));
}
BENCHMARK(BM_KloostermanSweep);
