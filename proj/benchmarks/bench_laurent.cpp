#include <benchmark/benchmark.h>

#include "esum/laurent.hpp"
#include "esum/rng.hpp"

using namespace esum;

static void BM_Evaluate(benchmark::State& state) {
    const LaurentPolynomial g =
        build_g(static_cast<std::uint64_t>(state.range(0)));
    SplitMix64 rng(1);
    std::vector<double> phases(g.num_vars());
    for (auto& p : phases) p = rng.next_unit();
    const TorusPoint pt{phases};
    for (auto _ : state) benchmark::DoNotOptimize(evaluate(g, pt));
}
BENCHMARK(BM_Evaluate)->Arg(3)->Arg(9)->Arg(25);

static void BM_SampleImage(benchmark::State& state) {
    const LaurentPolynomial g = build_g(9);
    for (auto _ : state)
        benchmark::DoNotOptimize(
            sample_image(g, static_cast<std::uint64_t>(state.range(0)), 7, 1));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SampleImage)->Arg(10000)->Arg(100000);
