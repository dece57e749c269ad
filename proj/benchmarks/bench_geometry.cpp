#include <benchmark/benchmark.h>

#include "esum/geometry.hpp"
#include "esum/rng.hpp"

using namespace esum;

static void BM_InRegion(benchmark::State& state) {
    const std::uint64_t d = static_cast<std::uint64_t>(state.range(0));
    const HypocycloidRegion region = hypocycloid_region(d, 128 * d);
    SplitMix64 rng(3);
    for (auto _ : state) {
        const std::complex<double> z(rng.next_unit() * 2.0 * d - d,
                                     rng.next_unit() * 2.0 * d - d);
        benchmark::DoNotOptimize(in_region(region, z, 1e-3));
    }
}
BENCHMARK(BM_InRegion)->Arg(3)->Arg(7);

static void BM_MinkowskiRegion(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(minkowski_region(3, 2, 0.05));
}
BENCHMARK(BM_MinkowskiRegion)->Unit(benchmark::kMillisecond);
