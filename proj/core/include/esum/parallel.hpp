#pragma once

#include <atomic>
#include <cstdint>
#include <thread>
#include <vector>

namespace esum {

inline unsigned default_workers() {
    unsigned n = std::thread::hardware_concurrency();
    return n == 0 ? 1 : n;
}

/// Splits [0, total) into fixed-size chunks and runs
/// fn(chunk_index, begin, end) on a pool of `workers` threads.
///
/// Chunk boundaries depend only on (total, chunk_size), never on the worker
/// count, so reductions that combine per-chunk results in chunk index order
/// are bit-for-bit reproducible for any number of workers.
template <typename Fn>
void parallel_chunks(std::uint64_t total, std::uint64_t chunk_size,
                     unsigned workers, Fn&& fn) {
    if (total == 0) return;
    if (chunk_size == 0) chunk_size = 1;
    const std::uint64_t num_chunks = (total + chunk_size - 1) / chunk_size;
    if (workers <= 1 || num_chunks == 1) {
        for (std::uint64_t c = 0; c < num_chunks; ++c) {
            const std::uint64_t begin = c * chunk_size;
            const std::uint64_t end = std::min(total, begin + chunk_size);
            fn(c, begin, end);
        }
        return;
    }
    std::atomic<std::uint64_t> next{0};
    auto worker = [&] {
        for (;;) {
            const std::uint64_t c = next.fetch_add(1);
            if (c >= num_chunks) return;
            const std::uint64_t begin = c * chunk_size;
            const std::uint64_t end = std::min(total, begin + chunk_size);
            fn(c, begin, end);
        }
    };
    std::vector<std::thread> pool;
    const unsigned n = std::min<std::uint64_t>(workers, num_chunks);
    pool.reserve(n);
    for (unsigned i = 0; i < n; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
}

/// Map-reduce over fixed chunks: make(begin, end) runs in parallel, and
/// consume(result) is called sequentially in ascending chunk order.
/// Memory is bounded by one in-flight wave of `workers` chunk results.
template <typename Make, typename Consume>
void ordered_parallel(std::uint64_t total, std::uint64_t chunk_size,
                      unsigned workers, Make&& make, Consume&& consume) {
    if (total == 0) return;
    if (chunk_size == 0) chunk_size = 1;
    const std::uint64_t num_chunks = (total + chunk_size - 1) / chunk_size;
    using Result = decltype(make(std::uint64_t{0}, std::uint64_t{0}));
    const std::uint64_t wave = std::max<std::uint64_t>(1, workers);
    std::vector<Result> results;
    for (std::uint64_t first = 0; first < num_chunks; first += wave) {
        const std::uint64_t count = std::min(wave, num_chunks - first);
        results.clear();
        results.resize(count);
        parallel_chunks(count, 1, workers, [&](std::uint64_t c, std::uint64_t,
                                               std::uint64_t) {
            const std::uint64_t begin = (first + c) * chunk_size;
            const std::uint64_t end = std::min(total, begin + chunk_size);
            results[c] = make(begin, end);
        });
        for (std::uint64_t c = 0; c < count; ++c) consume(std::move(results[c]));
    }
}

}  // namespace esum
