#pragma once

#include <cstdint>

namespace esum {

// splitmix64 output function. All randomness in this library is derived from
// it so that results are reproducible across platforms and standard library
// implementations (std distributions are not portable).
inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

/// The i-th output of the splitmix64 stream with the given seed. Stateless,
/// so any sample of a run can be produced independently of the others; this
/// is what makes seeded sampling independent of the worker count.
inline std::uint64_t counter_hash(std::uint64_t seed, std::uint64_t index) {
    return mix64(seed + (index + 1) * kGolden);
}

/// Map 64 random bits to a double in [0, 1).
inline double unit_double(std::uint64_t bits) {
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

/// Sequential splitmix64 stream, for places where a plain stream is enough.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += kGolden;
        return mix64(state_);
    }

    /// Uniform integer in [0, n) via 128-bit multiply; n > 0.
    std::uint64_t next_below(std::uint64_t n) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next()) * n) >> 64);
    }

    double next_unit() { return unit_double(next()); }

  private:
    std::uint64_t state_;
};

}  // namespace esum
