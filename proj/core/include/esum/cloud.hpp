#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace esum {

/// A finite multiset of complex values (computed sums or Monte Carlo image
/// samples) together with enough metadata to reproduce it.
struct EmpiricalCloud {
    std::vector<std::complex<double>> values;
    std::string source;      // free-form descriptor of how it was produced
    std::uint64_t seed = 0;  // 0 when the source is deterministic

    std::uint64_t count() const { return values.size(); }
};

}  // namespace esum
