#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace esum::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitPass = 0;
inline constexpr int kExitCheckFailure = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNotAdmissible = 3;

/// Parsed form of one --range entry: "full", "fixed:V" or "subgroup:H".
struct RangeSpec {
    enum class Kind { kFull, kFixed, kSubgroup } kind = Kind::kFull;
    std::int64_t fixed_value = 0;
    std::uint64_t subgroup_order = 1;

    static RangeSpec parse(const std::string& text);  // throws Error
    std::string to_string() const;
};

struct SumsConfig {
    std::uint64_t d = 1;
    std::vector<std::int64_t> m;
    std::uint64_t q = 0;
    std::vector<RangeSpec> ranges;  // empty = full per coefficient
    bool json = false;              // JSON document instead of CSV
    std::uint64_t seed = 0;
    unsigned workers = 1;
};

/// Streams the family as CSV (config comment, header, one row per record)
/// or as a JSON document with the same columns plus the run metadata, and
/// prints a one-line summary (count, max modulus, containment rate).
int cmd_sums(const SumsConfig& config, std::ostream& data_out,
             std::ostream& summary_out);

struct VerifyConfig {
    std::string suite;  // lemma21 | identity | myerson | weil
    std::uint64_t d_lo = 1, d_hi = 12;
    std::vector<std::int64_t> m;
    std::uint64_t q = 0;
    std::uint64_t qmax = 5000;
    std::uint64_t trials = 1000;
    std::uint64_t seed = 0;
    unsigned workers = 1;
};

/// Runs one exact suite and writes a JSON log with per-check failures.
int cmd_verify(const VerifyConfig& config, std::ostream& log_out);

struct EquidistConfig {
    std::uint64_t d = 1;
    std::vector<std::int64_t> m;
    std::uint64_t q = 0;
    std::vector<RangeSpec> ranges;
    std::uint64_t mc_samples = 1000000;
    std::uint32_t bins = 64;
    std::int64_t weyl_height = 3;
    bool weyl_only = false;
    std::optional<double> max_distance;   // threshold overrides
    std::optional<double> max_weyl;
    std::uint64_t seed = 0;
    unsigned workers = 1;
};

/// Builds the observed cloud and the Monte Carlo reference, reports the
/// histogram distance and the Weyl scan as JSON; exit 1 if a configured
/// threshold is exceeded.
int cmd_equidist(const EquidistConfig& config, std::ostream& report_out);

struct GeometryConfig {
    enum class Kind { kHypocycloid, kMinkowski } kind = Kind::kHypocycloid;
    std::uint64_t d = 3;           // hypocycloid cusp count
    std::uint64_t resolution = 0;  // 0 = 64 d
    std::uint64_t r = 3, b = 2;    // minkowski parameters
    double cell = 0.02;
};

/// Writes the boundary polyline CSV or the Minkowski raster.
int cmd_geometry(const GeometryConfig& config, std::ostream& out);

}  // namespace esum::cli
