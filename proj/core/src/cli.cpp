#include "esum/cli.hpp"

#include <cmath>
#include <complex>
#include <cstdio>
#include <memory>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "esum/equidist.hpp"
#include "esum/expsums.hpp"
#include "esum/geometry.hpp"
#include "esum/parallel.hpp"
#include "esum/verify.hpp"

namespace esum::cli {

namespace {

using nlohmann::json;

std::string fmt_g17(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

json ranges_json(const std::vector<RangeSpec>& ranges) {
    json out = json::array();
    for (const RangeSpec& r : ranges) out.push_back(r.to_string());
    return out;
}

unsigned effective_workers(unsigned w) {
    return w == 0 ? default_workers() : w;
}

std::vector<ParamRange> resolve_ranges(const std::vector<RangeSpec>& specs,
                                       std::size_t n, const Modulus& m) {
    std::vector<ParamRange> out;
    if (specs.empty()) {
        out.assign(n, FullRingRange{});
        return out;
    }
    if (specs.size() != n)
        throw RangeInconsistent("need one range per exponent");
    for (const RangeSpec& s : specs) {
        switch (s.kind) {
            case RangeSpec::Kind::kFull:
                out.emplace_back(FullRingRange{});
                break;
            case RangeSpec::Kind::kFixed:
                out.emplace_back(FixedRange{s.fixed_value});
                break;
            case RangeSpec::Kind::kSubgroup:
                out.emplace_back(
                    SubgroupRange{subgroup_of_order(m, s.subgroup_order)});
                break;
        }
    }
    return out;
}

// Containment oracle for the image of g_d when one exists in closed form:
// the hypocycloid region for prime d (and the segment for d = 2), the
// Minkowski raster for prime powers, the unit circle for d = 1.
class ImageRegion {
  public:
    static std::optional<ImageRegion> for_degree(std::uint64_t d,
                                                 unsigned workers) {
        ImageRegion region;
        region.d_ = d;
        if (d == 1) return region;
        const auto factors = prime_factors(d);
        if (factors.size() != 1) return std::nullopt;
        const std::uint64_t r = factors[0];
        if (r == d) {
            region.hypo_ = hypocycloid_region(d, 128 * d);
        } else {
            std::uint64_t b = 0, n = d;
            while (n > 1) {
                n /= r;
                ++b;
            }
            region.grid_ = minkowski_region(r, b, 0.02, workers);
        }
        return region;
    }

    bool contains(std::complex<double> z, double tol) const {
        if (d_ == 1) return std::abs(std::abs(z) - 1.0) <= tol;
        if (hypo_) return in_region(*hypo_, z, tol);
        return grid_contains(*grid_, z);
    }

  private:
    std::uint64_t d_ = 1;
    std::optional<HypocycloidRegion> hypo_;
    std::optional<GridRegion> grid_;
};

json sums_config_json(const SumsConfig& c) {
    json j;
    j["command"] = "sums";
    j["d"] = c.d;
    j["m"] = c.m;
    j["q"] = c.q;
    j["ranges"] = ranges_json(c.ranges);
    j["format"] = c.json ? "json" : "csv";
    j["seed"] = c.seed;
    return j;
}

}  // namespace

RangeSpec RangeSpec::parse(const std::string& text) {
    RangeSpec spec;
    if (text == "full") {
        spec.kind = Kind::kFull;
        return spec;
    }
    if (text.rfind("fixed:", 0) == 0) {
        spec.kind = Kind::kFixed;
        spec.fixed_value = std::stoll(text.substr(6));
        return spec;
    }
    if (text.rfind("subgroup:", 0) == 0) {
        spec.kind = Kind::kSubgroup;
        spec.subgroup_order = std::stoull(text.substr(9));
        return spec;
    }
    throw Error("bad range '" + text + "' (full | fixed:V | subgroup:H)");
}

std::string RangeSpec::to_string() const {
    switch (kind) {
        case Kind::kFull: return "full";
        case Kind::kFixed: return "fixed:" + std::to_string(fixed_value);
        case Kind::kSubgroup:
            return "subgroup:" + std::to_string(subgroup_order);
    }
    return "full";
}

int cmd_sums(const SumsConfig& config, std::ostream& data_out,
             std::ostream& summary_out) {
    if (!is_d_admissible(config.q, config.d)) {
        summary_out << "error: q=" << config.q << " is not " << config.d
                    << "-admissible\n";
        return kExitNotAdmissible;
    }
    const Modulus m = factor_prime_power(config.q);
    SumFamilySpec spec;
    spec.d = config.d;
    spec.m = ExponentVector{config.m};
    std::unique_ptr<SumFamily> family;
    try {
        spec.ranges = resolve_ranges(config.ranges, config.m.size(), m);
        family = std::make_unique<SumFamily>(spec, m);
    } catch (const Error& e) {
        summary_out << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    const auto image =
        spec.m.coprime_with(config.d)
            ? ImageRegion::for_degree(config.d,
                                      effective_workers(config.workers))
            : std::nullopt;

    if (config.json) {
        data_out << "{\n\"config\": " << sums_config_json(config).dump()
                 << ",\n\"columns\": [";
        for (std::size_t i = 0; i < config.m.size(); ++i)
            data_out << "\"a_" << (i + 1) << "\",";
        data_out << "\"re\",\"im\"],\n\"records\": [";
    } else {
        data_out << "# " << sums_config_json(config).dump() << "\n";
        for (std::size_t i = 0; i < config.m.size(); ++i)
            data_out << "a_" << (i + 1) << ",";
        data_out << "re,im\n";
    }

    struct Chunk {
        std::string text;
        double max_abs = 0.0;
        std::uint64_t contained = 0;
    };
    double max_abs = 0.0;
    std::uint64_t contained = 0;
    ordered_parallel(
        family->size(), 4096, effective_workers(config.workers),
        [&](std::uint64_t begin, std::uint64_t end) {
            Chunk chunk;
            std::ostringstream rows;
            for (std::uint64_t i = begin; i < end; ++i) {
                const SumRecord rec = family->record_at(i);
                if (config.json) {
                    rows << (i == 0 ? "\n[" : ",\n[");
                    for (const std::int64_t p : rec.params) rows << p << ",";
                    rows << fmt_g17(rec.value.real()) << ","
                         << fmt_g17(rec.value.imag()) << "]";
                } else {
                    for (const std::int64_t p : rec.params) rows << p << ",";
                    rows << fmt_g17(rec.value.real()) << ","
                         << fmt_g17(rec.value.imag()) << "\n";
                }
                chunk.max_abs = std::max(chunk.max_abs, std::abs(rec.value));
                if (image && image->contains(rec.value, 1e-3))
                    ++chunk.contained;
            }
            chunk.text = rows.str();
            return chunk;
        },
        [&](Chunk&& chunk) {
            data_out << chunk.text;
            max_abs = std::max(max_abs, chunk.max_abs);
            contained += chunk.contained;
        });
    if (config.json) data_out << "\n]\n}\n";

    summary_out << "count=" << family->size() << " max_abs=" << fmt_g17(max_abs)
                << " containment_rate=";
    if (image && family->size() > 0)
        summary_out << fmt_g17(static_cast<double>(contained) /
                               static_cast<double>(family->size()));
    else
        summary_out << "n/a";
    summary_out << "\n";
    return kExitPass;
}

int cmd_verify(const VerifyConfig& config, std::ostream& log_out) {
    json log;
    log["kind"] = "verify";
    log["suite"] = config.suite;
    log["seed"] = config.seed;

    verify::SuiteResult result;
    try {
        if (config.suite == "lemma21") {
            log["d"] = {config.d_lo, config.d_hi};
            log["qmax"] = config.qmax;
            result = verify::lemma21(config.d_lo, config.d_hi, config.qmax);
        } else if (config.suite == "identity") {
            if (config.q == 0 || config.m.empty()) {
                log_out << "{\"error\":\"identity suite needs --q and --m\"}\n";
                return kExitUsage;
            }
            if (!is_d_admissible(config.q, config.d_lo)) {
                log_out << "{\"error\":\"q not admissible\"}\n";
                return kExitNotAdmissible;
            }
            log["d"] = config.d_lo;
            log["m"] = config.m;
            log["q"] = config.q;
            log["trials"] = config.trials;
            result = verify::identity(config.d_lo, ExponentVector{config.m},
                                      config.q, config.trials, config.seed);
        } else if (config.suite == "myerson") {
            std::vector<std::uint64_t> ds;
            for (std::uint64_t d = config.d_lo; d <= config.d_hi; ++d)
                ds.push_back(d);
            log["d"] = {config.d_lo, config.d_hi};
            log["qmax"] = config.qmax;
            log["polys"] = config.trials;
            result = verify::myerson(ds, config.trials, config.qmax,
                                     config.seed);
        } else if (config.suite == "weil") {
            log["qmax"] = config.qmax;
            log["pairs"] = config.trials;
            result = verify::weil(config.qmax, config.trials, config.seed,
                                  effective_workers(config.workers));
        } else {
            log_out << "{\"error\":\"unknown suite\"}\n";
            return kExitUsage;
        }
    } catch (const Error& e) {
        log_out << json{{"error", e.what()}}.dump() << "\n";
        return kExitUsage;
    }

    log["checks"] = result.checks;
    log["worst"] = result.worst;
    log["failures"] = result.failures;
    log["pass"] = result.pass;
    log_out << log.dump(2) << "\n";
    return result.pass ? kExitPass : kExitCheckFailure;
}

int cmd_equidist(const EquidistConfig& config, std::ostream& report_out) {
    if (!is_d_admissible(config.q, config.d)) {
        report_out << "{\"error\":\"q not admissible\"}\n";
        return kExitNotAdmissible;
    }
    const Modulus m = factor_prime_power(config.q);
    const ExponentVector mvec{config.m};
    std::vector<ParamRange> ranges;
    try {
        ranges = resolve_ranges(config.ranges, config.m.size(), m);
    } catch (const Error& e) {
        report_out << json{{"error", e.what()}}.dump() << "\n";
        return kExitUsage;
    }
    const OrderDElement w = element_of_order(m, config.d);
    const bool coprime = mvec.coprime_with(config.d);

    json report;
    report["kind"] = "equidist";
    report["q"] = config.q;
    report["d"] = config.d;
    report["m"] = config.m;
    report["ranges"] = ranges_json(config.ranges);
    report["seed"] = config.seed;
    json metrics;
    json thresholds;
    bool pass = true;

    const CloudMode mode =
        coprime ? CloudMode::kSummed : CloudMode::kBlocked;
    const TupleCloud cloud = tuple_cloud(w, mvec, ranges, mode);

    // cap the scan height so the work (vectors x points) stays bounded; the
    // effective height is part of the report
    std::int64_t height = config.weyl_height;
    const auto scan_vectors = [&](std::int64_t h) {
        double total = 1.0;
        for (std::uint32_t j = 0; j < cloud.dim; ++j)
            total *= static_cast<double>(2 * h + 1);
        return (total - 1.0) / 2.0;
    };
    constexpr double kScanBudget = 3e9;
    while (height > 1 &&
           scan_vectors(height) * static_cast<double>(cloud.count()) >
               kScanBudget)
        --height;
    const WeylScanReport scan =
        weyl_scan(cloud, height, effective_workers(config.workers));
    metrics["weyl_max"] = scan.max_modulus;
    metrics["weyl_height_requested"] = config.weyl_height;
    metrics["weyl_height"] = height;
    metrics["cloud_points"] = cloud.count();
    if (config.max_weyl) {
        thresholds["weyl_max"] = *config.max_weyl;
        if (scan.max_modulus > *config.max_weyl) pass = false;
    }

    if (!config.weyl_only) {
        SumFamilySpec spec{config.d, mvec, ranges};
        SumFamily family(spec, m);
        EmpiricalCloud observed;
        observed.source = "family";
        observed.values.reserve(family.size());
        family.for_each([&](const SumRecord& rec) {
            observed.values.push_back(rec.value);
        });
        const LaurentPolynomial poly =
            coprime ? build_g(config.d) : build_f(config.d, mvec);
        report["reference_polynomial"] = poly.to_string();
        const EmpiricalCloud reference =
            sample_image(poly, config.mc_samples, config.seed,
                         effective_workers(config.workers));
        const BinGrid grid = BinGrid::for_degree(config.d, config.bins);
        const double distance = histogram_distance(observed, reference, grid);
        metrics["histogram_distance"] = distance;
        metrics["observed_points"] = observed.count();
        metrics["mc_samples"] = config.mc_samples;
        report["bin_grid"] = {{"nx", grid.nx},
                              {"ny", grid.ny},
                              {"xmin", grid.xmin},
                              {"xmax", grid.xmax},
                              {"ymin", grid.ymin},
                              {"ymax", grid.ymax}};
        if (config.max_distance) {
            thresholds["histogram_distance"] = *config.max_distance;
            if (distance > *config.max_distance) pass = false;
        }
    }

    report["metrics"] = metrics;
    report["thresholds"] = thresholds;
    report["pass"] = pass;
    report_out << report.dump(2) << "\n";
    return pass ? kExitPass : kExitCheckFailure;
}

int cmd_geometry(const GeometryConfig& config, std::ostream& out) {
    try {
        if (config.kind == GeometryConfig::Kind::kHypocycloid) {
            if (config.d < 2) throw Error("hypocycloid requires d >= 2");
            const std::uint64_t resolution =
                config.resolution == 0 ? 64 * config.d : config.resolution;
            const HypocycloidRegion region =
                hypocycloid_region(config.d, resolution);
            out << "# "
                << json{{"command", "geometry"},
                        {"hypocycloid", config.d},
                        {"resolution", resolution}}
                       .dump()
                << "\n";
            write_boundary_csv(region, out);
        } else {
            if (config.r < 2 || config.b < 1 || config.cell <= 0)
                throw Error("minkowski requires prime r >= 2, b >= 1, cell > 0");
            const GridRegion region =
                minkowski_region(config.r, config.b, config.cell);
            out << "# "
                << json{{"command", "geometry"},
                        {"minkowski", {config.r, config.b}},
                        {"cell", config.cell}}
                       .dump()
                << "\n";
            write_raster(region, out);
        }
    } catch (const Error& e) {
        out << "# error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitPass;
}

}  // namespace esum::cli
