// esum: restricted exponential sums over the order-d subgroup of (Z/qZ)^x,
// their limiting torus images, and the verification suites around them.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "esum/cli.hpp"
#include "esum/common.hpp"

namespace {

using namespace esum::cli;

std::vector<std::int64_t> parse_int_list(const std::string& text) {
    std::vector<std::int64_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(std::stoll(item));
    return out;
}

std::vector<RangeSpec> parse_range_list(const std::string& text) {
    std::vector<RangeSpec> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(RangeSpec::parse(item));
    return out;
}

// "--d 3..12" or "--d 5"
std::pair<std::uint64_t, std::uint64_t> parse_d_range(const std::string& text) {
    const auto pos = text.find("..");
    if (pos == std::string::npos) {
        const std::uint64_t d = std::stoull(text);
        return {d, d};
    }
    return {std::stoull(text.substr(0, pos)), std::stoull(text.substr(pos + 2))};
}

/// Output resolution: explicit --out wins ("-" = stdout); otherwise
/// ESUM_OUT_DIR/<default_name> when the environment variable is set;
/// otherwise stdout.
class OutputFile {
  public:
    OutputFile(const std::string& flag, const std::string& default_name) {
        std::string path = flag;
        if (path.empty()) {
            if (const char* dir = std::getenv("ESUM_OUT_DIR"))
                path = std::string(dir) + "/" + default_name;
            else
                path = "-";
        }
        if (path != "-") {
            file_.open(path);
            if (!file_) throw esum::Error("cannot open output file " + path);
            path_ = path;
        }
    }

    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }
    bool is_stdout() const { return !file_.is_open(); }
    const std::string& path() const { return path_; }

  private:
    std::ofstream file_;
    std::string path_;
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exponential sums over fixed-order subgroups of (Z/qZ)^x"};
    app.require_subcommand(1);

    std::string m_text, range_text, out_path, d_text = "1";
    std::uint64_t d = 1, q = 0, seed = 0, trials = 1000, qmax = 5000, mc = 1000000;
    unsigned workers = 0;
    std::uint32_t bins = 64;
    std::int64_t height = 3;
    bool weyl_only = false;
    double max_distance = -1.0, max_weyl = -1.0;
    std::string suite;
    std::uint64_t hypo_d = 0, resolution = 0;
    std::vector<std::uint64_t> minkowski_rb;
    double cell = 0.02;

    CLI::App* sums = app.add_subcommand("sums", "stream a family of sums as CSV");
    sums->add_option("--d", d, "order of the subgroup")->required();
    sums->add_option("--m", m_text, "exponents, e.g. 1,-1")->required();
    sums->add_option("--q", q, "modulus (odd prime power)")->required();
    sums->add_option("--range", range_text,
                     "per-coefficient ranges: full | fixed:V | subgroup:H");
    bool sums_json = false;
    sums->add_flag("--json", sums_json, "emit a JSON document instead of CSV");
    sums->add_option("--seed", seed, "run seed (recorded in the output)");
    sums->add_option("--workers", workers, "worker threads (0 = all)");
    sums->add_option("--out", out_path, "output path ('-' = stdout)");

    CLI::App* verify = app.add_subcommand("verify", "run an exact verification suite");
    verify->add_option("--suite", suite, "lemma21 | identity | myerson | weil")
        ->required();
    verify->add_option("--d", d_text, "d or range d_lo..d_hi");
    verify->add_option("--m", m_text, "exponents (identity suite)");
    verify->add_option("--q", q, "modulus (identity suite)");
    verify->add_option("--qmax", qmax, "largest modulus to check");
    verify->add_option("--trials", trials, "tuples / polynomials / pairs per q");
    verify->add_option("--seed", seed, "seed");
    verify->add_option("--workers", workers, "worker threads (0 = all)");
    verify->add_option("--out", out_path, "log path ('-' = stdout)");

    CLI::App* equi = app.add_subcommand("equidist", "distance and Weyl reports");
    equi->add_option("--d", d, "order of the subgroup")->required();
    equi->add_option("--m", m_text, "exponents")->required();
    equi->add_option("--q", q, "modulus (odd prime power)")->required();
    equi->add_option("--range", range_text, "per-coefficient ranges");
    equi->add_option("--mc", mc, "Monte Carlo reference sample count");
    equi->add_option("--bins", bins, "histogram bins per axis");
    equi->add_option("--height", height, "Weyl scan height");
    equi->add_flag("--weyl-only", weyl_only, "skip the histogram distance");
    equi->add_option("--threshold-distance", max_distance,
                     "fail when the histogram distance exceeds this");
    equi->add_option("--threshold-weyl", max_weyl,
                     "fail when the Weyl max exceeds this");
    equi->add_option("--seed", seed, "seed");
    equi->add_option("--workers", workers, "worker threads (0 = all)");
    equi->add_option("--out", out_path, "report path ('-' = stdout)");

    CLI::App* geom = app.add_subcommand("geometry", "boundary and raster exports");
    geom->add_option("--hypocycloid", hypo_d, "cusp count d >= 2");
    geom->add_option("--resolution", resolution, "polyline segments (>= 64 d)");
    geom->add_option("--minkowski", minkowski_rb, "r b: sum of r^(b-1) copies")
        ->expected(2);
    geom->add_option("--cell", cell, "raster cell size");
    geom->add_option("--out", out_path, "output path ('-' = stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (sums->parsed()) {
            SumsConfig config;
            config.d = d;
            config.m = parse_int_list(m_text);
            config.q = q;
            config.ranges = parse_range_list(range_text);
            config.json = sums_json;
            config.seed = seed;
            config.workers = workers;
            OutputFile out(out_path, sums_json ? "sums.json" : "sums.csv");
            // keep the data stream clean when it shares stdout
            return cmd_sums(config, out.stream(),
                            out.is_stdout() ? std::cerr : std::cout);
        }
        if (verify->parsed()) {
            VerifyConfig config;
            config.suite = suite;
            const auto [lo, hi] = parse_d_range(d_text);
            config.d_lo = lo;
            config.d_hi = hi;
            config.m = parse_int_list(m_text);
            config.q = q;
            config.qmax = qmax;
            config.trials = trials;
            // per-suite defaults: 200 pairs per q (weil), 20 polynomials
            // (myerson), 1000 tuples (identity)
            if (verify->get_option("--trials")->count() == 0) {
                if (suite == "weil") config.trials = 200;
                if (suite == "myerson") config.trials = 20;
            }
            config.seed = seed;
            config.workers = workers;
            OutputFile out(out_path, "verify.json");
            return cmd_verify(config, out.stream());
        }
        if (equi->parsed()) {
            EquidistConfig config;
            config.d = d;
            config.m = parse_int_list(m_text);
            config.q = q;
            config.ranges = parse_range_list(range_text);
            config.mc_samples = mc;
            config.bins = bins;
            config.weyl_height = height;
            config.weyl_only = weyl_only;
            if (max_distance >= 0) config.max_distance = max_distance;
            if (max_weyl >= 0) config.max_weyl = max_weyl;
            config.seed = seed;
            config.workers = workers;
            OutputFile out(out_path, "equidist.json");
            return cmd_equidist(config, out.stream());
        }
        if (geom->parsed()) {
            GeometryConfig config;
            if (!minkowski_rb.empty()) {
                config.kind = GeometryConfig::Kind::kMinkowski;
                config.r = minkowski_rb[0];
                config.b = minkowski_rb[1];
                config.cell = cell;
            } else {
                config.kind = GeometryConfig::Kind::kHypocycloid;
                config.d = hypo_d;
                config.resolution = resolution;
            }
            OutputFile out(out_path, "geometry.txt");
            return cmd_geometry(config, out.stream());
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
