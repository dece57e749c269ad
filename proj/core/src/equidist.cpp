#include "esum/equidist.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "esum/parallel.hpp"
#include "esum/rng.hpp"

namespace esum {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi_v<double>;

// largest q for which the residue histogram evaluation is used
constexpr std::uint64_t kHistogramCutoff = 1 << 21;

}  // namespace

std::int64_t WeylVector::height() const {
    std::int64_t h = 0;
    for (std::int64_t v : y) h = std::max(h, v < 0 ? -v : v);
    return h;
}

std::vector<double> TupleCloud::point(std::uint64_t i) const {
    std::vector<double> out(dim);
    for (std::uint32_t j = 0; j < dim; ++j)
        out[j] = static_cast<double>(numerators[i * dim + j]) /
                 static_cast<double>(q);
    return out;
}

TupleCloud tuple_cloud(const OrderDElement& w, const ExponentVector& mvec,
                       const std::vector<ParamRange>& ranges, CloudMode mode) {
    if (mode == CloudMode::kSummed && !mvec.coprime_with(w.d))
        throw ModeRequiresCoprime(
            "summed tuples require every m_i coprime with d");
    const Modulus& m = w.modulus;
    const std::uint64_t q = m.q;

    SumFamilySpec spec{w.d, mvec, ranges};
    SumFamily family(spec, m);  // validates ranges, gives enumeration order

    const std::size_t n = mvec.size();
    std::vector<std::uint64_t> phi_di(n);
    std::uint64_t blocked_dim = 0;
    for (std::size_t i = 0; i < n; ++i) {
        phi_di[i] = euler_phi(mvec.d_i(w.d, i));
        blocked_dim += phi_di[i];
    }
    const std::uint64_t phi_d = euler_phi(w.d);

    // powers (w^{m_i})^j, laid out per block
    std::vector<std::vector<std::uint64_t>> pow(n);
    {
        std::uint64_t w_inv = 0;
        for (std::size_t i = 0; i < n; ++i) {
            const std::int64_t mi = mvec.m[i];
            std::uint64_t base;
            if (mi >= 0) {
                base = pow_mod(w.w, static_cast<std::uint64_t>(mi), q);
            } else {
                if (w_inv == 0) w_inv = inv_mod(w.w, q);
                base = pow_mod(w_inv, static_cast<std::uint64_t>(-mi), q);
            }
            const std::uint64_t len =
                mode == CloudMode::kBlocked ? phi_di[i] : phi_d;
            pow[i].resize(len);
            std::uint64_t t = 1;
            for (std::uint64_t j = 0; j < len; ++j) {
                pow[i][j] = t;
                t = mul_mod(t, base, q);
            }
        }
    }

    TupleCloud cloud;
    cloud.q = q;
    cloud.dim = static_cast<std::uint32_t>(
        mode == CloudMode::kBlocked ? blocked_dim : phi_d);
    cloud.numerators.reserve(cloud.dim * family.size());
    for (std::uint64_t idx = 0; idx < family.size(); ++idx) {
        const auto params = family.params_at(idx);
        std::vector<std::uint64_t> lifted(n);
        for (std::size_t i = 0; i < n; ++i) lifted[i] = lift_mod(params[i], q);
        if (mode == CloudMode::kBlocked) {
            for (std::size_t i = 0; i < n; ++i)
                for (std::uint64_t j = 0; j < phi_di[i]; ++j)
                    cloud.numerators.push_back(
                        mul_mod(lifted[i], pow[i][j], q));
        } else {
            for (std::uint64_t j = 0; j < phi_d; ++j) {
                std::uint64_t r = 0;
                for (std::size_t i = 0; i < n; ++i) {
                    r += mul_mod(lifted[i], pow[i][j], q);
                    if (r >= q) r -= q;
                }
                cloud.numerators.push_back(r);
            }
        }
    }
    return cloud;
}

std::complex<double> weyl_sum(const TupleCloud& cloud, const WeylVector& y) {
    if (y.size() != cloud.dim)
        throw ArityMismatch("weyl vector arity does not match cloud");
    const std::uint64_t q = cloud.q;
    const std::uint64_t n = cloud.count();
    if (n == 0) return 0.0;

    // reduce y mod q once; point . y mod q then stays in 64 bits
    std::vector<std::uint64_t> yr(cloud.dim);
    for (std::uint32_t j = 0; j < cloud.dim; ++j)
        yr[j] = lift_mod(y.y[j], q);

    auto dot_mod = [&](std::uint64_t i) {
        std::uint64_t r = 0;
        const std::uint64_t* num = &cloud.numerators[i * cloud.dim];
        for (std::uint32_t j = 0; j < cloud.dim; ++j) {
            r += mul_mod(num[j], yr[j], q);
            if (r >= q) r -= q;
        }
        return r;
    };

    if (q <= kHistogramCutoff && n >= q) {
        std::vector<std::uint64_t> counts(q, 0);
        std::uint64_t first = dot_mod(0);
        bool single = true;
        for (std::uint64_t i = 0; i < n; ++i) {
            const std::uint64_t r = dot_mod(i);
            single = single && r == first;
            ++counts[r];
        }
        // degenerate scans stay exact: one residue class only
        if (single) return unit_root(first, q);
        // A uniform residue histogram is a complete geometric sum: exactly 0.
        const bool uniform =
            n % q == 0 &&
            std::all_of(counts.begin(), counts.end(),
                        [&](std::uint64_t c) { return c == n / q; });
        if (uniform) return 0.0;
        // centering by the mean keeps cancellation at the count level rather
        // than in the trigonometric tail
        const double mean = static_cast<double>(n) / static_cast<double>(q);
        std::complex<double> acc = 0.0;
        for (std::uint64_t r = 0; r < q; ++r)
            acc += (static_cast<double>(counts[r]) - mean) * unit_root(r, q);
        return acc / static_cast<double>(n);
    }

    std::complex<double> acc = 0.0;
    for (std::uint64_t i = 0; i < n; ++i) acc += unit_root(dot_mod(i), q);
    return acc / static_cast<double>(n);
}

WeylScanReport weyl_scan(const TupleCloud& cloud, std::int64_t max_height,
                         unsigned workers) {
    WeylScanReport report;
    if (max_height <= 0 || cloud.dim == 0) return report;

    // Every y with 0 < height <= H, deduplicated up to global sign by
    // requiring the first nonzero entry to be positive; lexicographic order.
    const std::uint64_t base = static_cast<std::uint64_t>(2 * max_height + 1);
    std::uint64_t total = 1;
    for (std::uint32_t j = 0; j < cloud.dim; ++j) {
        total *= base;
        if (total > (std::uint64_t{1} << 24))
            throw Error("weyl_scan: too many frequency vectors; "
                        "reduce the height or the dimension");
    }
    std::vector<WeylVector> ys;
    for (std::uint64_t code = 0; code < total; ++code) {
        WeylVector y;
        y.y.resize(cloud.dim);
        std::uint64_t c = code;
        for (std::uint32_t j = cloud.dim; j-- > 0;) {
            y.y[j] = static_cast<std::int64_t>(c % base) - max_height;
            c /= base;
        }
        int first_sign = 0;
        for (std::int64_t v : y.y) {
            if (v != 0) {
                first_sign = v > 0 ? 1 : -1;
                break;
            }
        }
        if (first_sign != 1) continue;
        ys.push_back(std::move(y));
    }

    report.entries.resize(ys.size());
    parallel_chunks(ys.size(), 16, workers,
                    [&](std::uint64_t, std::uint64_t begin, std::uint64_t end) {
                        for (std::uint64_t i = begin; i < end; ++i)
                            report.entries[i] = WeylScanEntry{
                                ys[i], std::abs(weyl_sum(cloud, ys[i]))};
                    });
    for (const auto& entry : report.entries)
        report.max_modulus = std::max(report.max_modulus, entry.modulus);
    return report;
}

MyersonCertificate myerson_certificate(const IntPolynomial& f,
                                       std::uint64_t d) {
    if (f.is_zero()) throw ZeroPolynomial("f must be nonzero");
    const IntPolynomial phi = cyclotomic_polynomial(d);
    if (f.degree() >= phi.degree())
        throw DegreeTooLarge("deg f must be < phi(d)");

    // extended euclid over Q[X]: r0 = phi, r1 = f
    RatPolynomial r0(phi), r1(f);
    RatPolynomial s0(IntPolynomial{1}), s1;            // coefficients of phi
    RatPolynomial t0, t1(IntPolynomial{1});            // coefficients of f
    while (!r1.is_zero()) {
        PolyDivMod dm = polynomial_divmod(r0, r1);
        RatPolynomial s2 = s0 - dm.quotient * s1;
        RatPolynomial t2 = t0 - dm.quotient * t1;
        r0 = std::move(r1);
        r1 = std::move(dm.remainder);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    // phi_d is irreducible and deg f < deg phi_d, so the gcd is a nonzero
    // constant c with s0 phi + t0 f = c.
    if (r0.degree() != 0)
        throw Error("phi_d and f are not coprime; unexpected");
    const BigRat c = r0.coeff(0);
    RatPolynomial u = s0 * (BigRat(1) / c);
    RatPolynomial v = t0 * (BigRat(1) / c);

    // least positive t with t u and t v integral: lcm of all denominators
    BigInt t = 1;
    auto fold = [&t](const RatPolynomial& p) {
        for (const BigRat& r : p.coefficients()) {
            const BigInt den = denominator(r);
            t = t / gcd(t, den) * den;
        }
    };
    fold(u);
    fold(v);

    MyersonCertificate cert;
    cert.f = f;
    cert.d = d;
    cert.n = t;
    cert.cofactor_phi = (u * BigRat(t)).to_int();
    cert.cofactor_f = (v * BigRat(t)).to_int();
    return cert;
}

std::vector<MyersonCheckResult> myerson_check(const MyersonCertificate& cert,
                                              std::uint64_t lo,
                                              std::uint64_t hi) {
    std::vector<MyersonCheckResult> out;
    for (const Modulus& m : enumerate_admissible(cert.d, lo, hi)) {
        if (BigInt(m.q) <= cert.n) continue;
        const OrderDElement w = element_of_order(m, cert.d);
        const BigInt value = cert.f.evaluate(BigInt(w.w));  // lift in [0, q)

        MyersonCheckResult res;
        res.q = m;
        const BigInt bq = m.q;
        res.value_mod_q =
            static_cast<std::uint64_t>(((value % bq) + bq) % bq);
        std::uint32_t beta = 0;
        if (value == 0) {
            beta = m.alpha;  // cannot happen for q > n; fails both checks
        } else {
            BigInt v = abs(value);
            while (v % m.p == 0) {
                v /= m.p;
                ++beta;
            }
        }
        res.valuation = beta;
        res.passed_a = res.value_mod_q != 0;
        BigInt pbeta = 1;
        for (std::uint32_t i = 0; i < beta; ++i) pbeta *= m.p;
        res.passed_b = pbeta <= cert.n;
        out.push_back(std::move(res));
    }
    return out;
}

double subgroup_weyl_profile(const SubgroupSpec& H, const IntPolynomial& f,
                             const OrderDElement& w) {
    if (f.is_zero()) throw ZeroPolynomial("f must be nonzero");
    if (f.degree() >= static_cast<int>(euler_phi(w.d)))
        throw DegreeTooLarge("deg f must be < phi(d)");
    const std::uint64_t q = w.modulus.q;
    const std::uint64_t fw = f.evaluate_mod(w.w, q);
    std::complex<double> acc = 0.0;
    std::uint64_t a = 1;
    for (std::uint64_t k = 0; k < H.order; ++k) {
        acc += unit_root(mul_mod(a, fw, q), q);
        a = mul_mod(a, H.generator, q);
    }
    return std::abs(acc) / static_cast<double>(H.order);
}

BinGrid BinGrid::for_degree(std::uint64_t d, std::uint32_t bins) {
    const double r = static_cast<double>(d) + 0.1;
    return BinGrid{bins, bins, -r, r, -r, r};
}

std::vector<double> bin_frequencies(const EmpiricalCloud& cloud,
                                    const BinGrid& grid) {
    if (cloud.values.empty()) throw EmptyCloud("empty cloud");
    std::vector<double> freq(static_cast<std::size_t>(grid.nx) * grid.ny, 0.0);
    const double wx = (grid.xmax - grid.xmin) / grid.nx;
    const double wy = (grid.ymax - grid.ymin) / grid.ny;
    for (const auto& z : cloud.values) {
        auto ix = static_cast<std::int64_t>(
            std::floor((z.real() - grid.xmin) / wx));
        auto iy = static_cast<std::int64_t>(
            std::floor((z.imag() - grid.ymin) / wy));
        ix = std::clamp<std::int64_t>(ix, 0, grid.nx - 1);
        iy = std::clamp<std::int64_t>(iy, 0, grid.ny - 1);
        freq[static_cast<std::size_t>(iy) * grid.nx +
             static_cast<std::size_t>(ix)] += 1.0;
    }
    const double n = static_cast<double>(cloud.values.size());
    for (double& f : freq) f /= n;
    return freq;
}

double histogram_distance(const EmpiricalCloud& observed,
                          const EmpiricalCloud& reference,
                          const BinGrid& grid) {
    const auto a = bin_frequencies(observed, grid);
    const auto b = bin_frequencies(reference, grid);
    double dist = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) dist += std::abs(a[i] - b[i]);
    return dist;
}

KloostermanProfile kloosterman_profile(const Modulus& m, std::uint64_t count,
                                       std::uint64_t seed,
                                       std::uint32_t bins) {
    const UnitTables tables = UnitTables::build(m);
    KloostermanProfile profile;
    profile.q = m.q;
    profile.histogram.assign(bins, 0);
    const double sqrt_q = std::sqrt(static_cast<double>(m.q));

    const bool full = count == 0 || count >= m.phi_q;
    profile.count = full ? m.phi_q : count;
    profile.values.reserve(profile.count);
    SplitMix64 rng(seed);
    std::uint64_t zeros = 0;
    for (std::uint64_t i = 0; i < profile.count; ++i) {
        const std::uint64_t a =
            full ? tables.root_powers[i]
                 : tables.root_powers[rng.next_below(m.phi_q)];
        const double v =
            kloosterman_complete(tables, static_cast<std::int64_t>(a), 1)
                .real() / sqrt_q;
        profile.values.push_back(v);
        if (std::abs(v) < 1e-9) ++zeros;
        auto bin = static_cast<std::int64_t>(
            std::floor((v + 2.0) / 4.0 * bins));
        bin = std::clamp<std::int64_t>(bin, 0, bins - 1);
        ++profile.histogram[static_cast<std::size_t>(bin)];
    }
    profile.zero_fraction =
        static_cast<double>(zeros) / static_cast<double>(profile.count);
    return profile;
}

double sato_tate_cdf(double x) {
    x = std::clamp(x, -2.0, 2.0);
    return 0.5 + (x * std::sqrt(4.0 - x * x) / 2.0 + 2.0 * std::asin(x / 2.0)) /
                     kTwoPi;
}

double arcsine_half_cdf(double x) {
    x = std::clamp(x, -2.0, 2.0);
    return (std::asin(x / 2.0) + std::numbers::pi_v<double> / 2.0) / kTwoPi;
}

}  // namespace esum
