#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "esum/cloud.hpp"
#include "esum/cyclotomic.hpp"
#include "esum/expsums.hpp"
#include "esum/laurent.hpp"
#include "esum/modular.hpp"

namespace esum {

/// A nonzero integer frequency vector for Weyl sums.
struct WeylVector {
    std::vector<std::int64_t> y;

    std::size_t size() const { return y.size(); }
    std::int64_t height() const;  // max |y_i|
};

/// A multiset of points of [0,1)^dim with all coordinates of the form r/q.
/// Numerators are kept exactly, which is what makes complete-sum
/// cancellations detectable at the integer level.
struct TupleCloud {
    std::uint32_t dim = 0;
    std::uint64_t q = 1;
    std::vector<std::uint64_t> numerators;  // count * dim entries, row-major

    std::uint64_t count() const {
        return dim == 0 ? 0 : numerators.size() / dim;
    }
    std::vector<double> point(std::uint64_t i) const;
};

enum class CloudMode {
    kBlocked,  // per-parameter tuples, concatenated blocks a_i (w^{m_i})^j / q
    kSummed,   // phi(d)-tuples (sum_i a_i (w^{m_i})^j) / q; needs m coprime d
};

TupleCloud tuple_cloud(const OrderDElement& w, const ExponentVector& mvec,
                       const std::vector<ParamRange>& ranges, CloudMode mode);

/// Normalized Weyl sum (1/N) sum_points e(point . y). Computed through the
/// exact residue histogram of point . y mod q, so families that cancel as
/// complete geometric sums come out as exactly zero.
std::complex<double> weyl_sum(const TupleCloud& cloud, const WeylVector& y);

struct WeylScanEntry {
    WeylVector y;
    double modulus = 0.0;
};

struct WeylScanReport {
    std::vector<WeylScanEntry> entries;  // lexicographic in y
    double max_modulus = 0.0;
};

/// Evaluates weyl_sum for every y with 0 < height <= max_height, up to sign
/// (y and -y give equal moduli). The max modulus is the cloud's
/// equidistribution score.
WeylScanReport weyl_scan(const TupleCloud& cloud, std::int64_t max_height,
                         unsigned workers = 1);

/// Bezout certificate a phi_d + b f = n with integer cofactors and n >= 1.
/// Exists because phi_d is irreducible and deg f < phi(d).
struct MyersonCertificate {
    IntPolynomial f;
    std::uint64_t d = 1;
    BigInt n;
    IntPolynomial cofactor_phi;  // a(X)
    IntPolynomial cofactor_f;    // b(X)
};

struct MyersonCheckResult {
    Modulus q;
    std::uint64_t value_mod_q = 0;  // f(w_q) mod q
    std::uint32_t valuation = 0;    // beta_q = v_p(f(w_q)) of the lift
    bool passed_a = false;          // q does not divide f(w_q)
    bool passed_b = false;          // p^valuation <= n
};

/// Extended euclidean algorithm over the rationals on (phi_d, f), scaled by
/// the least positive integer that clears denominators. The returned n is
/// some valid constant, not the minimal one.
MyersonCertificate myerson_certificate(const IntPolynomial& f, std::uint64_t d);

/// Evaluates the certificate at every d-admissible q in [lo, hi] with
/// q > n, using the canonical element of order d and its lift in [0, q).
std::vector<MyersonCheckResult> myerson_check(const MyersonCertificate& cert,
                                              std::uint64_t lo,
                                              std::uint64_t hi);

/// (1/|H|) |sum_{a in H} e(a f(w) / q)|: the normalized subgroup sum whose
/// decay the equidistribution argument rests on. Measured, never proved.
double subgroup_weyl_profile(const SubgroupSpec& H, const IntPolynomial& f,
                             const OrderDElement& w);

/// Rectangular binning grid for 2-d histograms.
struct BinGrid {
    std::uint32_t nx = 64, ny = 64;
    double xmin = 0, xmax = 0, ymin = 0, ymax = 0;

    /// Default grid for degree-d sums: 64 x 64 over [-d-0.1, d+0.1]^2.
    static BinGrid for_degree(std::uint64_t d, std::uint32_t bins = 64);
};

/// Normalized bin frequencies of a cloud; out-of-range values are clamped
/// into the edge bins, so mass is preserved.
std::vector<double> bin_frequencies(const EmpiricalCloud& cloud,
                                    const BinGrid& grid);

/// L1 distance between normalized bin frequencies; lies in [0, 2]. Throws
/// EmptyCloud.
double histogram_distance(const EmpiricalCloud& observed,
                          const EmpiricalCloud& reference,
                          const BinGrid& grid);

struct KloostermanProfile {
    std::uint64_t q = 0;
    std::uint64_t count = 0;         // number of sums measured
    double zero_fraction = 0.0;      // fraction with |K|/sqrt(q) < 1e-9
    std::vector<std::uint64_t> histogram;  // bins over [-2, 2]
    std::vector<double> values;      // K_q(a,1)/sqrt(q)
};

/// Normalized complete Kloosterman sums K_q(a,1)/sqrt(q): a full sweep over
/// the units when count >= phi(q), otherwise a seeded random sample of
/// `count` units.
KloostermanProfile kloosterman_profile(const Modulus& m, std::uint64_t count,
                                       std::uint64_t seed,
                                       std::uint32_t bins = 32);

/// CDF of the Sato-Tate measure (1/2pi) sqrt(4-x^2) dx on [-2, 2].
double sato_tate_cdf(double x);
/// CDF of the continuous part of the prime-power Kloosterman limit measure,
/// (1/2pi) (4-x^2)^(-1/2) dx on [-2, 2]; total mass 1/2.
double arcsine_half_cdf(double x);

}  // namespace esum
