#include "esum/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "esum/cyclotomic.hpp"
#include "esum/equidist.hpp"
#include "esum/expsums.hpp"
#include "esum/modular.hpp"
#include "esum/parallel.hpp"
#include "esum/rng.hpp"

namespace esum::verify {

namespace {

void fail(SuiteResult& r, const std::string& what) {
    r.pass = false;
    if (r.failures.size() < 64) r.failures.push_back(what);
}

}  // namespace

SuiteResult lemma21(std::uint64_t d_lo, std::uint64_t d_hi,
                    std::uint64_t qmax) {
    SuiteResult result;
    result.suite = "lemma21";
    for (std::uint64_t d = d_lo; d <= d_hi; ++d) {
        const IntPolynomial phi = cyclotomic_polynomial(d);
        for (const Modulus& m : enumerate_admissible(d, 3, qmax)) {
            const OrderDElement w = element_of_order(m, d);
            // elements of order exactly d are w^k with gcd(k, d) = 1
            std::uint64_t x = 1;
            for (std::uint64_t k = 0; k < d; ++k) {
                if (k > 0 && std::gcd(k, d) == 1) {
                    ++result.checks;
                    if (phi.evaluate_mod(x, m.q) != 0) {
                        std::ostringstream msg;
                        msg << "phi_" << d << "(" << x << ") != 0 mod " << m.q;
                        fail(result, msg.str());
                    }
                } else if (k == 0 && d == 1) {
                    ++result.checks;
                    if (phi.evaluate_mod(1, m.q) != 0)
                        fail(result, "phi_1(1) != 0 mod " + std::to_string(m.q));
                }
                x = mul_mod(x, w.w, m.q);
            }
        }
    }
    return result;
}

SuiteResult identity(std::uint64_t d, const ExponentVector& m,
                     std::uint64_t q, std::uint64_t trials,
                     std::uint64_t seed) {
    SuiteResult result;
    result.suite = "identity";
    const Modulus mod = factor_prime_power(q);
    const OrderDElement w = element_of_order(mod, d);
    const double tol = 1e-9 * static_cast<double>(d);
    SplitMix64 rng(seed);
    std::vector<std::int64_t> a(m.size());
    for (std::uint64_t t = 0; t < trials; ++t) {
        for (auto& ai : a)
            ai = static_cast<std::int64_t>(rng.next_below(q));
        const double residual = verify_identity(w, m, a);
        result.worst = std::max(result.worst, residual);
        ++result.checks;
        if (residual >= tol) {
            std::ostringstream msg;
            msg << "identity residual " << residual << " at q=" << q
                << " trial " << t;
            fail(result, msg.str());
        }
    }
    return result;
}

SuiteResult myerson(std::span<const std::uint64_t> ds,
                    std::uint64_t num_polys, std::uint64_t qmax,
                    std::uint64_t seed) {
    SuiteResult result;
    result.suite = "myerson";
    SplitMix64 rng(seed);
    for (std::uint64_t d : ds) {
        const std::uint64_t phi_d = euler_phi(d);
        const IntPolynomial phi = cyclotomic_polynomial(d);
        for (std::uint64_t t = 0; t < num_polys; ++t) {
            std::vector<BigInt> coeffs(phi_d);
            bool nonzero = false;
            while (!nonzero) {
                for (auto& c : coeffs) {
                    c = static_cast<std::int64_t>(rng.next_below(21)) - 10;
                    if (c != 0) nonzero = true;
                }
            }
            const IntPolynomial f{std::vector<BigInt>(coeffs)};
            const MyersonCertificate cert = myerson_certificate(f, d);
            ++result.checks;
            // exact re-expansion of the Bezout identity
            const IntPolynomial lhs =
                cert.cofactor_phi * phi + cert.cofactor_f * cert.f;
            if (lhs.degree() != 0 || lhs.coeff(0) != cert.n || cert.n < 1) {
                fail(result, "bezout identity does not re-expand at d=" +
                                 std::to_string(d));
                continue;
            }
            for (const MyersonCheckResult& check :
                 myerson_check(cert, 3, qmax)) {
                ++result.checks;
                // the complete sum over Z/qZ is q [q | f(w_q)]: it vanishes
                // exactly iff check (a) holds
                if (!check.passed_a)
                    fail(result, "q | f(w_q) at q=" + std::to_string(check.q.q) +
                                     ", d=" + std::to_string(d));
                if (!check.passed_b)
                    fail(result,
                         "p^v_p(f(w_q)) > n at q=" + std::to_string(check.q.q) +
                             ", d=" + std::to_string(d));
            }
        }
    }
    return result;
}

SuiteResult weil(std::uint64_t qmax, std::uint64_t pairs_per_q,
                 std::uint64_t seed, unsigned workers) {
    SuiteResult result;
    result.suite = "weil";
    const std::vector<Modulus> moduli = enumerate_admissible(1, 3, qmax);
    struct ChunkOut {
        std::uint64_t checks = 0;
        double worst = -2.0;  // worst signed excess |K| - 2 sqrt(q)
        std::vector<std::string> failures;
    };
    std::vector<ChunkOut> outs((moduli.size() + 7) / 8);
    parallel_chunks(
        moduli.size(), 8, workers,
        [&](std::uint64_t chunk, std::uint64_t begin, std::uint64_t end) {
            ChunkOut& out = outs[chunk];
            for (std::uint64_t mi = begin; mi < end; ++mi) {
                const Modulus& m = moduli[mi];
                const UnitTables tables = UnitTables::build(m);
                const double bound = 2.0 * std::sqrt(static_cast<double>(m.q));
                SplitMix64 rng(mix64(seed ^ m.q));
                for (std::uint64_t t = 0; t < pairs_per_q; ++t) {
                    const auto a = static_cast<std::int64_t>(
                        tables.root_powers[rng.next_below(m.phi_q)]);
                    const auto b = static_cast<std::int64_t>(
                        tables.root_powers[rng.next_below(m.phi_q)]);
                    const double k =
                        std::abs(kloosterman_complete(tables, a, b));
                    ++out.checks;
                    out.worst = std::max(out.worst, k - bound);
                    if (k > bound + 1e-6) {
                        std::ostringstream msg;
                        msg << "|K_" << m.q << "(" << a << "," << b << ")| = "
                            << k << " > 2 sqrt(q) + 1e-6";
                        out.failures.push_back(msg.str());
                    }
                }
            }
        });
    result.worst = -2.0;
    for (const ChunkOut& out : outs) {
        result.checks += out.checks;
        result.worst = std::max(result.worst, out.worst);
        for (const std::string& f : out.failures) fail(result, f);
    }
    return result;
}

}  // namespace esum::verify
