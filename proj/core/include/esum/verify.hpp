#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "esum/laurent.hpp"

namespace esum::verify {

/// Outcome of one exact verification suite. `worst` is the suite's extremal
/// metric (largest residual, largest normalized excess, ...); failures carry
/// one human-readable line each.
struct SuiteResult {
    std::string suite;
    bool pass = true;
    std::uint64_t checks = 0;
    double worst = 0.0;
    std::vector<std::string> failures;
};

/// Exact cyclotomic vanishing: phi_d(x) = 0 (mod q) for every element x of
/// order d, every d-admissible q <= qmax, every d in [d_lo, d_hi].
SuiteResult lemma21(std::uint64_t d_lo, std::uint64_t d_hi,
                    std::uint64_t qmax);

/// Reduction identity audit at one modulus: `trials` random parameter
/// tuples, residual threshold 1e-9 d for both the f and (when coprime) g
/// routes.
SuiteResult identity(std::uint64_t d, const ExponentVector& m,
                     std::uint64_t q, std::uint64_t trials,
                     std::uint64_t seed);

/// Bezout certificates for random nonzero f with deg f < phi(d) and
/// coefficients in [-10, 10]: exact identity re-expansion, then divisibility
/// and valuation checks for every admissible q with n < q <= qmax, plus the
/// integer criterion for the vanishing of the complete sum.
SuiteResult myerson(std::span<const std::uint64_t> ds,
                    std::uint64_t num_polys, std::uint64_t qmax,
                    std::uint64_t seed);

/// |K_q(a, b)| <= 2 sqrt(q) + 1e-6 for random unit pairs over every odd
/// prime power q <= qmax.
SuiteResult weil(std::uint64_t qmax, std::uint64_t pairs_per_q,
                 std::uint64_t seed, unsigned workers = 1);

}  // namespace esum::verify
