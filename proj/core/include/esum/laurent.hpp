#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "esum/cloud.hpp"
#include "esum/common.hpp"
#include "esum/cyclotomic.hpp"

namespace esum {

/// Exponent vector (m_1, ..., m_n) of a sum family
/// a_1 x^{m_1} + ... + a_n x^{m_n}.
struct ExponentVector {
    std::vector<std::int64_t> m;

    std::size_t size() const { return m.size(); }
    /// d_i = d / gcd(d, m_i); the order of w^{m_i} when w has order d.
    std::uint64_t d_i(std::uint64_t d, std::size_t i) const;
    /// True iff gcd(m_i, d) = 1 for every i.
    bool coprime_with(std::uint64_t d) const;
};

/// A point (e(phase_1), ..., e(phase_n)) of the torus; phases are stored
/// reduced into [0, 1).
struct TorusPoint {
    std::vector<double> phases;

    static TorusPoint from_phases(std::vector<double> raw);
    std::size_t size() const { return phases.size(); }
};

/// Sparse Laurent polynomial: integer coefficients, integer exponent
/// vectors. Terms are kept sorted lexicographically by exponent vector with
/// duplicates merged, so structural equality is canonical.
class LaurentPolynomial {
  public:
    struct Term {
        std::int64_t coeff = 0;
        std::vector<std::int64_t> exponents;
        bool operator==(const Term&) const = default;
    };

    LaurentPolynomial(std::uint32_t num_vars, std::vector<Term> terms);

    std::uint32_t num_vars() const { return num_vars_; }
    const std::vector<Term>& terms() const { return terms_; }

    /// Canonical text form, e.g. "1 * z1^-1 z2^-1 + 1 * z2 + 1 * z1".
    std::string to_string() const;

    bool operator==(const LaurentPolynomial&) const = default;

  private:
    std::uint32_t num_vars_;
    std::vector<Term> terms_;
};

/// The Laurent polynomial with one term per k in {0, ..., d-1}, the term for
/// k having exponent vector equal to column k of the reduction table of
/// phi_d. Its image carries the limiting distribution of the sums with
/// exponents coprime to d.
LaurentPolynomial build_g(std::uint64_t d);

/// The blocked variant: block i has phi(d_i) variables and uses the
/// reduction table of phi_{d_i}; columns are indexed by k mod d_i.
LaurentPolynomial build_f(std::uint64_t d, const ExponentVector& m);

/// Evaluate at a torus point. Phases are accumulated as reals and a single
/// complex exponential is taken per term. Throws ArityMismatch.
std::complex<double> evaluate(const LaurentPolynomial& poly,
                              const TorusPoint& point);

/// Monte Carlo image sampling: `count` evaluations at independent uniform
/// phase vectors drawn from the counter-based splitmix64 stream, so the
/// result depends only on (poly, count, seed).
EmpiricalCloud sample_image(const LaurentPolynomial& poly, std::uint64_t count,
                            std::uint64_t seed,
                            unsigned workers = 1);

}  // namespace esum
