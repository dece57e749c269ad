#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "esum/common.hpp"

namespace esum {

/// Dense univariate polynomial with arbitrary-precision integer
/// coefficients, index = degree, trailing zeros trimmed.
class IntPolynomial {
  public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> coeffs);
    IntPolynomial(std::initializer_list<std::int64_t> coeffs);

    static IntPolynomial monomial(std::size_t degree, BigInt coeff = 1);

    bool is_zero() const { return coeffs_.empty(); }
    /// Degree, or -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    BigInt coeff(std::size_t k) const {
        return k < coeffs_.size() ? coeffs_[k] : BigInt(0);
    }
    const std::vector<BigInt>& coefficients() const { return coeffs_; }

    BigInt evaluate(const BigInt& x) const;
    /// Horner evaluation of the reduction mod q at residue x.
    std::uint64_t evaluate_mod(std::uint64_t x, std::uint64_t q) const;

    IntPolynomial operator+(const IntPolynomial& o) const;
    IntPolynomial operator-(const IntPolynomial& o) const;
    IntPolynomial operator*(const IntPolynomial& o) const;
    bool operator==(const IntPolynomial& o) const = default;

    std::string to_string() const;

  private:
    std::vector<BigInt> coeffs_;
};

/// Same shape with rational coefficients; only what the euclidean algorithm
/// and the divisibility checks need.
class RatPolynomial {
  public:
    RatPolynomial() = default;
    explicit RatPolynomial(std::vector<BigRat> coeffs);
    explicit RatPolynomial(const IntPolynomial& p);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    BigRat coeff(std::size_t k) const {
        return k < coeffs_.size() ? coeffs_[k] : BigRat(0);
    }
    const std::vector<BigRat>& coefficients() const { return coeffs_; }

    /// True when every coefficient is an integer.
    bool is_integral() const;
    /// Conversion for integral polynomials (asserts is_integral()).
    IntPolynomial to_int() const;

    RatPolynomial operator+(const RatPolynomial& o) const;
    RatPolynomial operator-(const RatPolynomial& o) const;
    RatPolynomial operator*(const RatPolynomial& o) const;
    RatPolynomial operator*(const BigRat& s) const;
    bool operator==(const RatPolynomial& o) const = default;

  private:
    std::vector<BigRat> coeffs_;
};

struct PolyDivMod {
    RatPolynomial quotient;
    RatPolynomial remainder;
    bool exact = false;  // true when quotient and remainder are integral
};

/// Euclidean division a = q b + r with deg r < deg b over the rationals.
/// Throws DivisionByZeroPolynomial for b = 0.
PolyDivMod polynomial_divmod(const IntPolynomial& a, const IntPolynomial& b);
PolyDivMod polynomial_divmod(const RatPolynomial& a, const RatPolynomial& b);

/// The d-th cyclotomic polynomial, computed by the exact division
/// phi_d = (X^d - 1) / prod_{m | d, m < d} phi_m.
IntPolynomial cyclotomic_polynomial(std::uint64_t d);

/// Columns of the reduction X^k mod phi_d: column k holds the phi(d)
/// coefficients c[0..phi(d)-1] with X^k = sum_j c[j] X^j (mod phi_d).
struct ReductionTable {
    std::uint64_t d = 1;
    std::uint64_t totient = 1;                      // phi(d) = deg phi_d
    std::vector<std::vector<std::int64_t>> columns;  // d columns

    const std::vector<std::int64_t>& column(std::uint64_t k) const {
        return columns[k];
    }
    /// X^k mod phi_d is periodic in k with period d (phi_d divides X^d - 1),
    /// so arbitrary exponents reduce to column k mod d.
    const std::vector<std::int64_t>& column_mod(std::uint64_t k) const {
        return columns[k % d];
    }
};

ReductionTable reduction_table(std::uint64_t d);

}  // namespace esum
