#include "esum/cyclotomic.hpp"

#include <cassert>
#include <limits>
#include <map>
#include <mutex>
#include <sstream>

#include "esum/modular.hpp"

namespace esum {

namespace {

template <typename T>
void trim(std::vector<T>& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

}  // namespace

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs)
    : coeffs_(std::move(coeffs)) {
    trim(coeffs_);
}

IntPolynomial::IntPolynomial(std::initializer_list<std::int64_t> coeffs) {
    coeffs_.assign(coeffs.begin(), coeffs.end());
    trim(coeffs_);
}

IntPolynomial IntPolynomial::monomial(std::size_t degree, BigInt coeff) {
    std::vector<BigInt> c(degree + 1, BigInt(0));
    c[degree] = std::move(coeff);
    return IntPolynomial(std::move(c));
}

BigInt IntPolynomial::evaluate(const BigInt& x) const {
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

std::uint64_t IntPolynomial::evaluate_mod(std::uint64_t x,
                                          std::uint64_t q) const {
    const BigInt bq = q;
    std::uint64_t acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        const BigInt r = ((*it % bq) + bq) % bq;
        acc = (mul_mod(acc, x % q, q) + static_cast<std::uint64_t>(r)) % q;
    }
    return acc;
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
    std::vector<BigInt> c(std::max(coeffs_.size(), o.coeffs_.size()), BigInt(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) c[i] += o.coeffs_[i];
    return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
    std::vector<BigInt> c(std::max(coeffs_.size(), o.coeffs_.size()), BigInt(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) c[i] -= o.coeffs_[i];
    return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<BigInt> c(coeffs_.size() + o.coeffs_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            c[i + j] += coeffs_[i] * o.coeffs_[j];
    return IntPolynomial(std::move(c));
}

std::string IntPolynomial::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const BigInt& c = coeffs_[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        if (!first) out << (c > 0 ? " + " : " - ");
        else if (c < 0) out << "-";
        first = false;
        const BigInt a = abs(c);
        if (a != 1 || k == 0) out << a.str();
        if (k > 0) {
            if (a != 1) out << "*";
            out << "X";
            if (k > 1) out << "^" << k;
        }
    }
    return out.str();
}

RatPolynomial::RatPolynomial(std::vector<BigRat> coeffs)
    : coeffs_(std::move(coeffs)) {
    trim(coeffs_);
}

RatPolynomial::RatPolynomial(const IntPolynomial& p) {
    coeffs_.reserve(p.coefficients().size());
    for (const BigInt& c : p.coefficients()) coeffs_.emplace_back(c);
}

bool RatPolynomial::is_integral() const {
    for (const BigRat& c : coeffs_)
        if (denominator(c) != 1) return false;
    return true;
}

IntPolynomial RatPolynomial::to_int() const {
    assert(is_integral());
    std::vector<BigInt> c;
    c.reserve(coeffs_.size());
    for (const BigRat& r : coeffs_) c.push_back(numerator(r));
    return IntPolynomial(std::move(c));
}

RatPolynomial RatPolynomial::operator+(const RatPolynomial& o) const {
    std::vector<BigRat> c(std::max(coeffs_.size(), o.coeffs_.size()), BigRat(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) c[i] += o.coeffs_[i];
    return RatPolynomial(std::move(c));
}

RatPolynomial RatPolynomial::operator-(const RatPolynomial& o) const {
    std::vector<BigRat> c(std::max(coeffs_.size(), o.coeffs_.size()), BigRat(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) c[i] -= o.coeffs_[i];
    return RatPolynomial(std::move(c));
}

RatPolynomial RatPolynomial::operator*(const RatPolynomial& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<BigRat> c(coeffs_.size() + o.coeffs_.size() - 1, BigRat(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            c[i + j] += coeffs_[i] * o.coeffs_[j];
    return RatPolynomial(std::move(c));
}

RatPolynomial RatPolynomial::operator*(const BigRat& s) const {
    std::vector<BigRat> c = coeffs_;
    for (BigRat& x : c) x *= s;
    return RatPolynomial(std::move(c));
}

PolyDivMod polynomial_divmod(const RatPolynomial& a, const RatPolynomial& b) {
    if (b.is_zero())
        throw DivisionByZeroPolynomial("polynomial division by zero");
    std::vector<BigRat> rem(a.coefficients());
    const int db = b.degree();
    std::vector<BigRat> quo;
    if (a.degree() >= db)
        quo.assign(static_cast<std::size_t>(a.degree() - db) + 1, BigRat(0));
    const BigRat lead = b.coeff(static_cast<std::size_t>(db));
    for (int k = a.degree(); k >= db; --k) {
        const BigRat f = rem[static_cast<std::size_t>(k)] / lead;
        if (f == 0) continue;
        quo[static_cast<std::size_t>(k - db)] = f;
        for (int j = 0; j <= db; ++j)
            rem[static_cast<std::size_t>(k - db + j)] -=
                f * b.coeff(static_cast<std::size_t>(j));
    }
    if (!rem.empty()) rem.resize(static_cast<std::size_t>(std::max(db, 0)));
    PolyDivMod out;
    out.quotient = RatPolynomial(std::move(quo));
    out.remainder = RatPolynomial(std::move(rem));
    out.exact = out.quotient.is_integral() && out.remainder.is_integral();
    return out;
}

PolyDivMod polynomial_divmod(const IntPolynomial& a, const IntPolynomial& b) {
    return polynomial_divmod(RatPolynomial(a), RatPolynomial(b));
}

IntPolynomial cyclotomic_polynomial(std::uint64_t d) {
    // phi_m for every divisor m of d, built in ascending order of m.
    std::vector<std::pair<std::uint64_t, IntPolynomial>> table;
    for (std::uint64_t m = 1; m <= d; ++m) {
        if (d % m != 0) continue;
        IntPolynomial num = IntPolynomial::monomial(m) - IntPolynomial{1};
        IntPolynomial den{1};
        for (const auto& [e, phi_e] : table)
            if (m % e == 0) den = den * phi_e;
        const PolyDivMod dm = polynomial_divmod(num, den);
        assert(dm.exact && dm.remainder.is_zero());
        table.emplace_back(m, dm.quotient.to_int());
    }
    return table.back().second;
}

namespace {

// memoized: tables are requested in hot loops (identity audits call build_f
// per trial) and are immutable once constructed
ReductionTable build_reduction_table(std::uint64_t d) {
    const IntPolynomial phi = cyclotomic_polynomial(d);
    const std::size_t deg = static_cast<std::size_t>(phi.degree());
    ReductionTable table;
    table.d = d;
    table.totient = deg;
    table.columns.reserve(d);
    std::vector<BigInt> cur(deg, BigInt(0));  // deg = phi(d) >= 1
    cur[0] = 1;
    for (std::uint64_t k = 0; k < d; ++k) {
        std::vector<std::int64_t> col(deg);
        for (std::size_t j = 0; j < deg; ++j) {
            assert(cur[j] >= std::numeric_limits<std::int64_t>::min() &&
                   cur[j] <= std::numeric_limits<std::int64_t>::max());
            col[j] = static_cast<std::int64_t>(cur[j]);
        }
        table.columns.push_back(std::move(col));
        // multiply by X and reduce the overflowing term against monic phi_d
        BigInt carry = cur.back();
        for (std::size_t j = deg; j-- > 1;) cur[j] = cur[j - 1];
        cur[0] = 0;
        if (carry != 0)
            for (std::size_t j = 0; j < deg; ++j) cur[j] -= carry * phi.coeff(j);
    }
    return table;
}

const ReductionTable& cached_reduction_table(std::uint64_t d) {
    static std::mutex mutex;
    static std::map<std::uint64_t, ReductionTable> cache;
    std::scoped_lock lock(mutex);
    auto it = cache.find(d);
    if (it == cache.end()) it = cache.emplace(d, build_reduction_table(d)).first;
    return it->second;
}

}  // namespace

ReductionTable reduction_table(std::uint64_t d) {
    return cached_reduction_table(d);
}

}  // namespace esum
