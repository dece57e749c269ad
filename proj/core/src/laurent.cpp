#include "esum/laurent.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include "esum/parallel.hpp"
#include "esum/rng.hpp"

namespace esum {

std::uint64_t ExponentVector::d_i(std::uint64_t d, std::size_t i) const {
    const std::uint64_t g = std::gcd(
        d, static_cast<std::uint64_t>(m[i] < 0 ? -m[i] : m[i]) % d);
    return d / g;  // gcd(d, 0) = d, so multiples of d give d_i = 1
}

bool ExponentVector::coprime_with(std::uint64_t d) const {
    for (std::size_t i = 0; i < m.size(); ++i)
        if (d_i(d, i) != d) return false;
    return true;
}

TorusPoint TorusPoint::from_phases(std::vector<double> raw) {
    for (double& x : raw) {
        x -= std::floor(x);
        if (x >= 1.0) x = 0.0;  // guards against floor rounding at 1-eps
    }
    return TorusPoint{std::move(raw)};
}

LaurentPolynomial::LaurentPolynomial(std::uint32_t num_vars,
                                     std::vector<Term> terms)
    : num_vars_(num_vars) {
    for (const Term& t : terms)
        if (t.exponents.size() != num_vars)
            throw ArityMismatch("term arity does not match num_vars");
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
        return a.exponents < b.exponents;
    });
    for (Term& t : terms) {
        if (!terms_.empty() && terms_.back().exponents == t.exponents)
            terms_.back().coeff += t.coeff;
        else
            terms_.push_back(std::move(t));
    }
    std::erase_if(terms_, [](const Term& t) { return t.coeff == 0; });
}

std::string LaurentPolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first_term = true;
    for (const Term& t : terms_) {
        if (!first_term) out << " + ";
        first_term = false;
        out << t.coeff;
        bool any_var = false;
        std::ostringstream mono;
        for (std::uint32_t v = 0; v < num_vars_; ++v) {
            const std::int64_t e = t.exponents[v];
            if (e == 0) continue;
            mono << (any_var ? " " : "") << "z" << (v + 1);
            if (e != 1) mono << "^" << e;
            any_var = true;
        }
        if (any_var) out << " * " << mono.str();
    }
    return out.str();
}

LaurentPolynomial build_g(std::uint64_t d) {
    const ReductionTable table = reduction_table(d);
    std::vector<LaurentPolynomial::Term> terms;
    terms.reserve(d);
    for (std::uint64_t k = 0; k < d; ++k)
        terms.push_back({1, table.column(k)});
    return LaurentPolynomial(static_cast<std::uint32_t>(table.totient),
                             std::move(terms));
}

LaurentPolynomial build_f(std::uint64_t d, const ExponentVector& m) {
    std::vector<ReductionTable> tables;
    tables.reserve(m.size());
    std::uint64_t num_vars = 0;
    for (std::size_t i = 0; i < m.size(); ++i) {
        tables.push_back(reduction_table(m.d_i(d, i)));
        num_vars += tables.back().totient;
    }
    std::vector<LaurentPolynomial::Term> terms;
    terms.reserve(d);
    for (std::uint64_t k = 0; k < d; ++k) {
        std::vector<std::int64_t> exps;
        exps.reserve(num_vars);
        for (const ReductionTable& t : tables) {
            const auto& col = t.column_mod(k);
            exps.insert(exps.end(), col.begin(), col.end());
        }
        terms.push_back({1, std::move(exps)});
    }
    return LaurentPolynomial(static_cast<std::uint32_t>(num_vars),
                             std::move(terms));
}

std::complex<double> evaluate(const LaurentPolynomial& poly,
                              const TorusPoint& point) {
    if (point.size() != poly.num_vars())
        throw ArityMismatch("torus point arity does not match polynomial");
    constexpr double two_pi = 2.0 * std::numbers::pi_v<double>;
    std::complex<double> acc = 0.0;
    for (const auto& term : poly.terms()) {
        double phase = 0.0;
        for (std::uint32_t v = 0; v < poly.num_vars(); ++v)
            phase += static_cast<double>(term.exponents[v]) * point.phases[v];
        phase -= std::floor(phase);
        acc += static_cast<double>(term.coeff) *
               std::complex<double>(std::cos(two_pi * phase),
                                    std::sin(two_pi * phase));
    }
    return acc;
}

EmpiricalCloud sample_image(const LaurentPolynomial& poly, std::uint64_t count,
                            std::uint64_t seed, unsigned workers) {
    const std::uint32_t n = poly.num_vars();
    EmpiricalCloud cloud;
    cloud.values.resize(count);
    cloud.seed = seed;
    cloud.source = "mc:" + poly.to_string();
    // Sample i draws its phases from fixed stream positions, so the cloud is
    // identical for any worker count or chunking.
    parallel_chunks(count, 8192, workers,
                    [&](std::uint64_t, std::uint64_t begin, std::uint64_t end) {
                        std::vector<double> phases(n);
                        for (std::uint64_t i = begin; i < end; ++i) {
                            for (std::uint32_t v = 0; v < n; ++v)
                                phases[v] = unit_double(
                                    counter_hash(seed, i * n + v));
                            cloud.values[i] = evaluate(
                                poly, TorusPoint{phases});
                        }
                    });
    return cloud;
}

}  // namespace esum
