#include "esum/modular.hpp"

#include <algorithm>
#include <numeric>

namespace esum {

std::vector<std::uint64_t> SubgroupSpec::elements() const {
    std::vector<std::uint64_t> out;
    out.reserve(order);
    std::uint64_t x = 1;
    for (std::uint64_t k = 0; k < order; ++k) {
        out.push_back(x);
        x = mul_mod(x, generator, modulus.q);
    }
    return out;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t q) {
    std::uint64_t acc = 1 % q;
    std::uint64_t b = base % q;
    while (exp > 0) {
        if (exp & 1) acc = mul_mod(acc, b, q);
        b = mul_mod(b, b, q);
        exp >>= 1;
    }
    return acc;
}

std::uint64_t inv_mod(std::uint64_t x, std::uint64_t q) {
    std::int64_t r0 = static_cast<std::int64_t>(q), r1 = static_cast<std::int64_t>(x % q);
    std::int64_t t0 = 0, t1 = 1;
    while (r1 != 0) {
        const std::int64_t k = r0 / r1;
        r0 -= k * r1;
        std::swap(r0, r1);
        t0 -= k * t1;
        std::swap(t0, t1);
    }
    if (r0 != 1)
        throw NotAUnit("not invertible modulo " + std::to_string(q));
    if (t0 < 0) t0 += static_cast<std::int64_t>(q);
    return static_cast<std::uint64_t>(t0);
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t f = 2; f * f <= n; f += (f == 2 ? 1 : 2)) {
        if (n % f == 0) {
            out.push_back(f);
            while (n % f == 0) n /= f;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

std::uint64_t euler_phi(std::uint64_t n) {
    std::uint64_t result = n;
    for (std::uint64_t f : prime_factors(n)) result -= result / f;
    return result;
}

namespace {

Modulus make_modulus(std::uint64_t q, std::uint64_t p, std::uint32_t alpha) {
    Modulus m;
    m.q = q;
    m.p = p;
    m.alpha = alpha;
    m.phi_q = (q / p) * (p - 1);
    return m;
}

}  // namespace

Modulus factor_prime_power(std::uint64_t q) {
    if (q < 3 || q % 2 == 0)
        throw NotOddPrimePower(std::to_string(q) + " is not an odd prime power");
    std::uint64_t p = 0;
    for (std::uint64_t f = 3; f * f <= q; f += 2) {
        if (q % f == 0) {
            p = f;
            break;
        }
    }
    if (p == 0) return make_modulus(q, q, 1);  // q itself is prime
    std::uint64_t rest = q;
    std::uint32_t alpha = 0;
    while (rest % p == 0) {
        rest /= p;
        ++alpha;
    }
    if (rest != 1)
        throw NotOddPrimePower(std::to_string(q) + " has two or more prime factors");
    return make_modulus(q, p, alpha);
}

bool is_d_admissible(std::uint64_t q, std::uint64_t d) {
    if (q < 3 || q % 2 == 0) return false;
    try {
        const Modulus m = factor_prime_power(q);
        return (m.p - 1) % d == 0;
    } catch (const NotOddPrimePower&) {
        return false;
    }
}

std::vector<Modulus> enumerate_admissible(std::uint64_t d, std::uint64_t lo,
                                          std::uint64_t hi) {
    std::vector<Modulus> out;
    for (std::uint64_t q = std::max<std::uint64_t>(lo, 3) | 1; q <= hi; q += 2)
        if (is_d_admissible(q, d)) out.push_back(factor_prime_power(q));
    return out;
}

std::uint64_t multiplicative_order(std::uint64_t x, const Modulus& m) {
    x %= m.q;
    if (x == 0 || x % m.p == 0)
        throw NotAUnit(std::to_string(x) + " is not a unit modulo " +
                       std::to_string(m.q));
    std::uint64_t order = m.phi_q;
    for (std::uint64_t r : prime_factors(m.phi_q))
        while (order % r == 0 && pow_mod(x, order / r, m.q) == 1) order /= r;
    return order;
}

std::uint64_t primitive_root(const Modulus& m) {
    const auto factors = prime_factors(m.phi_q);
    for (std::uint64_t g = 2;; ++g) {
        if (g % m.p == 0) continue;
        bool full = true;
        for (std::uint64_t r : factors) {
            if (pow_mod(g, m.phi_q / r, m.q) == 1) {
                full = false;
                break;
            }
        }
        if (full) return g;
    }
}

OrderDElement element_of_order(const Modulus& m, std::uint64_t d) {
    if (!is_d_admissible(m.q, d))
        throw NotAdmissible(std::to_string(m.q) + " is not " +
                            std::to_string(d) + "-admissible");
    const std::uint64_t g = primitive_root(m);
    return OrderDElement{m, d, pow_mod(g, m.phi_q / d, m.q)};
}

OrderDElement order_d_element(const Modulus& m, std::uint64_t d,
                              std::uint64_t w) {
    if (multiplicative_order(w, m) != d)
        throw NotAdmissible("residue does not have order " + std::to_string(d) +
                            " modulo " + std::to_string(m.q));
    return OrderDElement{m, d, w % m.q};
}

SubgroupSpec subgroup_of_order(const Modulus& m, std::uint64_t h) {
    if (h == 0 || m.phi_q % h != 0)
        throw OrderDoesNotDivide(std::to_string(h) + " does not divide phi(" +
                                 std::to_string(m.q) + ")");
    const std::uint64_t g = primitive_root(m);
    return SubgroupSpec{m, h, pow_mod(g, m.phi_q / h, m.q)};
}

}  // namespace esum
