#include <doctest.h>

#include <numeric>
#include <set>

#include "esum/cyclotomic.hpp"
#include "esum/modular.hpp"

using namespace esum;

namespace {

// independent oracle: least k with x^k = 1, by repeated multiplication
std::uint64_t brute_order(std::uint64_t x, std::uint64_t q) {
    std::uint64_t acc = x % q, k = 1;
    while (acc != 1) {
        acc = mul_mod(acc, x, q);
        ++k;
    }
    return k;
}

bool brute_admissible(std::uint64_t q, std::uint64_t d) {
    if (q < 3 || q % 2 == 0) return false;
    std::uint64_t p = 0;
    for (std::uint64_t f = 3; f <= q; f += 2) {
        if (q % f == 0) {
            p = f;
            break;
        }
    }
    std::uint64_t rest = q;
    while (rest % p == 0) rest /= p;
    if (rest != 1) return false;
    // p prime by construction (smallest odd factor of an odd number)
    return (p - 1) % d == 0;
}

}  // namespace

TEST_CASE("factor_prime_power") {
    const Modulus m = factor_prime_power(961);
    CHECK(m.p == 31);
    CHECK(m.alpha == 2);
    CHECK(m.phi_q == 31 * 30);

    const Modulus m7 = factor_prime_power(7);
    CHECK(m7.p == 7);
    CHECK(m7.alpha == 1);
    CHECK(m7.phi_q == 6);

    CHECK_THROWS_AS(factor_prime_power(12), NotOddPrimePower);
    CHECK_THROWS_AS(factor_prime_power(1), NotOddPrimePower);
    CHECK_THROWS_AS(factor_prime_power(2), NotOddPrimePower);
    CHECK_THROWS_AS(factor_prime_power(15), NotOddPrimePower);
}

TEST_CASE("is_d_admissible") {
    CHECK(is_d_admissible(151, 5));
    CHECK(is_d_admissible(3721, 5));  // 61^2
    CHECK(!is_d_admissible(8, 3));
    CHECK(!is_d_admissible(1, 1));
    for (std::uint64_t q = 1; q <= 600; ++q)
        for (std::uint64_t d : {1, 2, 3, 5, 9})
            CHECK(is_d_admissible(q, d) == brute_admissible(q, d));
}

TEST_CASE("enumerate_admissible") {
    auto qs = enumerate_admissible(3, 1, 50);
    std::vector<std::uint64_t> got;
    for (const auto& m : qs) got.push_back(m.q);
    CHECK(got == std::vector<std::uint64_t>{7, 13, 19, 31, 37, 43, 49});

    got.clear();
    for (const auto& m : enumerate_admissible(1, 3, 10)) got.push_back(m.q);
    CHECK(got == std::vector<std::uint64_t>{3, 5, 7, 9});

    CHECK(enumerate_admissible(5, 1, 10).empty());
}

TEST_CASE("multiplicative_order") {
    const Modulus m7 = factor_prime_power(7);
    CHECK(multiplicative_order(2, m7) == 3);
    CHECK(brute_order(2, 7) == 3);

    const Modulus m49 = factor_prime_power(49);
    CHECK(multiplicative_order(1, m49) == 1);
    CHECK_THROWS_AS(multiplicative_order(7, m49), NotAUnit);

    // oracle sweep over a few moduli
    for (std::uint64_t q : {9, 25, 27, 121, 169}) {
        const Modulus m = factor_prime_power(q);
        for (std::uint64_t x = 1; x < q; ++x) {
            if (x % m.p == 0) continue;
            CHECK(multiplicative_order(x, m) == brute_order(x, q));
        }
    }
}

TEST_CASE("primitive_root") {
    CHECK(primitive_root(factor_prime_power(7)) == 3);
    CHECK(primitive_root(factor_prime_power(9)) == 2);
    CHECK(primitive_root(factor_prime_power(3)) == 2);
    // brute-force smallest generator oracle
    for (std::uint64_t q : {5, 11, 25, 27, 49, 81, 125}) {
        const Modulus m = factor_prime_power(q);
        std::uint64_t g = 2;
        while (g % m.p == 0 || brute_order(g, q) != m.phi_q) ++g;
        CHECK(primitive_root(m) == g);
    }
}

TEST_CASE("element_of_order") {
    const Modulus m7 = factor_prime_power(7);
    const OrderDElement w = element_of_order(m7, 3);
    CHECK(w.w == 2);  // 3^(6/3) mod 7
    CHECK(multiplicative_order(w.w, m7) == 3);
    CHECK(element_of_order(m7, 3).w == w.w);  // deterministic

    CHECK(element_of_order(m7, 1).w == 1);
    CHECK_THROWS_AS(element_of_order(factor_prime_power(9), 3),
                    NotAdmissible);

    CHECK(order_d_element(m7, 3, 4).w == 4);
    CHECK_THROWS_AS(order_d_element(m7, 3, 6), NotAdmissible);
}

TEST_CASE("subgroup_of_order") {
    const Modulus m7 = factor_prime_power(7);
    const SubgroupSpec full = subgroup_of_order(m7, 6);
    auto elems = full.elements();
    std::set<std::uint64_t> s(elems.begin(), elems.end());
    CHECK(s == std::set<std::uint64_t>{1, 2, 3, 4, 5, 6});

    const SubgroupSpec h2 = subgroup_of_order(m7, 2);
    auto e2 = h2.elements();
    std::set<std::uint64_t> s2(e2.begin(), e2.end());
    CHECK(s2 == std::set<std::uint64_t>{1, 6});

    CHECK_THROWS_AS(subgroup_of_order(m7, 4), OrderDoesNotDivide);
}

TEST_CASE("subgroup closure and distinctness") {
    for (std::uint64_t q : {7, 31, 49, 121}) {
        const Modulus m = factor_prime_power(q);
        for (std::uint64_t h = 1; h <= m.phi_q; ++h) {
            if (m.phi_q % h != 0) continue;
            const auto elems = subgroup_of_order(m, h).elements();
            std::set<std::uint64_t> s(elems.begin(), elems.end());
            CHECK(s.size() == h);
            for (std::uint64_t a : s)
                for (std::uint64_t b : s) CHECK(s.count(mul_mod(a, b, q)) == 1);
        }
    }
}

TEST_CASE("unique subgroup of order d") {
    // {w^k} is exactly the solution set of x^d = 1, for admissible q.
    // Full sweep on small moduli; counting check up to 10^4.
    for (std::uint64_t d : {2, 3, 5, 6}) {
        for (const Modulus& m : enumerate_admissible(d, 3, 400)) {
            const OrderDElement w = element_of_order(m, d);
            std::set<std::uint64_t> powers;
            std::uint64_t x = 1;
            for (std::uint64_t k = 0; k < d; ++k) {
                powers.insert(x);
                x = mul_mod(x, w.w, m.q);
            }
            CHECK(powers.size() == d);
            std::set<std::uint64_t> roots;
            for (std::uint64_t y = 1; y < m.q; ++y)
                if (y % m.p != 0 && pow_mod(y, d, m.q) == 1) roots.insert(y);
            CHECK(roots == powers);
        }
    }
    // q <= 10^4: the number of solutions of x^d = 1 equals d, and every
    // solution is a power of the canonical element
    for (std::uint64_t d = 1; d <= 12; ++d) {
        std::uint64_t bad = 0;
        for (const Modulus& m : enumerate_admissible(d, 3, 10000)) {
            const OrderDElement w = element_of_order(m, d);
            std::set<std::uint64_t> powers;
            std::uint64_t x = 1;
            for (std::uint64_t k = 0; k < d; ++k) {
                powers.insert(x);
                x = mul_mod(x, w.w, m.q);
            }
            if (powers.size() != d) ++bad;
            std::uint64_t solutions = 0;
            for (std::uint64_t y = 1; y < m.q; ++y) {
                if (y % m.p == 0) continue;
                if (pow_mod(y, d, m.q) == 1) {
                    ++solutions;
                    if (powers.count(y) == 0) ++bad;
                }
            }
            if (solutions != d) ++bad;
        }
        CHECK(bad == 0);
    }
}

TEST_CASE("cyclotomic vanishing at order-d elements") {
    // phi_d(w) = 0 mod q, exact integer check (small sweep; the acceptance
    // suite runs the full one)
    for (std::uint64_t d = 1; d <= 12; ++d) {
        const IntPolynomial phi = cyclotomic_polynomial(d);
        for (const Modulus& m : enumerate_admissible(d, 3, 500)) {
            const OrderDElement w = element_of_order(m, d);
            CHECK(phi.evaluate_mod(w.w, m.q) == 0);
        }
    }
}
