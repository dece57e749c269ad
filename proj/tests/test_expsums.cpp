#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <set>

#include "esum/expsums.hpp"
#include "esum/geometry.hpp"
#include "esum/rng.hpp"

using namespace esum;

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi_v<double>;

std::complex<double> e_frac(std::uint64_t r, std::uint64_t q) {
    return std::polar(1.0, two_pi * static_cast<double>(r) /
                               static_cast<double>(q));
}

// direct oracle: enumerate the solution set of x^d = 1 by scanning residues
std::complex<double> brute_theta(std::uint64_t q, std::uint64_t d,
                                 const std::vector<std::int64_t>& m,
                                 const std::vector<std::int64_t>& a) {
    const Modulus mod = factor_prime_power(q);
    std::complex<double> acc = 0.0;
    for (std::uint64_t x = 1; x < q; ++x) {
        if (x % mod.p == 0 || pow_mod(x, d, q) != 1) continue;
        std::uint64_t r = 0;
        for (std::size_t i = 0; i < m.size(); ++i) {
            const std::uint64_t xe =
                m[i] >= 0 ? pow_mod(x, static_cast<std::uint64_t>(m[i]), q)
                          : pow_mod(inv_mod(x, q),
                                    static_cast<std::uint64_t>(-m[i]), q);
            r = (r + mul_mod(lift_mod(a[i], q), xe, q)) % q;
        }
        acc += e_frac(r, q);
    }
    return acc;
}

}  // namespace

TEST_CASE("restricted_sum basics") {
    const Modulus m7 = factor_prime_power(7);
    const OrderDElement w = element_of_order(m7, 3);

    // all-zero parameters: theta = d
    const SumRecord zero = restricted_sum(w, ExponentVector{{1}}, {{0}});
    CHECK(zero.value == std::complex<double>(3.0));
    CHECK(zero.phase_exact == std::vector<std::uint64_t>{0, 0, 0});

    // quadratic Gauss sum: e(1/7)+e(2/7)+e(4/7) = (-1 + i sqrt 7)/2
    const SumRecord g = restricted_sum(w, ExponentVector{{1}}, {{1}});
    const std::complex<double> closed(-0.5, std::sqrt(7.0) / 2.0);
    CHECK(std::abs(g.value - closed) < 1e-12);
    std::multiset<std::uint64_t> phases(g.phase_exact.begin(),
                                        g.phase_exact.end());
    CHECK(phases == std::multiset<std::uint64_t>{1, 2, 4});

    // d = 1: subgroup {1}, theta = e(a/q)
    const OrderDElement one = element_of_order(m7, 1);
    const SumRecord s = restricted_sum(one, ExponentVector{{1}}, {{3}});
    CHECK(std::abs(s.value - e_frac(3, 7)) < 1e-15);
}

TEST_CASE("restricted_sum matches the residue-scan oracle") {
    struct Case {
        std::uint64_t q, d;
        std::vector<std::int64_t> m;
    };
    for (const Case& c : {Case{31, 3, {1}}, Case{31, 5, {1, -1}},
                          Case{43, 7, {3, 1}}, Case{19, 9, {4, 2, 1}},
                          Case{49, 3, {1, -1}}, Case{121, 5, {3}}}) {
        const Modulus mod = factor_prime_power(c.q);
        const OrderDElement w = element_of_order(mod, c.d);
        SplitMix64 rng(c.q * 1000 + c.d);
        for (int trial = 0; trial < 10; ++trial) {
            std::vector<std::int64_t> a(c.m.size());
            for (auto& ai : a)
                ai = static_cast<std::int64_t>(rng.next_below(c.q));
            const SumRecord rec = restricted_sum(w, ExponentVector{c.m}, a);
            CHECK(std::abs(rec.value - brute_theta(c.q, c.d, c.m, a)) < 1e-10);
            CHECK(std::abs(rec.value) <=
                  static_cast<double>(c.d) + 1e-12);
        }
    }
}

TEST_CASE("value is derived bitwise from phase_exact") {
    const Modulus m = factor_prime_power(151);
    const OrderDElement w = element_of_order(m, 5);
    SplitMix64 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        const std::vector<std::int64_t> a = {
            static_cast<std::int64_t>(rng.next_below(151)),
            static_cast<std::int64_t>(rng.next_below(151))};
        const SumRecord rec = restricted_sum(w, ExponentVector{{1, -1}}, a);
        for (std::uint64_t r : rec.phase_exact) CHECK(r < m.q);
        std::complex<double> again = 0.0;
        for (std::uint64_t r : rec.phase_exact) again += unit_root(r, m.q);
        CHECK(rec.value == again);  // bitwise
    }
}

TEST_CASE("lift invariance and conjugation symmetry") {
    const Modulus m = factor_prime_power(31);
    const OrderDElement w = element_of_order(m, 5);
    const ExponentVector mv{{1, -1}};
    const SumRecord base = restricted_sum(w, mv, {{7, 12}});
    const SumRecord shifted = restricted_sum(w, mv, {{7 + 31, 12 - 62}});
    CHECK(base.value == shifted.value);
    CHECK(base.phase_exact == shifted.phase_exact);

    const SumRecord negated = restricted_sum(w, mv, {{-7, -12}});
    CHECK(std::abs(negated.value - std::conj(base.value)) < 1e-12);
}

TEST_CASE("sum_family enumeration") {
    const Modulus m = factor_prime_power(151);

    SumFamilySpec spec;
    spec.d = 5;
    spec.m = ExponentVector{{1, -1}};
    spec.ranges = {FullRingRange{}, FullRingRange{}};
    const SumFamily family(spec, m);
    CHECK(family.size() == 151 * 151);
    // lexicographic, last coordinate fastest
    CHECK(family.params_at(0) == std::vector<std::int64_t>{0, 0});
    CHECK(family.params_at(1) == std::vector<std::int64_t>{0, 1});
    CHECK(family.params_at(151) == std::vector<std::int64_t>{1, 0});

    SumFamilySpec fixed;
    fixed.d = 3;
    fixed.m = ExponentVector{{1}};
    fixed.ranges = {FixedRange{0}};
    const Modulus m7 = factor_prime_power(7);
    const SumFamily single(fixed, m7);
    CHECK(single.size() == 1);
    CHECK(single.record_at(0).value == std::complex<double>(3.0));

    // subgroup of order 950 x fixed 1 at q = 1901 gives 950 records
    const Modulus m1901 = factor_prime_power(1901);
    SumFamilySpec sub;
    sub.d = 5;
    sub.m = ExponentVector{{1, -1}};
    sub.ranges = {SubgroupRange{subgroup_of_order(m1901, 950)}, FixedRange{1}};
    CHECK(SumFamily(sub, m1901).size() == 950);

    // inconsistent ranges throw
    SumFamilySpec bad;
    bad.d = 5;
    bad.m = ExponentVector{{1, -1}};
    bad.ranges = {FullRingRange{}};
    CHECK_THROWS_AS(SumFamily(bad, m), RangeInconsistent);
    SumFamilySpec alien;
    alien.d = 5;
    alien.m = ExponentVector{{1, -1}};
    alien.ranges = {SubgroupRange{subgroup_of_order(m7, 2)}, FullRingRange{}};
    CHECK_THROWS_AS(SumFamily(alien, m), RangeInconsistent);
}

TEST_CASE("family multiset is independent of the order-d element") {
    // reindexing the same subgroup: the per-parameter phase multisets agree
    const Modulus m = factor_prime_power(31);
    const ExponentVector mv{{1}};
    std::vector<OrderDElement> ws;
    for (std::uint64_t x = 2; x < 31; ++x)
        if (multiplicative_order(x, m) == 5) ws.push_back(order_d_element(m, 5, x));
    CHECK(ws.size() == 4);
    for (std::uint64_t a = 0; a < 31; ++a) {
        std::multiset<std::uint64_t> reference;
        for (std::size_t wi = 0; wi < ws.size(); ++wi) {
            const SumRecord rec = restricted_sum(
                ws[wi], mv, {{static_cast<std::int64_t>(a)}});
            std::multiset<std::uint64_t> phases(rec.phase_exact.begin(),
                                                rec.phase_exact.end());
            if (wi == 0)
                reference = phases;
            else
                CHECK(phases == reference);
        }
    }
}

TEST_CASE("family values lie in the closed-form image region") {
    // m coprime with d and d prime: theta values are points of H_d exactly,
    // so they pass membership at 1e-6 once the polyline is fine enough
    const Modulus m = factor_prime_power(61);
    SumFamilySpec spec{3, ExponentVector{{1, -1}},
                       {FullRingRange{}, FullRingRange{}}};
    const SumFamily family(spec, m);
    const HypocycloidRegion region = hypocycloid_region(3, 4096 * 3);
    std::uint64_t inside = 0;
    family.for_each([&](const SumRecord& rec) {
        if (in_region(region, rec.value, 1e-6)) ++inside;
    });
    CHECK(inside == family.size());
}

TEST_CASE("kloosterman_complete") {
    // phi(3) = 2 terms of 1
    CHECK(std::abs(kloosterman_complete(factor_prime_power(3), 0, 0) - 2.0) <
          1e-15);

    // direct 4-term evaluation at q = 5, a = b = 1:
    // x + x^{-1} over units is {2, 0, 0, 3}, so K = 2 + e(2/5) + e(3/5)
    const std::complex<double> k5 =
        kloosterman_complete(factor_prime_power(5), 1, 1);
    const double expect = 2.0 + 2.0 * std::cos(two_pi * 2.0 / 5.0);
    CHECK(std::abs(k5 - std::complex<double>(expect)) < 1e-12);
    CHECK(std::abs(k5.imag()) < 1e-12);

    // Weil bound spot checks at q = 31^2
    const Modulus m961 = factor_prime_power(961);
    const UnitTables tables = UnitTables::build(m961);
    SplitMix64 rng(17);
    for (int trial = 0; trial < 50; ++trial) {
        const auto a = static_cast<std::int64_t>(
            tables.root_powers[rng.next_below(m961.phi_q)]);
        const auto b = static_cast<std::int64_t>(
            tables.root_powers[rng.next_below(m961.phi_q)]);
        const std::complex<double> k = kloosterman_complete(tables, a, b);
        CHECK(std::abs(k) <= 2.0 * std::sqrt(961.0) + 1e-6);
        CHECK(std::abs(k.imag()) < 1e-9);
    }
    CHECK(std::abs(kloosterman_complete(m961, 1, 1) -
                   kloosterman_complete(tables, 1, 1)) < 1e-12);
}

TEST_CASE("named sums dispatch to the right exponents") {
    const Modulus m7 = factor_prime_power(7);
    const SumRecord s = named_sum(NamedSumKind::S, m7, 3, {{1}});
    const std::complex<double> closed(-0.5, std::sqrt(7.0) / 2.0);
    CHECK(std::abs(s.value - closed) < 1e-12);

    const SumRecord k = named_sum(NamedSumKind::K, m7, 3, {{0, 0}});
    CHECK(k.value == std::complex<double>(3.0));

    const Modulus m67 = factor_prime_power(67);
    const SumRecord q = named_sum(NamedSumKind::Q, m67, 3, {{4, 9, 11}});
    CHECK(std::abs(q.value - brute_theta(67, 3, {4, 2, 1}, {4, 9, 11})) <
          1e-10);
    const Modulus m113 = factor_prime_power(113);
    const SumRecord b = named_sum(NamedSumKind::B, m113, 7, {{5, 6}});
    CHECK(std::abs(b.value - brute_theta(113, 7, {3, 1}, {5, 6})) < 1e-10);
}

TEST_CASE("verify_identity residuals") {
    const Modulus m = factor_prime_power(151);
    const OrderDElement w = element_of_order(m, 5);
    CHECK(verify_identity(w, ExponentVector{{1}}, {{0}}) < 1e-14);

    SplitMix64 rng(99);
    for (int trial = 0; trial < 1000; ++trial) {
        const std::vector<std::int64_t> a = {
            static_cast<std::int64_t>(rng.next_below(151)),
            static_cast<std::int64_t>(rng.next_below(151))};
        CHECK(verify_identity(w, ExponentVector{{1, -1}}, a) < 1e-9);
    }

    // non-coprime case exercises the blocked route only
    const Modulus m19 = factor_prime_power(19);
    const OrderDElement w9 = element_of_order(m19, 9);
    for (int trial = 0; trial < 200; ++trial) {
        const std::vector<std::int64_t> a = {
            static_cast<std::int64_t>(rng.next_below(19)),
            static_cast<std::int64_t>(rng.next_below(19))};
        CHECK(verify_identity(w9, ExponentVector{{3, 1}}, a) < 9e-9);
    }
}

TEST_CASE("identity holds for random exponent vectors") {
    SplitMix64 rng(20260808);
    for (int combo = 0; combo < 200; ++combo) {
        const std::uint64_t d = 2 + rng.next_below(9);  // 2..10
        const auto moduli =
            enumerate_admissible(d, 3 + rng.next_below(400), 3000);
        if (moduli.empty()) continue;
        const Modulus mod = moduli.front();
        const OrderDElement w = element_of_order(mod, d);
        ExponentVector mvec;
        const std::size_t n = 1 + rng.next_below(3);
        for (std::size_t i = 0; i < n; ++i)
            mvec.m.push_back(static_cast<std::int64_t>(rng.next_below(13)) - 6);
        std::vector<std::int64_t> a(n);
        for (auto& ai : a)
            ai = static_cast<std::int64_t>(rng.next_below(mod.q));
        CHECK(verify_identity(w, mvec, a) < 1e-9 * static_cast<double>(d));
    }
}
