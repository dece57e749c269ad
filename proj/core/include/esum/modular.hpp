#pragma once

#include <cstdint>
#include <vector>

#include "esum/common.hpp"

namespace esum {

/// An odd prime power modulus q = p^alpha together with the order of its
/// unit group, phi_q = p^(alpha-1) (p-1). The unit group is cyclic.
struct Modulus {
    std::uint64_t q = 0;
    std::uint64_t p = 0;
    std::uint32_t alpha = 0;
    std::uint64_t phi_q = 0;
};

/// A residue w of multiplicative order exactly d modulo q. Requires d | p-1,
/// which holds whenever q is d-admissible.
struct OrderDElement {
    Modulus modulus;
    std::uint64_t d = 1;
    std::uint64_t w = 1;
};

/// The subgroup of (Z/qZ)^x of order h, presented by a generator. Since the
/// unit group is cyclic there is exactly one subgroup per divisor of phi_q.
struct SubgroupSpec {
    Modulus modulus;
    std::uint64_t order = 1;
    std::uint64_t generator = 1;

    /// The h distinct residues generator^0, ..., generator^(h-1).
    std::vector<std::uint64_t> elements() const;
};

// Exact residue arithmetic; products use 128-bit intermediates so moduli up
// to ~2^62 are safe.
inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t q) {
    return static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(a) * b % q);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t q);

/// Inverse of x modulo q via extended gcd. Throws NotAUnit if gcd(x, q) > 1.
std::uint64_t inv_mod(std::uint64_t x, std::uint64_t q);

/// Reduce a signed integer into the canonical lift range [0, q).
inline std::uint64_t lift_mod(std::int64_t a, std::uint64_t q) {
    std::int64_t r = a % static_cast<std::int64_t>(q);
    if (r < 0) r += static_cast<std::int64_t>(q);
    return static_cast<std::uint64_t>(r);
}

std::uint64_t euler_phi(std::uint64_t n);

/// Distinct prime factors in ascending order (trial division).
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

/// Decompose q as p^alpha with p an odd prime. Throws NotOddPrimePower when
/// q is even, q < 3, or q has two or more prime factors.
Modulus factor_prime_power(std::uint64_t q);

/// True iff q = p^alpha with p an odd prime and p = 1 (mod d).
bool is_d_admissible(std::uint64_t q, std::uint64_t d);

/// All d-admissible q in [lo, hi], ascending.
std::vector<Modulus> enumerate_admissible(std::uint64_t d, std::uint64_t lo,
                                          std::uint64_t hi);

/// Least k >= 1 with x^k = 1 (mod q). Throws NotAUnit if gcd(x, q) > 1.
std::uint64_t multiplicative_order(std::uint64_t x, const Modulus& m);

/// Smallest generator of (Z/qZ)^x. Deterministic.
std::uint64_t primitive_root(const Modulus& m);

/// The canonical element of order d: g^(phi_q/d) for the smallest primitive
/// root g. Throws NotAdmissible unless q is d-admissible.
OrderDElement element_of_order(const Modulus& m, std::uint64_t d);

/// Wrap a caller-supplied residue after checking it has order exactly d.
OrderDElement order_d_element(const Modulus& m, std::uint64_t d,
                              std::uint64_t w);

/// The unique subgroup of order h. Throws OrderDoesNotDivide if h does not
/// divide phi_q.
SubgroupSpec subgroup_of_order(const Modulus& m, std::uint64_t h);

}  // namespace esum
