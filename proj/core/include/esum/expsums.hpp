#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <span>
#include <variant>
#include <vector>

#include "esum/laurent.hpp"
#include "esum/modular.hpp"

namespace esum {

/// One coefficient a_i is either pinned to a value, runs over a
/// multiplicative subgroup, or runs over all of Z/qZ.
struct FixedRange {
    std::int64_t value = 0;
};
struct SubgroupRange {
    SubgroupSpec subgroup;
};
struct FullRingRange {};
using ParamRange = std::variant<FixedRange, SubgroupRange, FullRingRange>;

/// A family of restricted sums: order d, exponents m, and one range per
/// coefficient.
struct SumFamilySpec {
    std::uint64_t d = 1;
    ExponentVector m;
    std::vector<ParamRange> ranges;
};

/// One computed sum. `phase_exact` holds the d residues
/// r_k = sum_i a_i (w^{m_i})^k  (mod q); `value` is derived from them as
/// sum_k e(r_k / q), so recomputing from phase_exact matches bitwise.
struct SumRecord {
    std::vector<std::int64_t> params;
    std::complex<double> value;
    std::vector<std::uint64_t> phase_exact;
};

/// The canonical map from an exact residue to the unit circle: e(r/q).
/// Every sum in the library is assembled from this one function, so values
/// recomputed from phase_exact match bitwise.
std::complex<double> unit_root(std::uint64_t r, std::uint64_t q);

/// theta_{m,q}(a_1, ..., a_n): the sum over the order-d subgroup, computed
/// from exact residues. Negative exponents go through the modular inverse
/// of w.
SumRecord restricted_sum(const OrderDElement& w, const ExponentVector& mvec,
                         std::span<const std::int64_t> a);

/// Deterministic enumeration of a whole family in lexicographic order over
/// the range enumerations (last coefficient fastest). Constant memory:
/// records are produced on demand.
class SumFamily {
  public:
    SumFamily(SumFamilySpec spec, const Modulus& m);

    const SumFamilySpec& spec() const { return spec_; }
    const Modulus& modulus() const { return modulus_; }
    const OrderDElement& order_element() const { return w_; }
    std::uint64_t size() const { return total_; }

    std::vector<std::int64_t> params_at(std::uint64_t index) const;
    SumRecord record_at(std::uint64_t index) const;

    /// Sequential stream over all records in enumeration order.
    void for_each(const std::function<void(const SumRecord&)>& fn) const;

  private:
    SumFamilySpec spec_;
    Modulus modulus_;
    OrderDElement w_;
    std::vector<std::uint64_t> range_sizes_;
    std::uint64_t total_ = 0;
};

/// Per-modulus tables for complete-sum sweeps: powers of a primitive root
/// and the q-th roots of unity.
struct UnitTables {
    Modulus m;
    std::vector<std::uint64_t> root_powers;        // g^t, t in [0, phi_q)
    std::vector<std::complex<double>> e;           // e[r] = e(r/q)

    static UnitTables build(const Modulus& m);
};

/// The complete Kloosterman sum over all units. The value is real up to
/// rounding (x -> -x pairs terms with their conjugates).
std::complex<double> kloosterman_complete(const Modulus& m, std::int64_t a,
                                          std::int64_t b);
std::complex<double> kloosterman_complete(const UnitTables& tables,
                                          std::int64_t a, std::int64_t b);

enum class NamedSumKind { S, K, B, Q };

/// Exponent vector of a named family: S -> (1), K -> (1,-1), B -> (3,1),
/// Q -> (4,2,1).
ExponentVector named_sum_exponents(NamedSumKind kind);

/// Dispatch a named sum to restricted_sum over the order-d subgroup.
SumRecord named_sum(NamedSumKind kind, const Modulus& m, std::uint64_t d,
                    std::span<const std::int64_t> params);

/// Checks the reduction identities: computes theta directly, through
/// f_{d,m} at z_{i,j} = e(a_i (w^{m_i})^j / q), and, when m is coprime with
/// d, through g_d at z_j = e((sum_i a_i (w^{m_i})^j) / q). Returns the
/// largest absolute difference between the routes.
double verify_identity(const OrderDElement& w, const ExponentVector& mvec,
                       std::span<const std::int64_t> a);

}  // namespace esum
