#include "esum/expsums.hpp"

#include <cmath>
#include <numbers>

namespace esum {

std::complex<double> unit_root(std::uint64_t r, std::uint64_t q) {
    constexpr double two_pi = 2.0 * std::numbers::pi_v<double>;
    const double ang =
        two_pi * (static_cast<double>(r) / static_cast<double>(q));
    return {std::cos(ang), std::sin(ang)};
}

namespace {

// w^{m_i} for each i, with negative exponents through the inverse of w.
std::vector<std::uint64_t> power_basis(const OrderDElement& w,
                                       const ExponentVector& mvec) {
    const std::uint64_t q = w.modulus.q;
    std::vector<std::uint64_t> u(mvec.size());
    std::uint64_t w_inv = 0;
    for (std::size_t i = 0; i < mvec.size(); ++i) {
        const std::int64_t mi = mvec.m[i];
        if (mi >= 0) {
            u[i] = pow_mod(w.w, static_cast<std::uint64_t>(mi), q);
        } else {
            if (w_inv == 0) w_inv = inv_mod(w.w, q);
            u[i] = pow_mod(w_inv, static_cast<std::uint64_t>(-mi), q);
        }
    }
    return u;
}

std::uint64_t range_size(const ParamRange& r, std::uint64_t q) {
    if (std::holds_alternative<FixedRange>(r)) return 1;
    if (const auto* s = std::get_if<SubgroupRange>(&r)) return s->subgroup.order;
    return q;
}

std::int64_t range_value(const ParamRange& r, std::uint64_t idx,
                         std::uint64_t q) {
    if (const auto* f = std::get_if<FixedRange>(&r)) return f->value;
    if (const auto* s = std::get_if<SubgroupRange>(&r))
        return static_cast<std::int64_t>(
            pow_mod(s->subgroup.generator, idx, q));
    return static_cast<std::int64_t>(idx);
}

}  // namespace

SumRecord restricted_sum(const OrderDElement& w, const ExponentVector& mvec,
                         std::span<const std::int64_t> a) {
    if (a.size() != mvec.size())
        throw ArityMismatch("parameter count does not match exponent vector");
    const std::uint64_t q = w.modulus.q;
    const auto u = power_basis(w, mvec);
    std::vector<std::uint64_t> lifted(a.size()), t(a.size(), 1);
    for (std::size_t i = 0; i < a.size(); ++i) lifted[i] = lift_mod(a[i], q);

    SumRecord rec;
    rec.params.assign(a.begin(), a.end());
    rec.phase_exact.reserve(w.d);
    std::complex<double> acc = 0.0;
    for (std::uint64_t k = 0; k < w.d; ++k) {
        std::uint64_t r = 0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            r += mul_mod(lifted[i], t[i], q);
            if (r >= q) r -= q;
            t[i] = mul_mod(t[i], u[i], q);
        }
        rec.phase_exact.push_back(r);
        acc += unit_root(r, q);
    }
    rec.value = acc;
    return rec;
}

SumFamily::SumFamily(SumFamilySpec spec, const Modulus& m)
    : spec_(std::move(spec)), modulus_(m) {
    if (spec_.m.size() == 0)
        throw RangeInconsistent("empty exponent vector");
    if (spec_.ranges.size() != spec_.m.size())
        throw RangeInconsistent("one range per exponent required");
    for (const ParamRange& r : spec_.ranges) {
        if (const auto* s = std::get_if<SubgroupRange>(&r)) {
            if (s->subgroup.modulus.q != m.q)
                throw RangeInconsistent("subgroup belongs to another modulus");
            if (m.phi_q % s->subgroup.order != 0)
                throw RangeInconsistent("subgroup order does not divide phi_q");
        }
    }
    w_ = element_of_order(m, spec_.d);
    total_ = 1;
    for (const ParamRange& r : spec_.ranges) {
        range_sizes_.push_back(range_size(r, m.q));
        total_ *= range_sizes_.back();
    }
}

std::vector<std::int64_t> SumFamily::params_at(std::uint64_t index) const {
    std::vector<std::int64_t> params(spec_.ranges.size());
    for (std::size_t i = spec_.ranges.size(); i-- > 0;) {
        const std::uint64_t s = range_sizes_[i];
        params[i] = range_value(spec_.ranges[i], index % s, modulus_.q);
        index /= s;
    }
    return params;
}

SumRecord SumFamily::record_at(std::uint64_t index) const {
    const auto params = params_at(index);
    return restricted_sum(w_, spec_.m, params);
}

void SumFamily::for_each(
    const std::function<void(const SumRecord&)>& fn) const {
    for (std::uint64_t i = 0; i < total_; ++i) fn(record_at(i));
}

UnitTables UnitTables::build(const Modulus& m) {
    UnitTables t;
    t.m = m;
    const std::uint64_t g = primitive_root(m);
    t.root_powers.resize(m.phi_q);
    std::uint64_t x = 1;
    for (std::uint64_t i = 0; i < m.phi_q; ++i) {
        t.root_powers[i] = x;
        x = mul_mod(x, g, m.q);
    }
    t.e.resize(m.q);
    for (std::uint64_t r = 0; r < m.q; ++r) t.e[r] = unit_root(r, m.q);
    return t;
}

std::complex<double> kloosterman_complete(const UnitTables& tables,
                                          std::int64_t a, std::int64_t b) {
    const std::uint64_t q = tables.m.q;
    const std::uint64_t phi = tables.m.phi_q;
    const std::uint64_t la = lift_mod(a, q), lb = lift_mod(b, q);
    std::complex<double> acc = 0.0;
    for (std::uint64_t t = 0; t < phi; ++t) {
        // x = g^t, x^{-1} = g^{phi - t}
        const std::uint64_t x = tables.root_powers[t];
        const std::uint64_t xi = tables.root_powers[(phi - t) % phi];
        std::uint64_t r = mul_mod(la, x, q) + mul_mod(lb, xi, q);
        if (r >= q) r -= q;
        acc += tables.e[r];
    }
    return acc;
}

std::complex<double> kloosterman_complete(const Modulus& m, std::int64_t a,
                                          std::int64_t b) {
    return kloosterman_complete(UnitTables::build(m), a, b);
}

ExponentVector named_sum_exponents(NamedSumKind kind) {
    switch (kind) {
        case NamedSumKind::S: return ExponentVector{{1}};
        case NamedSumKind::K: return ExponentVector{{1, -1}};
        case NamedSumKind::B: return ExponentVector{{3, 1}};
        case NamedSumKind::Q: return ExponentVector{{4, 2, 1}};
    }
    throw Error("unknown named sum kind");
}

SumRecord named_sum(NamedSumKind kind, const Modulus& m, std::uint64_t d,
                    std::span<const std::int64_t> params) {
    return restricted_sum(element_of_order(m, d), named_sum_exponents(kind),
                          params);
}

double verify_identity(const OrderDElement& w, const ExponentVector& mvec,
                       std::span<const std::int64_t> a) {
    if (a.size() != mvec.size())
        throw ArityMismatch("parameter count does not match exponent vector");
    const std::uint64_t q = w.modulus.q;
    const std::uint64_t d = w.d;
    const auto u = power_basis(w, mvec);
    std::vector<std::uint64_t> lifted(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) lifted[i] = lift_mod(a[i], q);

    const std::complex<double> theta = restricted_sum(w, mvec, a).value;

    // route through f_{d,m}: z_{i,j} = e(a_i (w^{m_i})^j / q)
    std::vector<double> f_phases;
    for (std::size_t i = 0; i < mvec.size(); ++i) {
        const std::uint64_t phi_di = euler_phi(mvec.d_i(d, i));
        std::uint64_t t = 1;
        for (std::uint64_t j = 0; j < phi_di; ++j) {
            f_phases.push_back(static_cast<double>(mul_mod(lifted[i], t, q)) /
                               static_cast<double>(q));
            t = mul_mod(t, u[i], q);
        }
    }
    const std::complex<double> via_f =
        evaluate(build_f(d, mvec), TorusPoint{std::move(f_phases)});
    double residual = std::abs(theta - via_f);

    // route through g_d: z_j = e((sum_i a_i (w^{m_i})^j) / q)
    if (mvec.coprime_with(d)) {
        const std::uint64_t phi_d = euler_phi(d);
        std::vector<double> g_phases;
        std::vector<std::uint64_t> t(a.size(), 1);
        for (std::uint64_t j = 0; j < phi_d; ++j) {
            std::uint64_t r = 0;
            for (std::size_t i = 0; i < a.size(); ++i) {
                r += mul_mod(lifted[i], t[i], q);
                if (r >= q) r -= q;
                t[i] = mul_mod(t[i], u[i], q);
            }
            g_phases.push_back(static_cast<double>(r) /
                               static_cast<double>(q));
        }
        const std::complex<double> via_g =
            evaluate(build_g(d), TorusPoint{std::move(g_phases)});
        residual = std::max(residual, std::abs(theta - via_g));
    }
    return residual;
}

}  // namespace esum
