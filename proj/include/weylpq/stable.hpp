#pragma once

/**
 * @file stable.hpp
 * @brief Stabilization of K_{nu+k delta, mu+k delta}(p,q) in k, the constant c of
 *        Hypothesis H, the L-statistic and the p-power factorization of stable branching.
 */

#include "weylpq/context.hpp"
#include "weylpq/error.hpp"
#include "weylpq/lusztig.hpp"
#include "weylpq/poly.hpp"
#include "weylpq/rootsys.hpp"

#include <chrono>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

namespace weylpq {

inline constexpr int kDefaultStabilizationCap = 20;

struct StabilizationResult {
    int k_stable = 0;
    BiPoly value;
    BiPoly closed_form;
    std::optional<Rational> hypothesis_c;
    std::vector<double> step_ms;  ///< wall time of each probed k
};

/// c with (direction, alpha) = c for every complement root alpha; empty if not constant,
/// not positive, or there are no complement roots.
inline std::optional<Rational> constant_pairing(const RootSystem& rs, const ParabolicData& par,
                                                const Weight& direction) {
    std::optional<Rational> c;
    for (const auto& a : par.complement_roots) {
        Rational v = rs.pairing(direction, a);
        if (!c)
            c = v;
        else if (*c != v)
            return std::nullopt;
    }
    if (c && *c <= 0) return std::nullopt;
    return c;
}

/// Hypothesis H: (rho_diamond, alpha) takes one positive value c on all complement roots.
inline std::optional<Rational> hypothesis_h_check(const RootSystem& rs, const ParabolicData& par) {
    return constant_pairing(rs, par, par.rho_diamond);
}

/// (direction, gamma) / c as an integer; c is the constant pairing of direction on complement roots.
inline long long l_statistic(const RootSystem& rs, const ParabolicData& par, const RootVector& gamma,
                             const Weight& direction) {
    auto c = constant_pairing(rs, par, direction);
    require(c.has_value(), "the pairing with " + direction.str() + " is not constant on the complement roots of " +
                               rs.name() + " {" + levi_to_string(par.levi, rs.rank()) + "}");
    Rational v = rs.pairing(direction, gamma) / *c;
    require(v.denominator() == 1, "L(" + gamma.str() + ") is not an integer");
    return v.numerator();
}

inline long long l_statistic(const RootSystem& rs, const ParabolicData& par, const RootVector& gamma) {
    return l_statistic(rs, par, gamma, par.rho_diamond);
}

/// The W-bar closed form sum_{w bar} eps P_{p,q}(w bar(nu + rho) - mu - rho) of the stable value.
inline BiPoly kpq_stable_closed_form(DeformationContext& ctx, const Weight& nu, const Weight& mu) {
    return alternating_sum(ctx.system(), ctx.parabolic_data().levi_weyl, ctx.pq(), nu, mu, ctx.system().rho());
}

/// Iterates k until K_{nu+k d, mu+k d} equals the closed form at k and k+1.
inline StabilizationResult stabilize_along(DeformationContext& ctx, const Weight& nu, const Weight& mu,
                                           const Weight& direction, int cap) {
    ctx.check_weight(nu, "nu");
    ctx.check_weight(mu, "mu");
    require(ctx.system().is_dominant(nu), "nu = " + nu.str() + " is not dominant");
    require(ctx.system().dominance_leq(mu, nu), "mu = " + mu.str() + " is not below nu = " + nu.str());
    StabilizationResult res;
    res.closed_form = kpq_stable_closed_form(ctx, nu, mu);
    std::optional<BiPoly> prev;
    for (int k = 0; k <= cap + 1; ++k) {
        auto t0 = std::chrono::steady_clock::now();
        BiPoly v = kpq(ctx, nu + k * direction, mu + k * direction);
        res.step_ms.push_back(std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count());
        if (prev && *prev == res.closed_form && v == res.closed_form) {
            res.k_stable = k - 1;
            res.value = std::move(v);
            return res;
        }
        prev = std::move(v);
    }
    throw CapExceeded("no stabilization of K_{" + nu.str() + "+k" + direction.str() + "," + mu.str() + "+k" +
                      direction.str() + "} within " + std::to_string(cap) + " steps");
}

inline StabilizationResult kpq_stab(DeformationContext& ctx, const Weight& nu, const Weight& mu,
                                    int cap = kDefaultStabilizationCap) {
    StabilizationResult res = stabilize_along(ctx, nu, mu, ctx.parabolic_data().rho_diamond, cap);
    res.hypothesis_c = hypothesis_h_check(ctx.system(), ctx.parabolic_data());
    return res;
}

/// sum_{w bar} eps hat P_p(w bar(nu + rho bar) - target - rho bar), the limit of b_{nu+k rho_diamond, target+k rho_diamond}.
inline BiPoly b_stab(DeformationContext& ctx, const Weight& nu, const Weight& target) {
    ctx.check_weight(nu, "nu");
    ctx.check_weight(target, "target");
    require(ctx.system().is_dominant(nu), "nu = " + nu.str() + " is not dominant");
    require(is_levi_dominant(ctx.parabolic_data(), target), "target = " + target.str() + " is not Levi-dominant");
    const auto& par = ctx.parabolic_data();
    return alternating_sum(ctx.system(), par.levi_weyl, ctx.hat(), nu, target, par.rho_bar);
}

/// Every monomial of hat P_p(gamma) has p-degree L(gamma).
inline bool single_power_check(DeformationContext& ctx, const RootVector& gamma, const Weight& direction) {
    const BiPoly& v = ctx.hat()(gamma);
    if (v.is_zero()) return true;
    const long long l = l_statistic(ctx.system(), ctx.parabolic_data(), gamma, direction);
    for (const auto& t : v.terms())
        if (static_cast<long long>(t.p) != l || t.q != 0) return false;
    return true;
}

/// Stable branching factors as p^{L(nu - kappa)} b_stab(1), the stable value recombines from
/// those factors and the Levi analogues, and it lies in N[p,q].
inline bool factorization_check(DeformationContext& ctx, const Weight& nu, const Weight& mu, const Weight& direction,
                                int cap = kDefaultStabilizationCap) {
    const auto& rs = ctx.system();
    const auto& par = ctx.parabolic_data();
    require(constant_pairing(rs, par, direction).has_value(),
            "the pairing with " + direction.str() + " is not constant on the complement roots");
    require(is_levi_dominant(par, mu), "mu = " + mu.str() + " is not Levi-dominant");
    BiPoly recombined;
    for (const auto& kappa : enumerate_levi_highest_weights(ctx, nu, mu)) {
        BiPoly b = b_stab(ctx, nu, kappa);
        if (b.is_zero()) continue;
        const long long l = l_statistic(rs, par, *rs.to_root_coords(nu - kappa), direction);
        if (l < 0) return false;
        BiPoly factored = BiPoly::monomial(1, static_cast<std::uint32_t>(l), 0) * specialize(b, 1, std::nullopt);
        if (factored != b) return false;
        recombined += factored * parabolic_lusztig(ctx, kappa, mu);
    }
    StabilizationResult st = stabilize_along(ctx, nu, mu, direction, cap);
    return st.value == recombined && is_nonnegative(st.value);
}

inline bool factorization_check(DeformationContext& ctx, const Weight& nu, const Weight& mu,
                                int cap = kDefaultStabilizationCap) {
    return factorization_check(ctx, nu, mu, ctx.parabolic_data().rho_diamond, cap);
}

/// For every w in W outside W bar, rho_diamond - w(rho_diamond) is a nonzero element of Q+;
/// for w in W bar it is zero.
inline bool stabilizer_witness_check(DeformationContext& ctx) {
    const auto& rs = ctx.system();
    const auto& par = ctx.parabolic_data();
    std::unordered_set<Weight, LatticeHash> levi_images;
    for (const auto& w : par.levi_weyl) levi_images.insert(act(w, rs.rho()));
    for (const auto& w : ctx.weyl()) {
        auto beta = rs.to_root_coords(par.rho_diamond - act(w, par.rho_diamond));
        if (!beta || !beta->nonnegative()) return false;
        if (levi_images.count(act(w, rs.rho())) != static_cast<std::size_t>(beta->is_zero())) return false;
    }
    return true;
}

struct DeltaStabilization {
    LeviMask levi = 0;
    StabilizationResult result;
    std::optional<Rational> h2_constant;    ///< (delta, alpha) on complement roots when constant
    std::optional<bool> factorization_ok;  ///< run when the constant exists and mu is Levi-dominant
};

/// Stabilization along a dominant delta, with the Levi taken as the nodes where delta vanishes.
inline DeltaStabilization delta_stab(const RootSystem& rs, const Weight& delta, const Weight& nu, const Weight& mu,
                                     int cap = kDefaultStabilizationCap,
                                     std::shared_ptr<const std::vector<WeylElement>> weyl = nullptr) {
    require(delta.size() == rs.rank(), "delta has length " + std::to_string(delta.size()) + ", expected " +
                                           std::to_string(rs.rank()));
    require(rs.is_dominant(delta), "delta = " + delta.str() + " is not dominant");
    LeviMask levi = 0;
    for (std::size_t i = 0; i < rs.rank(); ++i)
        if (delta[i] == 0) levi |= 1u << i;
    DeformationContext ctx(rs, levi, std::move(weyl));
    DeltaStabilization out;
    out.levi = levi;
    out.result = stabilize_along(ctx, nu, mu, delta, cap);
    out.result.hypothesis_c = hypothesis_h_check(rs, ctx.parabolic_data());
    out.h2_constant = constant_pairing(rs, ctx.parabolic_data(), delta);
    if (out.h2_constant && is_levi_dominant(ctx.parabolic_data(), mu))
        out.factorization_ok = factorization_check(ctx, nu, mu, delta, cap);
    return out;
}

}  // namespace weylpq
