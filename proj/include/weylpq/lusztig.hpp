#pragma once

/**
 * @file lusztig.hpp
 * @brief Alternating Weyl sums: K_{nu,mu}(p,q), branching polynomials, Levi q-analogues,
 *        and the decomposition of the first through the other two.
 */

#include "weylpq/context.hpp"
#include "weylpq/error.hpp"
#include "weylpq/poly.hpp"
#include "weylpq/rootsys.hpp"

#include <string>
#include <vector>

namespace weylpq {

/// sum_{w in group} eps(w) engine(w(top + shift) - target - shift); non-Q+ arguments contribute 0.
inline BiPoly alternating_sum(const RootSystem& rs, const std::vector<WeylElement>& group, KostantEngine& engine,
                              const Weight& top, const Weight& target, const Weight& shift) {
    if (!rs.to_root_coords(top - target)) return {};
    const Weight lifted = top + shift;
    const Weight base = target + shift;
    BiPoly total;
    for (const auto& w : group) {
        auto beta = rs.to_root_coords(act(w, lifted) - base);
        if (!beta || !beta->nonnegative()) continue;
        const BiPoly& v = engine(*beta);
        if (v.is_zero()) continue;
        if (w.sign > 0)
            total += v;
        else
            total -= v;
    }
    return total;
}

namespace detail {
template <class F>
const BiPoly& cached(PolyCache& cache, const Weight& a, const Weight& b, F&& compute) {
    auto key = std::make_pair(a, b);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
    return cache.emplace(key, compute()).first->second;
}
}  // namespace detail

/// The double deformation K_{nu,mu}(p,q).
inline BiPoly kpq(DeformationContext& ctx, const Weight& nu, const Weight& mu) {
    ctx.check_weight(nu, "nu");
    ctx.check_weight(mu, "mu");
    require(ctx.system().is_dominant(nu), "nu = " + nu.str() + " is not dominant");
    return detail::cached(ctx.kpq_cache(), nu, mu, [&] {
        return alternating_sum(ctx.system(), ctx.weyl(), ctx.pq(), nu, mu, ctx.system().rho());
    });
}

/// b_{nu,target}(p); target must be dominant for the Levi.
inline BiPoly branching_poly(DeformationContext& ctx, const Weight& nu, const Weight& target) {
    ctx.check_weight(nu, "nu");
    ctx.check_weight(target, "target");
    require(ctx.system().is_dominant(nu), "nu = " + nu.str() + " is not dominant");
    require(is_levi_dominant(ctx.parabolic_data(), target), "target = " + target.str() + " is not Levi-dominant");
    return detail::cached(ctx.branch_cache(), nu, target, [&] {
        return alternating_sum(ctx.system(), ctx.weyl(), ctx.hat(), nu, target, ctx.system().rho());
    });
}

/// The Levi q-analogue as a raw alternating sum over the Levi Weyl group, for any kappa.
inline BiPoly kbar_alternating(DeformationContext& ctx, const Weight& kappa, const Weight& mu) {
    return alternating_sum(ctx.system(), ctx.parabolic_data().levi_weyl, ctx.bar(), kappa, mu,
                           ctx.parabolic_data().rho_bar);
}

/// bar K_{kappa,mu}(q) for Levi-dominant kappa.
///
/// Computed in the ambient weight lattice: it vanishes unless kappa - mu lies
/// in the span of the Levi simple roots.
inline BiPoly parabolic_lusztig(DeformationContext& ctx, const Weight& kappa, const Weight& mu) {
    ctx.check_weight(kappa, "kappa");
    ctx.check_weight(mu, "mu");
    require(is_levi_dominant(ctx.parabolic_data(), kappa), "kappa = " + kappa.str() + " is not Levi-dominant");
    return detail::cached(ctx.kbar_cache(), kappa, mu, [&] { return kbar_alternating(ctx, kappa, mu); });
}

/// bar K_{kappa,mu}(q) for arbitrary kappa via the dot action of the Levi Weyl group.
inline BiPoly straighten_kbar(DeformationContext& ctx, const Weight& kappa, const Weight& mu) {
    ctx.check_weight(kappa, "kappa");
    const auto& par = ctx.parabolic_data();
    auto conj = dominant_conjugate(ctx.system(), kappa + par.rho_bar, par.levi);
    for (std::size_t i = 0; i < kappa.size(); ++i)
        if (par.contains(i) && conj.weight[i] == 0) return {};  // on a wall
    BiPoly v = parabolic_lusztig(ctx, conj.weight - par.rho_bar, mu);
    return conj.sign > 0 ? v : -v;
}

/// Levi-dominant kappa = nu - beta (beta in Q+) that can carry a nonzero term b_{nu,kappa} bar K_{kappa,mu}.
///
/// bar K_{kappa,mu} != 0 forces kappa - mu into the Levi root cone, so beta
/// agrees with the root coordinates of nu - mu outside the Levi and is
/// bounded by them inside it.
inline std::vector<Weight> enumerate_levi_highest_weights(DeformationContext& ctx, const Weight& nu,
                                                          const Weight& mu) {
    ctx.check_weight(nu, "nu");
    ctx.check_weight(mu, "mu");
    require(ctx.system().is_dominant(nu), "nu = " + nu.str() + " is not dominant");
    const auto& rs = ctx.system();
    const auto& par = ctx.parabolic_data();
    std::vector<Weight> out;
    auto diff = rs.to_root_coords(nu - mu);
    if (!diff || !diff->nonnegative()) return out;
    RootVector beta = *diff;
    std::vector<std::size_t> free;
    for (std::size_t i = 0; i < rs.rank(); ++i)
        if (par.contains(i)) {
            free.push_back(i);
            beta[i] = 0;
        }
    while (true) {
        Weight kappa = nu - rs.to_weight(beta);
        if (is_levi_dominant(par, kappa)) out.push_back(kappa);
        std::size_t j = 0;
        while (j < free.size() && beta[free[j]] == (*diff)[free[j]]) beta[free[j++]] = 0;
        if (j == free.size()) break;
        ++beta[free[j]];
    }
    return out;
}

/// sum_kappa b_{nu,kappa}(p) bar K_{kappa,mu}(q) over the enumerated Levi highest weights.
inline BiPoly decomposition_sum(DeformationContext& ctx, const Weight& nu, const Weight& mu) {
    BiPoly total;
    for (const auto& kappa : enumerate_levi_highest_weights(ctx, nu, mu)) {
        BiPoly kb = parabolic_lusztig(ctx, kappa, mu);
        if (kb.is_zero()) continue;
        BiPoly b = branching_poly(ctx, nu, kappa);
        if (b.is_zero()) continue;
        total += b * kb;
    }
    return total;
}

inline bool decomposition_check(DeformationContext& ctx, const Weight& nu, const Weight& mu) {
    return kpq(ctx, nu, mu) == decomposition_sum(ctx, nu, mu);
}

/// The ordinary (single-parameter) Lusztig q-analogue, from a q-only partition engine.
inline BiPoly lusztig_q_analogue(DeformationContext& ctx, const Weight& nu, const Weight& mu) {
    require(ctx.system().is_dominant(nu), "nu = " + nu.str() + " is not dominant");
    return alternating_sum(ctx.system(), ctx.weyl(), ctx.single_variable(), nu, mu, ctx.system().rho());
}

/// bar K_{nu bar, mu bar}(q) with the diamond-matching convention: zero unless nu and mu
/// agree outside the Levi, in which case it equals bar K_{nu,mu}(q).
inline BiPoly levi_restricted_analogue(DeformationContext& ctx, const Weight& nu, const Weight& mu) {
    const auto& par = ctx.parabolic_data();
    if (decompose_diamond(par, nu).second != decompose_diamond(par, mu).second) return {};
    return parabolic_lusztig(ctx, nu, mu);
}

struct SpecializationFlags {
    bool p_zero = true;             ///< K(0,q) == bar K_{nu,mu}(q) when nu and mu share diamond parts, else K(0,q) == 0
    bool q_zero = true;             ///< K(p,0) == b_{nu,mu}(p); checked only for Levi-dominant mu
    bool diagonal = true;           ///< K(q,q) == single-variable Lusztig analogue
    bool p_one_nonnegative = true;  ///< K(1,q) in N[q]; checked only for Levi-dominant mu
    bool levi_dominant_mu = false;

    bool all() const { return p_zero && q_zero && diagonal && p_one_nonnegative; }
};

inline SpecializationFlags specialization_check(DeformationContext& ctx, const Weight& nu, const Weight& mu) {
    SpecializationFlags f;
    const BiPoly k = kpq(ctx, nu, mu);
    f.p_zero = specialize(k, 0, std::nullopt) == levi_restricted_analogue(ctx, nu, mu);
    f.diagonal = diagonal(k) == lusztig_q_analogue(ctx, nu, mu);
    f.levi_dominant_mu = is_levi_dominant(ctx.parabolic_data(), mu);
    if (f.levi_dominant_mu) {
        f.q_zero = specialize(k, std::nullopt, 0) == branching_poly(ctx, nu, mu);
        f.p_one_nonnegative = is_nonnegative(specialize(k, 1, std::nullopt));
    }
    return f;
}

struct BranchingObservation {
    Weight nu;
    Weight target;
    BiPoly value;
};

struct ConjectureReport {
    std::size_t dominant_targets = 0;
    std::size_t levi_only_targets = 0;
    /// g-dominant targets whose branching polynomial has a negative coefficient.
    std::vector<BranchingObservation> dominant_violations;
    /// Levi-dominant but not g-dominant targets with a negative coefficient (permitted).
    std::vector<BranchingObservation> levi_only_negative;
};

/// Scans b_{nu,kappa}(p) over kappa = nu - beta, beta in Q+ of height <= box, and records signs.
inline ConjectureReport conjecture_scan(DeformationContext& ctx, const std::vector<Weight>& nu_grid, int box) {
    ConjectureReport rep;
    const auto& rs = ctx.system();
    for (const auto& nu : nu_grid) {
        RootVector beta(rs.rank());
        while (true) {
            Weight kappa = nu - rs.to_weight(beta);
            if (is_levi_dominant(ctx.parabolic_data(), kappa)) {
                BiPoly b = branching_poly(ctx, nu, kappa);
                const bool dom = rs.is_dominant(kappa);
                (dom ? rep.dominant_targets : rep.levi_only_targets)++;
                if (!is_nonnegative(b))
                    (dom ? rep.dominant_violations : rep.levi_only_negative).push_back({nu, kappa, b});
            }
            // odometer over {beta >= 0 : sum(beta) <= box}
            std::size_t j = 0;
            while (true) {
                if (j == rs.rank()) break;
                ++beta[j];
                if (beta.sum() <= box) break;
                beta[j] = 0;
                ++j;
            }
            if (j == rs.rank()) break;
        }
    }
    return rep;
}

}  // namespace weylpq
