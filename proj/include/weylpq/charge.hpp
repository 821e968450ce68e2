#pragma once

/**
 * @file charge.hpp
 * @brief Colored-root statistics N_{p,q} and R_{p,q}, the shifted deformation K(p+1,q+1),
 *        the polynomial mu-charge, and Freudenthal weight multiplicities.
 *
 * A colored configuration picks k_alpha indexed copies of each positive root
 * and colors every copy blue or red. Blue copies of roots outside the Levi
 * count towards the p-degree, blue copies of Levi roots towards the q-degree.
 * A configuration is admissible when the first copy of every used root is blue.
 */

#include "weylpq/context.hpp"
#include "weylpq/error.hpp"
#include "weylpq/lusztig.hpp"
#include "weylpq/poly.hpp"
#include "weylpq/rootsys.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace weylpq {

/// Weight -> multiplicity. Ordered so that iteration (and serialization) is deterministic.
using WeightMultiplicityMap = std::map<Weight, long long>;

inline constexpr long long kDefaultDimensionCap = 100000;
inline constexpr long long kDefaultBruteforceBound = 8;

/// sum over colored configurations of beta of p^{#blue outside} q^{#blue inside}; equals P_{p+1,q+1}(beta).
inline const BiPoly& n_pq(DeformationContext& ctx, const RootVector& beta) { return ctx.colored_n()(beta); }

/// The same sum restricted to admissible configurations; zero outside Q+.
inline const BiPoly& r_pq(DeformationContext& ctx, const RootVector& beta) { return ctx.colored_r()(beta); }

namespace detail {

struct ColoredEnumerator {
    const std::vector<TaggedRoot>& roots;
    bool admissible_only;
    std::vector<unsigned> copies;
    std::vector<BiPoly::Term> out;

    void multiplicities(std::size_t i, const RootVector& residual) {
        if (residual.is_zero()) {
            std::fill(copies.begin() + static_cast<std::ptrdiff_t>(i), copies.end(), 0u);
            colorings(0, 0, 0);
            return;
        }
        if (i == roots.size()) return;
        RootVector r = residual;
        for (unsigned k = 0; r.nonnegative(); ++k) {
            copies[i] = k;
            multiplicities(i + 1, r);
            r -= roots[i].root;
        }
        copies[i] = 0;
    }

    void colorings(std::size_t i, std::uint32_t p_deg, std::uint32_t q_deg) {
        if (i == roots.size()) {
            out.push_back({p_deg, q_deg, Integer(1)});
            return;
        }
        const unsigned k = copies[i];
        for (std::uint32_t word = 0; word < (1u << k); ++word) {
            // bit j set = copy j is blue
            if (admissible_only && k > 0 && !(word & 1u)) continue;
            const auto blue = static_cast<std::uint32_t>(__builtin_popcount(word));
            if (roots[i].var == Var::P)
                colorings(i + 1, p_deg + blue, q_deg);
            else
                colorings(i + 1, p_deg, q_deg + blue);
        }
    }
};

}  // namespace detail

/// Exhaustive enumeration of colored configurations of beta (admissible ones only if requested).
inline BiPoly colored_bruteforce(const RootSystem& rs, const ParabolicData& par, const RootVector& beta,
                                 bool admissible_only, long long bound = kDefaultBruteforceBound) {
    if (!beta.nonnegative()) return {};
    if (beta.sum() > bound)
        throw CapExceeded("brute-force enumeration bound " + std::to_string(bound) + " exceeded by " + beta.str());
    auto roots = tagged_roots(rs, par);
    detail::ColoredEnumerator e{roots, admissible_only, std::vector<unsigned>(roots.size(), 0u), {}};
    e.multiplicities(0, beta);
    return BiPoly::from_terms(std::move(e.out));
}

inline BiPoly r_pq_bruteforce(const RootSystem& rs, const ParabolicData& par, const RootVector& beta,
                              long long bound = kDefaultBruteforceBound) {
    return colored_bruteforce(rs, par, beta, true, bound);
}

/// K_{0,-beta}(p+1,q+1) from the alternating Weyl sum.
inline BiPoly shifted_zero_weight(DeformationContext& ctx, const RootVector& beta) {
    return shift_vars(kpq(ctx, ctx.system().zero_weight(), -ctx.system().to_weight(beta)));
}

/// Weyl dimension formula prod_alpha (nu + rho, alpha) / (rho, alpha).
inline Integer weyl_dimension(const RootSystem& rs, const Weight& nu) {
    require(rs.is_dominant(nu), "nu = " + nu.str() + " is not dominant");
    Integer num = 1, den = 1;
    const Weight shifted = nu + rs.rho();
    for (const auto& a : rs.positive_roots()) {
        long long x = 0, y = 0;
        for (std::size_t j = 0; j < rs.rank(); ++j) {
            x += static_cast<long long>(rs.symmetrizer()[j]) * shifted[j] * a[j];
            y += static_cast<long long>(rs.symmetrizer()[j]) * a[j];
        }
        num *= x;
        den *= y;
    }
    return num / den;
}

/// Dominant weights mu <= nu, each reached from nu by subtracting positive roots within the dominant chamber.
inline std::vector<Weight> dominant_weights_below(const RootSystem& rs, const Weight& nu) {
    std::vector<Weight> out{nu};
    std::unordered_map<Weight, bool, LatticeHash> seen{{nu, true}};
    std::vector<Weight> roots_w;
    for (const auto& a : rs.positive_roots()) roots_w.push_back(rs.to_weight(a));
    for (std::size_t k = 0; k < out.size(); ++k)
        for (const auto& a : roots_w) {
            Weight m = out[k] - a;
            if (rs.is_dominant(m) && seen.emplace(m, true).second) out.push_back(m);
        }
    return out;
}

/// W-orbit of a weight by closure under simple reflections.
inline std::vector<Weight> weyl_orbit(const RootSystem& rs, const Weight& v) {
    std::vector<Weight> out{v};
    std::unordered_map<Weight, bool, LatticeHash> seen{{v, true}};
    for (std::size_t k = 0; k < out.size(); ++k)
        for (std::size_t i = 0; i < rs.rank(); ++i) {
            Weight r = rs.reflect(out[k], i);
            if (seen.emplace(r, true).second) out.push_back(r);
        }
    return out;
}

/// Multiplicities of the dominant weights of V(nu) by Freudenthal's recursion.
inline WeightMultiplicityMap freudenthal_dominant(const RootSystem& rs, const Weight& nu,
                                                  long long cap = kDefaultDimensionCap) {
    require(rs.is_dominant(nu), "nu = " + nu.str() + " is not dominant");
    const Integer dim = weyl_dimension(rs, nu);
    if (dim > cap)
        throw CapExceeded("dim V(" + nu.str() + ") = " + dim.str() + " exceeds the cap of " + std::to_string(cap));
    std::vector<Weight> dom = dominant_weights_below(rs, nu);
    auto height = [&](const Weight& m) { return rs.to_root_coords(nu - m)->sum(); };
    std::stable_sort(dom.begin(), dom.end(), [&](const Weight& a, const Weight& b) { return height(a) < height(b); });

    std::vector<std::pair<RootVector, Weight>> roots;
    for (const auto& a : rs.positive_roots()) roots.emplace_back(a, rs.to_weight(a));
    const Weight rho = rs.rho();
    const long long top = rs.scaled_weight_form(nu + rho, nu + rho);

    WeightMultiplicityMap mult;
    mult[nu] = 1;
    for (const auto& mu : dom) {
        if (mu == nu) continue;
        long long num = 0;
        for (const auto& [a, aw] : roots) {
            for (int k = 1;; ++k) {
                const Weight w = mu + k * aw;
                auto it = mult.find(dominant_conjugate(rs, w));
                if (it == mult.end()) break;
                num += it->second * rs.scaled_weight_form(w, aw);
            }
        }
        const long long den = top - rs.scaled_weight_form(mu + rho, mu + rho);
        if (den == 0 || (2 * num) % den != 0)
            throw std::logic_error("Freudenthal recursion produced a non-integral multiplicity at " + mu.str());
        const long long m = 2 * num / den;
        if (m != 0) mult[mu] = m;
    }
    return mult;
}

/// All weights of V(nu) with multiplicities.
inline WeightMultiplicityMap freudenthal(const RootSystem& rs, const Weight& nu,
                                         long long cap = kDefaultDimensionCap) {
    WeightMultiplicityMap full;
    for (const auto& [mu, m] : freudenthal_dominant(rs, nu, cap))
        for (const auto& w : weyl_orbit(rs, mu)) full[w] = m;
    return full;
}

/// The polynomial mu-charge of a crystal vertex of weight wt: R_{p,q}(wt - mu), or 0 if wt is not above mu.
inline BiPoly chi(DeformationContext& ctx, const Weight& wt, const Weight& mu) {
    ctx.check_weight(wt, "wt");
    ctx.check_weight(mu, "mu");
    auto beta = ctx.system().to_root_coords(wt - mu);
    if (!beta || !beta->nonnegative()) return {};
    return r_pq(ctx, *beta);
}

/// sum over weights wt >= mu of V(nu) of mult(wt) chi(wt, mu).
inline BiPoly crystal_sum(DeformationContext& ctx, const WeightMultiplicityMap& weights, const Weight& mu) {
    BiPoly total;
    for (const auto& [wt, m] : weights) {
        BiPoly c = chi(ctx, wt, mu);
        if (!c.is_zero()) total += BiPoly(m) * c;
    }
    return total;
}

/// sum_beta K_{nu,mu+beta} K_{0,-beta}(p+1,q+1), with K_{0,-beta} from the alternating sum.
inline BiPoly shifted_decomposition(DeformationContext& ctx, const WeightMultiplicityMap& weights, const Weight& mu) {
    BiPoly total;
    for (const auto& [wt, m] : weights) {
        auto beta = ctx.system().to_root_coords(wt - mu);
        if (!beta || !beta->nonnegative()) continue;
        BiPoly k0 = shifted_zero_weight(ctx, *beta);
        if (!k0.is_zero()) total += BiPoly(m) * k0;
    }
    return total;
}

struct CrystalSumReport {
    bool crystal_sum = false;      ///< K(p+1,q+1) == sum mult(wt) chi(wt, mu)
    bool shifted_decomposition = false;  ///< the finite sum over beta matches too
    bool nonnegative = false;      ///< K(p+1,q+1) in N[p,q]

    bool all() const { return crystal_sum && shifted_decomposition && nonnegative; }
};

inline CrystalSumReport crystal_sum_check(DeformationContext& ctx, const WeightMultiplicityMap& weights,
                                          const Weight& nu, const Weight& mu) {
    CrystalSumReport rep;
    const BiPoly shifted = shift_vars(kpq(ctx, nu, mu));
    rep.crystal_sum = shifted == crystal_sum(ctx, weights, mu);
    rep.shifted_decomposition = shifted == shifted_decomposition(ctx, weights, mu);
    rep.nonnegative = is_nonnegative(shifted);
    return rep;
}

inline CrystalSumReport crystal_sum_check(DeformationContext& ctx, const Weight& nu, const Weight& mu) {
    return crystal_sum_check(ctx, freudenthal(ctx.system(), nu), nu, mu);
}

/// Expands prod_alpha (1 + sum_{k>=1} v (v+1)^{k-1} e^{k alpha}) over the box sum(beta) <= box and
/// compares every coefficient with r_pq, also requiring nonnegativity.
inline bool delta_series_check(DeformationContext& ctx, int box) {
    const auto& rs = ctx.system();
    std::map<RootVector, BiPoly> series{{rs.zero_root(), BiPoly::one()}};
    AdmissibleWeights factor;
    for (const auto& tr : tagged_roots(rs, ctx.parabolic_data())) {
        std::map<RootVector, BiPoly> next;
        for (const auto& [beta, c] : series) {
            RootVector b = beta;
            for (unsigned k = 0; b.sum() <= box; ++k) {
                next[b] += c * factor(tr.var, k);
                b += tr.root;
            }
        }
        series = std::move(next);
    }
    // every beta in the box, including those with zero coefficient
    RootVector beta(rs.rank());
    while (true) {
        auto it = series.find(beta);
        const BiPoly expected = it == series.end() ? BiPoly() : it->second;
        if (expected != r_pq(ctx, beta) || !is_nonnegative(expected)) return false;
        std::size_t j = 0;
        while (j < rs.rank()) {
            ++beta[j];
            if (beta.sum() <= box) break;
            beta[j++] = 0;
        }
        if (j == rs.rank()) break;
    }
    return true;
}

}  // namespace weylpq
