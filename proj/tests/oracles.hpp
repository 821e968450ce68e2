#pragma once

/**
 * @file oracles.hpp
 * @brief Independent reference computations used by the unit tests.
 *
 * None of these touch the partition-function engines or the Weyl-group
 * alternating sums; they work from Freudenthal multiplicities and truncated
 * formal series.
 */

#include "weylpq/charge.hpp"
#include "weylpq/context.hpp"
#include "weylpq/poly.hpp"
#include "weylpq/rootsys.hpp"

#include <map>

namespace weylpq::oracle {

using Series = std::map<Weight, BiPoly>;

inline bool above(const RootSystem& rs, const Weight& w, const Weight& floor) {
    auto r = rs.to_root_coords(w - floor);
    return r && r->nonnegative();
}

/// [e^mu] ch V(nu) * prod_a (1 - e^{-a}) / (1 - t_a e^{-a}), with t_a = q on Levi roots and p otherwise.
inline BiPoly kpq_series(const RootSystem& rs, LeviMask levi, const Weight& nu, const Weight& mu) {
    Series s;
    for (const auto& [w, m] : freudenthal(rs, nu))
        if (above(rs, w, mu)) s[w] = BiPoly(m);
    for (const auto& a : rs.positive_roots()) {
        const Weight aw = rs.to_weight(a);
        Series next;
        for (const auto& [w, c] : s) {
            next[w] += c;
            if (above(rs, w - aw, mu)) next[w - aw] -= c;
        }
        s.clear();
        for (auto& [w, c] : next)
            if (!c.is_zero()) s.emplace(w, std::move(c));
    }
    for (const auto& a : rs.positive_roots()) {
        const Weight aw = rs.to_weight(a);
        const BiPoly t = supported_on(a, levi) ? BiPoly::q() : BiPoly::p();
        Series next;
        for (const auto& [w, c] : s) {
            Weight x = w;
            BiPoly f = c;
            while (above(rs, x, mu)) {
                next[x] += f;
                x = x - aw;
                f = f * t;
            }
        }
        s.clear();
        for (auto& [w, c] : next)
            if (!c.is_zero()) s.emplace(w, std::move(c));
    }
    auto it = s.find(mu);
    return it == s.end() ? BiPoly() : it->second;
}

/// Multiplicity of the Levi module with highest weight kappa in V(nu): [e^kappa] ch V(nu) * prod_{Levi a} (1 - e^{-a}).
inline long long branching_by_restriction(const RootSystem& rs, LeviMask levi, const Weight& nu, const Weight& kappa) {
    std::map<Weight, long long> s;
    for (const auto& [w, m] : freudenthal(rs, nu))
        if (above(rs, w, kappa)) s[w] = m;
    for (const auto& a : rs.positive_roots()) {
        if (!supported_on(a, levi)) continue;
        const Weight aw = rs.to_weight(a);
        std::map<Weight, long long> next;
        for (const auto& [w, c] : s) {
            next[w] += c;
            if (above(rs, w - aw, kappa)) next[w - aw] -= c;
        }
        s = std::move(next);
    }
    auto it = s.find(kappa);
    return it == s.end() ? 0 : it->second;
}

}  // namespace weylpq::oracle
