#pragma once

/**
 * @file hall.hpp
 * @brief Weyl characters by alternant division, the denominator identity, and the
 *        (p,q) Hall-Littlewood transition matrix with its unitriangular inverse.
 */

#include "weylpq/charge.hpp"
#include "weylpq/context.hpp"
#include "weylpq/error.hpp"
#include "weylpq/lusztig.hpp"
#include "weylpq/poly.hpp"
#include "weylpq/rootsys.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace weylpq {

/// Weight -> signed integer coefficient, over the full support.
using CharacterMap = std::map<Weight, long long>;

inline constexpr std::size_t kDefaultExpansionCap = 1000000;

namespace detail {

/// Linear height functional sum_i det(C) * rootcoord_i; strictly increasing along positive roots.
inline long long scaled_height(const RootSystem& rs, const Weight& v) {
    auto r = rs.scaled_root_coords(v);
    long long h = 0;
    for (std::size_t i = 0; i < rs.rank(); ++i) h += r[i];
    return h;
}

/// Translation-invariant total order: height first, then lexicographic.
struct HeightOrder {
    const RootSystem* rs;
    bool operator()(const Weight& a, const Weight& b) const {
        const long long ha = scaled_height(*rs, a), hb = scaled_height(*rs, b);
        if (ha != hb) return ha < hb;
        return a < b;
    }
};

inline void add_term(CharacterMap& m, const Weight& w, long long c) {
    auto [it, fresh] = m.emplace(w, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) m.erase(it);
    }
}

}  // namespace detail

/// sum_w eps(w) e^{w(v)}.
inline CharacterMap alternant(const RootSystem&, const std::vector<WeylElement>& group, const Weight& v) {
    CharacterMap a;
    for (const auto& w : group) detail::add_term(a, act(w, v), w.sign);
    return a;
}

/// Character of V(nu) as the quotient of the alternants of nu + rho and rho, by long division.
inline CharacterMap weyl_character(const RootSystem& rs, const std::vector<WeylElement>& group, const Weight& nu,
                                   long long cap = kDefaultDimensionCap) {
    require(rs.is_dominant(nu), "nu = " + nu.str() + " is not dominant");
    const Integer dim = weyl_dimension(rs, nu);
    if (dim > cap)
        throw CapExceeded("dim V(" + nu.str() + ") = " + dim.str() + " exceeds the cap of " + std::to_string(cap));
    const Weight rho = rs.rho();
    const CharacterMap divisor = alternant(rs, group, rho);
    std::map<Weight, long long, detail::HeightOrder> rem(detail::HeightOrder{&rs});
    for (const auto& [w, c] : alternant(rs, group, nu + rho)) rem.emplace(w, c);
    CharacterMap quotient;
    for (Integer steps = 0; !rem.empty(); ++steps) {
        if (steps > dim) throw std::logic_error("alternant division did not terminate for " + nu.str());
        auto top = std::prev(rem.end());
        const Weight shift = top->first - rho;
        const long long c = top->second;
        detail::add_term(quotient, shift, c);
        for (const auto& [w, d] : divisor) {
            auto [it, fresh] = rem.emplace(w + shift, -c * d);
            if (!fresh) {
                it->second -= c * d;
                if (it->second == 0) rem.erase(it);
            }
        }
    }
    return quotient;
}

inline CharacterMap weyl_character(const RootSystem& rs, const Weight& nu, long long cap = kDefaultDimensionCap) {
    return weyl_character(rs, weyl_group(rs), nu, cap);
}

/// prod_alpha (1 - e^{-alpha}) == sum_w eps(w) e^{w(rho) - rho}.
inline bool denominator_check(const RootSystem& rs, std::size_t cap = kDefaultExpansionCap) {
    CharacterMap prod{{rs.zero_weight(), 1}};
    for (const auto& a : rs.positive_roots()) {
        const Weight aw = rs.to_weight(a);
        CharacterMap next;
        for (const auto& [w, c] : prod) {
            detail::add_term(next, w, c);
            detail::add_term(next, w - aw, -c);
        }
        if (next.size() > cap) throw CapExceeded("denominator expansion exceeds " + std::to_string(cap) + " terms");
        prod = std::move(next);
    }
    CharacterMap rhs;
    const Weight rho = rs.rho();
    for (const auto& w : weyl_group(rs)) detail::add_term(rhs, act(w, rho) - rho, w.sign);
    return prod == rhs;
}

/// Downward closure of the seeds: repeatedly subtract positive roots, keeping dominant results.
inline std::vector<Weight> lambda_closure(const RootSystem& rs, const std::vector<Weight>& seeds) {
    std::set<Weight> all;
    for (const auto& s : seeds) {
        require(s.size() == rs.rank(), "seed " + s.str() + " has the wrong length");
        require(rs.is_dominant(s), "seed " + s.str() + " is not dominant");
        for (const auto& w : dominant_weights_below(rs, s)) all.insert(w);
    }
    return {all.begin(), all.end()};
}

/// Every dominant weight of the closure of the elements of lambda_set is in lambda_set.
inline bool is_downward_closed(const RootSystem& rs, const std::vector<Weight>& lambda_set) {
    std::set<Weight> have(lambda_set.begin(), lambda_set.end());
    for (const auto& w : lambda_closure(rs, lambda_set))
        if (!have.count(w)) return false;
    return true;
}

/// Sorts into a linear extension of dominance, larger weights first.
inline std::vector<Weight> dominance_sorted(const RootSystem& rs, std::vector<Weight> lambda_set) {
    detail::HeightOrder less{&rs};
    std::sort(lambda_set.begin(), lambda_set.end(), [&](const Weight& a, const Weight& b) { return less(b, a); });
    return lambda_set;
}

/// Schur-expansion coefficients nu -> K_{nu,mu}(p,q) of Q'_mu over lambda_set.
inline std::map<Weight, BiPoly> qprime(DeformationContext& ctx, const Weight& mu, const std::vector<Weight>& lambda_set) {
    const auto& rs = ctx.system();
    require(rs.is_dominant(mu), "mu = " + mu.str() + " is not dominant");
    require(is_downward_closed(rs, lambda_set), "the weight set is not downward closed");
    std::map<Weight, BiPoly> out;
    for (const auto& nu : lambda_set) out[nu] = kpq(ctx, nu, mu);
    return out;
}

struct TransitionMatrix {
    std::vector<Weight> labels;                ///< larger weights first
    std::vector<std::vector<BiPoly>> entries;  ///< entries[i][j] = K_{labels[i], labels[j]}

    std::size_t size() const { return labels.size(); }

    bool is_unitriangular() const {
        for (std::size_t i = 0; i < size(); ++i) {
            if (entries[i][i] != BiPoly::one()) return false;
            for (std::size_t j = 0; j < i; ++j)
                if (!entries[i][j].is_zero()) return false;
        }
        return true;
    }
};

inline TransitionMatrix identity_matrix(const std::vector<Weight>& labels) {
    TransitionMatrix m{labels, std::vector<std::vector<BiPoly>>(labels.size(), std::vector<BiPoly>(labels.size()))};
    for (std::size_t i = 0; i < labels.size(); ++i) m.entries[i][i] = BiPoly::one();
    return m;
}

inline TransitionMatrix operator*(const TransitionMatrix& a, const TransitionMatrix& b) {
    require(a.labels == b.labels, "matrix label mismatch");
    const std::size_t n = a.size();
    TransitionMatrix r{a.labels, std::vector<std::vector<BiPoly>>(n, std::vector<BiPoly>(n))};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (a.entries[i][k].is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j)
                if (!b.entries[k][j].is_zero()) r.entries[i][j] += a.entries[i][k] * b.entries[k][j];
        }
    return r;
}

inline bool operator==(const TransitionMatrix& a, const TransitionMatrix& b) {
    return a.labels == b.labels && a.entries == b.entries;
}

/// The matrix (K_{nu,mu}(p,q)) over lambda_set.
inline TransitionMatrix transition_matrix(DeformationContext& ctx, const std::vector<Weight>& lambda_set) {
    const auto& rs = ctx.system();
    require(!lambda_set.empty(), "empty weight set");
    require(is_downward_closed(rs, lambda_set), "the weight set is not downward closed");
    TransitionMatrix m;
    m.labels = dominance_sorted(rs, lambda_set);
    const std::size_t n = m.size();
    m.entries.assign(n, std::vector<BiPoly>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.entries[i][j] = kpq(ctx, m.labels[i], m.labels[j]);
    return m;
}

/// Inverse of a unitriangular matrix by back-substitution.
inline TransitionMatrix invert_unitriangular(const TransitionMatrix& m) {
    if (!m.is_unitriangular()) throw std::logic_error("transition matrix is not unitriangular");
    const std::size_t n = m.size();
    TransitionMatrix x = identity_matrix(m.labels);
    for (std::size_t i = n; i-- > 0;)
        for (std::size_t j = i + 1; j < n; ++j) {
            BiPoly s;
            for (std::size_t k = i + 1; k <= j; ++k)
                if (!m.entries[i][k].is_zero() && !x.entries[k][j].is_zero()) s += m.entries[i][k] * x.entries[k][j];
            x.entries[i][j] = -s;
        }
    return x;
}

/// Row mu of the inverse expresses P_mu(p,q) in the Weyl characters s_nu.
inline TransitionMatrix p_basis(DeformationContext& ctx, const std::vector<Weight>& lambda_set) {
    TransitionMatrix m = transition_matrix(ctx, lambda_set);
    TransitionMatrix x = invert_unitriangular(m);
    if (!(m * x == identity_matrix(m.labels))) throw std::logic_error("back-substitution failed");
    return x;
}

inline bool roundtrip_check(DeformationContext& ctx, const std::vector<Weight>& lambda_set) {
    TransitionMatrix m = transition_matrix(ctx, lambda_set);
    if (!m.is_unitriangular()) return false;
    TransitionMatrix x = invert_unitriangular(m);
    const TransitionMatrix id = identity_matrix(m.labels);
    return m * x == id && x * m == id;
}

/// Header row of weight labels, then one row per weight; entries are polynomial strings.
inline std::string to_csv(const TransitionMatrix& m) {
    auto quote = [](const std::string& s) { return "\"" + s + "\""; };
    std::ostringstream os;
    os << quote("weight");
    for (const auto& l : m.labels) os << "," << quote(l.str());
    os << "\n";
    for (std::size_t i = 0; i < m.size(); ++i) {
        os << quote(m.labels[i].str());
        for (std::size_t j = 0; j < m.size(); ++j) os << "," << quote(m.entries[i][j].to_string());
        os << "\n";
    }
    return os.str();
}

}  // namespace weylpq
