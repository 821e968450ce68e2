#pragma once

/**
 * @file kostant.hpp
 * @brief Memoized (p,q)-weighted vector partition functions over positive roots.
 *
 * A PartitionEngine expands prod_alpha sum_m w_alpha(m) e^{m alpha} one
 * coefficient at a time. The per-root weight w_alpha(m) is a policy:
 *
 *   KostantWeights    v^m                      P_{p,q}, hat P_p, bar P_q
 *   ShiftedWeights    (v+1)^m                  N_{p,q}
 *   AdmissibleWeights 1 if m = 0, v(v+1)^{m-1} R_{p,q}
 *
 * where v is p for roots outside the Levi and q for roots inside it.
 * Coefficients are computed by the recursion
 *   P(beta, i) = sum_{k >= 0} w_i(k) P(beta - k alpha_i, i + 1)
 * memoized on (i, beta).
 */

#include "weylpq/poly.hpp"
#include "weylpq/rootsys.hpp"

#include <cstdint>
#include <map>
#include <unordered_map>
#include <utility>
#include <vector>

namespace weylpq {

enum class Var : std::uint8_t { P, Q };

struct TaggedRoot {
    RootVector root;
    Var var;
};

inline BiPoly variable(Var v) { return v == Var::P ? BiPoly::p() : BiPoly::q(); }

struct KostantWeights {
    BiPoly operator()(Var v, unsigned m) const {
        return v == Var::P ? BiPoly::monomial(1, m, 0) : BiPoly::monomial(1, 0, m);
    }
};

struct ShiftedWeights {
    BiPoly operator()(Var v, unsigned m) const { return (variable(v) + BiPoly::one()).pow(m); }
};

struct AdmissibleWeights {
    BiPoly operator()(Var v, unsigned m) const {
        if (m == 0) return BiPoly::one();
        return variable(v) * (variable(v) + BiPoly::one()).pow(m - 1);
    }
};

template <class Weights>
class PartitionEngine {
public:
    PartitionEngine() = default;
    PartitionEngine(std::vector<TaggedRoot> roots, std::size_t rank) : roots_(std::move(roots)), rank_(rank) {
        memo_.resize(roots_.size());
        suffix_support_.assign(roots_.size() + 1, 0);
        for (std::size_t i = roots_.size(); i-- > 0;) {
            LeviMask s = suffix_support_[i + 1];
            for (std::size_t j = 0; j < rank_; ++j)
                if (roots_[i].root[j] != 0) s |= 1u << j;
            suffix_support_[i] = s;
        }
    }

    const std::vector<TaggedRoot>& roots() const { return roots_; }
    std::size_t rank() const { return rank_; }

    /// Coefficient of e^beta; zero outside the cone spanned by the engine's roots.
    const BiPoly& operator()(const RootVector& beta) { return eval(0, beta); }

    std::size_t memo_size() const {
        std::size_t s = 0;
        for (const auto& m : memo_) s += m.size();
        return s;
    }

private:
    std::vector<TaggedRoot> roots_;
    std::size_t rank_ = 0;
    std::vector<std::unordered_map<RootVector, BiPoly, LatticeHash>> memo_;
    std::vector<LeviMask> suffix_support_;
    std::map<std::pair<Var, unsigned>, BiPoly> weight_cache_;
    Weights weights_;

    static const BiPoly& zero() {
        static const BiPoly z;
        return z;
    }
    static const BiPoly& unit() {
        static const BiPoly u = BiPoly::one();
        return u;
    }

    const BiPoly& weight(Var v, unsigned m) {
        auto key = std::make_pair(v, m);
        auto it = weight_cache_.find(key);
        if (it == weight_cache_.end()) it = weight_cache_.emplace(key, weights_(v, m)).first;
        return it->second;
    }

    const BiPoly& eval(std::size_t i, const RootVector& beta) {
        if (!beta.nonnegative()) return zero();
        if (beta.is_zero()) return unit();
        if (i == roots_.size()) return zero();
        for (std::size_t j = 0; j < rank_; ++j)
            if (beta[j] != 0 && !((suffix_support_[i] >> j) & 1u)) return zero();
        auto& table = memo_[i];
        if (auto it = table.find(beta); it != table.end()) return it->second;
        BiPoly total;
        const TaggedRoot& tr = roots_[i];
        RootVector residual = beta;
        for (unsigned k = 0; residual.nonnegative(); ++k) {
            const BiPoly& rest = eval(i + 1, residual);
            if (!rest.is_zero()) total += k == 0 ? rest : weight(tr.var, k) * rest;
            residual -= tr.root;
        }
        return table.emplace(beta, std::move(total)).first->second;
    }
};

using KostantEngine = PartitionEngine<KostantWeights>;
using ShiftedEngine = PartitionEngine<ShiftedWeights>;
using AdmissibleEngine = PartitionEngine<AdmissibleWeights>;

/// All positive roots; Levi roots carry q, the others p.
inline std::vector<TaggedRoot> tagged_roots(const RootSystem& rs, const ParabolicData& par) {
    std::vector<TaggedRoot> out;
    for (const auto& r : rs.positive_roots()) out.push_back({r, supported_on(r, par.levi) ? Var::Q : Var::P});
    return out;
}

inline KostantEngine make_pq_engine(const RootSystem& rs, const ParabolicData& par) {
    return KostantEngine(tagged_roots(rs, par), rs.rank());
}

/// Only the roots outside the Levi, each weighted p.
inline KostantEngine make_hat_engine(const RootSystem& rs, const ParabolicData& par) {
    std::vector<TaggedRoot> out;
    for (const auto& r : par.complement_roots) out.push_back({r, Var::P});
    return KostantEngine(std::move(out), rs.rank());
}

/// Only the Levi roots, each weighted q.
inline KostantEngine make_bar_engine(const RootSystem& rs, const ParabolicData& par) {
    std::vector<TaggedRoot> out;
    for (const auto& r : par.levi_positive_roots) out.push_back({r, Var::Q});
    return KostantEngine(std::move(out), rs.rank());
}

/// Every positive root weighted q: the ordinary q-partition function.
inline KostantEngine make_single_variable_engine(const RootSystem& rs) {
    std::vector<TaggedRoot> out;
    for (const auto& r : rs.positive_roots()) out.push_back({r, Var::Q});
    return KostantEngine(std::move(out), rs.rank());
}

inline const BiPoly& kostant_pq(KostantEngine& engine, const RootVector& beta) { return engine(beta); }
inline const BiPoly& kostant_hat_p(KostantEngine& hat, const RootVector& eta) { return hat(eta); }
inline const BiPoly& kostant_bar_q(KostantEngine& bar, const RootVector& delta) { return bar(delta); }

/// P_{p,q}(beta) == sum_{gamma <= beta} hat P_p(gamma) bar P_q(beta - gamma).
inline bool cauchy_check(KostantEngine& pq, KostantEngine& hat, KostantEngine& bar, const RootVector& beta) {
    require(beta.nonnegative(), "cauchy_check needs beta in Q+");
    BiPoly rhs;
    RootVector gamma(beta.size());
    // odometer over the box 0 <= gamma <= beta
    while (true) {
        const BiPoly& h = hat(gamma);
        if (!h.is_zero()) {
            const BiPoly& b = bar(beta - gamma);
            if (!b.is_zero()) rhs += h * b;
        }
        std::size_t j = 0;
        while (j < beta.size() && gamma[j] == beta[j]) gamma[j++] = 0;
        if (j == beta.size()) break;
        ++gamma[j];
    }
    return pq(beta) == rhs;
}

}  // namespace weylpq
