#pragma once

/**
 * @file verify.hpp
 * @brief Exhaustive identity sweeps over a grid of (system, Levi, nu, mu) and a per-identity report.
 *
 * The grid is: every Levi subset of every listed system, every dominant nu
 * with coordinate sum <= level, and every mu = nu - beta with beta in Q+ of
 * height <= box. Work is split into independent units, one per
 * (system, Levi, kind); each unit owns its own context, so units may run on
 * separate threads. Unit results are merged in unit order, which makes the
 * report independent of the thread count.
 */

#include "weylpq/charge.hpp"
#include "weylpq/context.hpp"
#include "weylpq/hall.hpp"
#include "weylpq/lusztig.hpp"
#include "weylpq/rootsys.hpp"
#include "weylpq/serialize.hpp"
#include "weylpq/stable.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <thread>
#include <vector>

namespace weylpq {

struct VerifyOptions {
    std::vector<std::string> systems{"A2", "A3", "B2", "B3", "C2", "C3", "D4", "G2"};
    int level = 2;
    int box = 6;
    int colored_box = 6;        ///< height bound for the colored-root comparisons (rank <= 3)
    int stab_cap = kDefaultStabilizationCap;
    unsigned jobs = 1;
    std::size_t max_examples = 5;  ///< counterexamples kept per identity
};

struct Tally {
    int criterion = 0;
    long long checked = 0;
    long long failures = 0;
    std::vector<std::string> examples;

    template <class Describe>
    void record(bool ok, Describe&& describe, std::size_t keep) {
        ++checked;
        if (ok) return;
        ++failures;
        if (examples.size() < keep) examples.push_back(describe());
    }

    void merge(const Tally& o, std::size_t keep) {
        criterion = o.criterion;
        checked += o.checked;
        failures += o.failures;
        for (const auto& e : o.examples)
            if (examples.size() < keep) examples.push_back(e);
    }
};

/// Identity name -> tally.
using TallyMap = std::map<std::string, Tally>;

struct VerifyReport {
    TallyMap identities;

    bool pass() const {
        return std::all_of(identities.begin(), identities.end(),
                           [](const auto& kv) { return kv.second.failures == 0 && kv.second.checked > 0; });
    }

    /// Identities attached to one acceptance criterion.
    std::vector<std::pair<std::string, Tally>> for_criterion(int c) const {
        std::vector<std::pair<std::string, Tally>> out;
        for (const auto& [name, t] : identities)
            if (t.criterion == c) out.emplace_back(name, t);
        return out;
    }

    Json to_json() const {
        Json ids = Json::array();
        for (const auto& [name, t] : identities)
            ids.push_back(Json{{"identity", name},
                               {"criterion", t.criterion},
                               {"checked", t.checked},
                               {"failures", t.failures},
                               {"counterexamples", t.examples}});
        return Json{{"identities", ids}, {"pass", pass()}};
    }
};

/// Dominant weights with coordinate sum <= level, in lexicographic order.
inline std::vector<Weight> dominant_grid(std::size_t rank, int level) {
    std::vector<Weight> out;
    Weight v(rank);
    std::function<void(std::size_t, int)> fill = [&](std::size_t i, int left) {
        if (i == rank) {
            out.push_back(v);
            return;
        }
        for (int x = 0; x <= left; ++x) {
            v[i] = x;
            fill(i + 1, left - x);
        }
        v[i] = 0;
    };
    fill(0, level);
    return out;
}

/// beta in Q+ with coordinate sum <= box.
inline std::vector<RootVector> root_box(std::size_t rank, int box) {
    std::vector<RootVector> out;
    RootVector b(rank);
    while (true) {
        out.push_back(b);
        std::size_t j = 0;
        while (j < rank) {
            ++b[j];
            if (b.sum() <= box) break;
            b[j++] = 0;
        }
        if (j == rank) break;
    }
    return out;
}

namespace detail {

inline std::string describe(const DeformationContext& ctx, const Weight& nu, const Weight& mu) {
    return ctx.system().name() + " {" + levi_to_string(ctx.levi(), ctx.system().rank()) + "} nu=" + nu.str() +
           " mu=" + mu.str();
}

inline std::string describe(const DeformationContext& ctx) {
    return ctx.system().name() + " {" + levi_to_string(ctx.levi(), ctx.system().rank()) + "}";
}

struct UnitRunner {
    const VerifyOptions& opt;
    TallyMap tallies;

    template <class Describe>
    void check(const std::string& name, int criterion, bool ok, Describe&& describe) {
        Tally& t = tallies[name];
        t.criterion = criterion;
        t.record(ok, std::forward<Describe>(describe), opt.max_examples);
    }

    // Decomposition, specializations, positivity, crystal sums, Cauchy, W-bar stability.
    void grid(DeformationContext& ctx) {
        const auto& rs = ctx.system();
        const auto& par = ctx.parabolic_data();
        const auto betas = root_box(rs.rank(), opt.box);
        std::map<RootVector, BiPoly> shifted_zero;
        for (const auto& nu : dominant_grid(rs.rank(), opt.level)) {
            const WeightMultiplicityMap weights = freudenthal(rs, nu);
            for (const auto& beta : betas) {
                const Weight mu = nu - rs.to_weight(beta);
                auto where = [&] { return describe(ctx, nu, mu); };
                const BiPoly k = kpq(ctx, nu, mu);
                check("decomposition", 2, k == decomposition_sum(ctx, nu, mu), where);

                const SpecializationFlags f = specialization_check(ctx, nu, mu);
                check("specialization_p0", 3, f.p_zero, [&] {
                    return where() + " K(0,q)=" + specialize(k, 0, std::nullopt).to_string() +
                           " expected=" + levi_restricted_analogue(ctx, nu, mu).to_string();
                });
                check("specialization_diagonal", 3, f.diagonal, where);
                if (f.levi_dominant_mu) {
                    check("specialization_q0", 3, f.q_zero, where);
                    check("positivity_p1", 4, f.p_one_nonnegative, where);
                }
                const BiPoly shifted = shift_vars(k);
                check("positivity_shifted", 4, is_nonnegative(shifted), where);

                // K(p+1,q+1) through the colored statistic and through the finite beta-sum
                BiPoly via_chi, via_zero;
                for (const auto& [wt, m] : weights) {
                    auto b = rs.to_root_coords(wt - mu);
                    if (!b || !b->nonnegative()) continue;
                    const BiPoly& r = r_pq(ctx, *b);
                    if (!r.is_zero()) via_chi += BiPoly(m) * r;
                    auto it = shifted_zero.find(*b);
                    if (it == shifted_zero.end()) it = shifted_zero.emplace(*b, shifted_zero_weight(ctx, *b)).first;
                    if (!it->second.is_zero()) via_zero += BiPoly(m) * it->second;
                }
                check("crystal_sum", 5, shifted == via_chi, where);
                check("shifted_decomposition", 5, shifted == via_zero, where);
            }
        }
        for (const auto& beta : betas)
            check("cauchy", 7, cauchy_check(ctx.pq(), ctx.hat(), ctx.bar(), beta),
                  [&] { return describe(ctx) + " beta=" + beta.str(); });
        check("complement_stability", 7, check_complement_stability(par), [&] { return describe(ctx); });
        check("stabilizer_witness", 7, stabilizer_witness_check(ctx), [&] { return describe(ctx); });
    }

    // Colored-root statistics against the brute force and the alternating sum.
    void colored(DeformationContext& ctx) {
        const auto& rs = ctx.system();
        for (const auto& beta : root_box(rs.rank(), opt.colored_box)) {
            auto where = [&] { return describe(ctx) + " beta=" + beta.str(); };
            check("colored_n", 5, n_pq(ctx, beta) == shift_vars(ctx.pq()(beta)), where);
            const BiPoly& r = r_pq(ctx, beta);
            check("colored_r_triangle", 5,
                  r == r_pq_bruteforce(rs, ctx.parabolic_data(), beta, opt.colored_box) &&
                      r == shifted_zero_weight(ctx, beta),
                  where);
        }
        check("delta_series", 5, delta_series_check(ctx, opt.colored_box), [&] { return describe(ctx); });
    }

    // Stabilization along rho_diamond and along 2 rho_diamond, with the factorization when H holds.
    void stabilization(DeformationContext& ctx, std::optional<Rational> expected_c) {
        const auto& rs = ctx.system();
        const auto& par = ctx.parabolic_data();
        const auto c = hypothesis_h_check(rs, par);
        check("hypothesis_h", 6, c == expected_c, [&] {
            return describe(ctx) + " c=" + (c ? std::to_string(c->numerator()) + "/" + std::to_string(c->denominator())
                                              : std::string("none"));
        });
        const auto betas = root_box(rs.rank(), opt.box);
        for (const auto& nu : dominant_grid(rs.rank(), opt.level))
            for (const auto& beta : betas) {
                const Weight mu = nu - rs.to_weight(beta);
                auto where = [&] { return describe(ctx, nu, mu); };
                std::optional<StabilizationResult> st;
                try {
                    st = kpq_stab(ctx, nu, mu, opt.stab_cap);
                } catch (const CapExceeded&) {
                }
                bool ok = st && st->value == st->closed_form;
                if (ok) {
                    const int k = st->k_stable + 3;
                    ok = kpq(ctx, nu + k * par.rho_diamond, mu + k * par.rho_diamond) == st->value;
                }
                check("stabilization", 6, ok, where);
                if (st) {
                    std::optional<StabilizationResult> twice;
                    try {
                        twice = stabilize_along(ctx, nu, mu, 2 * par.rho_diamond, opt.stab_cap);
                    } catch (const CapExceeded&) {
                    }
                    check("stabilization_double_step", 6, twice && twice->value == st->value, where);
                }
                if (c && is_levi_dominant(par, mu)) {
                    bool fact = false;
                    try {
                        fact = factorization_check(ctx, nu, mu, opt.stab_cap);
                    } catch (const CapExceeded&) {
                    }
                    check("factorization", 6, fact, where);
                }
            }
        if (c)
            for (const auto& beta : betas)
                check("single_power", 6, single_power_check(ctx, beta, par.rho_diamond),
                      [&] { return describe(ctx) + " beta=" + beta.str(); });
    }

    // Freudenthal, alternant division, and K(1,1) at every weight.
    void oracles(DeformationContext& ctx) {
        const auto& rs = ctx.system();
        check("denominator", 7, denominator_check(rs), [&] { return rs.name(); });
        for (const auto& nu : dominant_grid(rs.rank(), opt.level)) {
            const WeightMultiplicityMap f = freudenthal(rs, nu);
            bool ok = f == weyl_character(rs, ctx.weyl(), nu);
            for (const auto& [wt, m] : f) ok = ok && specialize(kpq(ctx, nu, wt), 1, 1) == BiPoly(m);
            check("oracle_agreement", 8, ok, [&] { return rs.name() + " nu=" + nu.str(); });
        }
    }

    void hall(DeformationContext& ctx) {
        const auto& rs = ctx.system();
        const auto lam = lambda_closure(rs, dominant_grid(rs.rank(), opt.level));
        const TransitionMatrix m = transition_matrix(ctx, lam);
        check("hall_unitriangular", 9, m.is_unitriangular(), [&] { return describe(ctx); });
        check("hall_roundtrip", 9, roundtrip_check(ctx, lam), [&] { return describe(ctx); });
    }

    // The A2 adjoint example with explicit values.
    void example(DeformationContext& ctx) {
        const Weight nu{1, 1}, zero{0, 0};
        const BiPoly qq = BiPoly::q() * BiPoly::q();
        const BiPoly k = diagonal(kpq(ctx, nu, zero));
        bool ok = k == qq + BiPoly::q();
        ok = ok && diagonal(shift_vars(kpq(ctx, nu, zero))) == qq + BiPoly(3) * BiPoly::q() + BiPoly(2);
        const WeightMultiplicityMap w = freudenthal(ctx.system(), nu);
        ok = ok && w.at(zero) == 2;
        ok = ok && diagonal(chi(ctx, zero, zero)) == BiPoly::one();
        ok = ok && diagonal(chi(ctx, Weight{2, -1}, zero)) == BiPoly::q();
        ok = ok && diagonal(chi(ctx, Weight{-1, 2}, zero)) == BiPoly::q();
        ok = ok && diagonal(chi(ctx, nu, zero)) == qq + BiPoly::q();
        ok = ok && diagonal(crystal_sum(ctx, w, zero)) == qq + BiPoly(3) * BiPoly::q() + BiPoly(2);
        check("example_a2_adjoint", 1, ok, [&] { return describe(ctx); });
    }
};

struct Unit {
    std::string system;
    LeviMask levi = 0;
    enum Kind { Grid, Colored, Stab, Oracles, Hall, Example } kind = Grid;
    std::optional<Rational> expected_c;
};

/// Systems and Levis of the stabilization sweep, with the expected constant of Hypothesis H.
inline std::vector<Unit> stabilization_cases(const std::vector<std::string>& systems) {
    struct Case {
        const char* sys;
        const char* levi;
        std::optional<Rational> c;
    };
    const Case cases[] = {{"C2", "1", Rational(2)},     {"C3", "1,2", Rational(2)}, {"B3", "1,2", std::nullopt},
                          {"D4", "1,2,3", Rational(1)}, {"B3", "2,3", Rational(1)}};
    std::vector<Unit> out;
    for (const auto& c : cases)
        if (std::find(systems.begin(), systems.end(), c.sys) != systems.end())
            out.push_back({c.sys, parse_levi(c.levi, parse_system(c.sys).rank()), Unit::Stab, c.c});
    return out;
}

inline std::vector<Unit> verify_units(const VerifyOptions& opt) {
    std::vector<Unit> units;
    for (const auto& s : opt.systems) {
        const RootSystem rs = parse_system(s);
        const std::string name = rs.name();
        units.push_back({name, 0, Unit::Oracles, std::nullopt});
        if (name == "A2") units.push_back({name, 1, Unit::Example, std::nullopt});
        for (LeviMask l = 0; l <= full_levi(rs.rank()); ++l) {
            units.push_back({name, l, Unit::Grid, std::nullopt});
            if (rs.rank() <= 3) units.push_back({name, l, Unit::Colored, std::nullopt});
            if (name == "A2" || name == "C2" || name == "C3") units.push_back({name, l, Unit::Hall, std::nullopt});
        }
    }
    std::vector<std::string> canon;
    for (const auto& s : opt.systems) canon.push_back(parse_system(s).name());
    for (auto& u : stabilization_cases(canon)) units.push_back(u);
    return units;
}

}  // namespace detail

/// Runs every identity over the grid; jobs > 1 distributes units over threads.
inline VerifyReport run_verify(const VerifyOptions& opt) {
    const auto units = detail::verify_units(opt);
    std::map<std::string, std::shared_ptr<const std::vector<WeylElement>>> groups;
    for (const auto& u : units)
        if (!groups.count(u.system))
            groups[u.system] = std::make_shared<const std::vector<WeylElement>>(weyl_group(parse_system(u.system)));

    std::vector<TallyMap> results(units.size());
    std::vector<std::exception_ptr> errors(units.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < units.size(); i = next++) {
            try {
                const auto& u = units[i];
                DeformationContext ctx(parse_system(u.system), u.levi, groups.at(u.system));
                detail::UnitRunner run{opt, {}};
                switch (u.kind) {
                    case detail::Unit::Grid: run.grid(ctx); break;
                    case detail::Unit::Colored: run.colored(ctx); break;
                    case detail::Unit::Stab: run.stabilization(ctx, u.expected_c); break;
                    case detail::Unit::Oracles: run.oracles(ctx); break;
                    case detail::Unit::Hall: run.hall(ctx); break;
                    case detail::Unit::Example: run.example(ctx); break;
                }
                results[i] = std::move(run.tallies);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const unsigned n = std::max(1u, std::min<unsigned>(opt.jobs, static_cast<unsigned>(units.size())));
    if (n == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    VerifyReport rep;
    for (std::size_t i = 0; i < units.size(); ++i) {
        if (errors[i]) std::rethrow_exception(errors[i]);
        for (const auto& [name, t] : results[i]) rep.identities[name].merge(t, opt.max_examples);
    }
    return rep;
}

}  // namespace weylpq
