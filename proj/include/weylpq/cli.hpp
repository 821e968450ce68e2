#pragma once

/**
 * @file cli.hpp
 * @brief Job specification, dispatch, rendering and the on-disk result cache behind `weylpq`.
 */

#include "weylpq/charge.hpp"
#include "weylpq/context.hpp"
#include "weylpq/error.hpp"
#include "weylpq/hall.hpp"
#include "weylpq/lusztig.hpp"
#include "weylpq/rootsys.hpp"
#include "weylpq/serialize.hpp"
#include "weylpq/stable.hpp"
#include "weylpq/verify.hpp"

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace weylpq::cli {

enum class Format { Text, Json, Csv };

enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kUsage = 2, kCapExceeded = 3 };

inline const std::vector<std::string>& commands() {
    static const std::vector<std::string> c{"roots", "kpq", "branch", "kbar", "stab",
                                            "delta-stab", "colored", "chi", "hl", "verify"};
    return c;
}

struct JobSpec {
    std::string command;
    std::string system;
    std::string levi;
    std::optional<std::vector<int>> nu, mu, delta, target, beta, weight;
    std::vector<std::string> systems;  ///< verify only; empty means the default list
    int level = 2;
    int box = 6;
    int cap = kDefaultStabilizationCap;
    Format format = Format::Json;
    unsigned jobs = 1;
};

/// Parses "1,-2,0" into integers.
inline std::vector<int> parse_weight(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception&) {
            throw PreconditionError("bad weight coordinate '" + tok + "' in '" + text + "'");
        }
        while (used < tok.size() && std::isspace(static_cast<unsigned char>(tok[used]))) ++used;
        if (used != tok.size()) throw PreconditionError("bad weight coordinate '" + tok + "' in '" + text + "'");
        out.push_back(v);
    }
    if (out.empty()) throw PreconditionError("empty weight '" + text + "'");
    return out;
}

namespace detail {

inline std::string join(const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

template <class Tag>
Lattice<Tag> lattice(const RootSystem& rs, const std::optional<std::vector<int>>& v, const char* what) {
    require(v.has_value(), std::string("--") + what + " is required");
    require(v->size() == rs.rank(), std::string("--") + what + " has length " + std::to_string(v->size()) +
                                        ", expected " + std::to_string(rs.rank()) + " for " + rs.name());
    return Lattice<Tag>(*v);
}

inline Weight weight_arg(const RootSystem& rs, const std::optional<std::vector<int>>& v, const char* what) {
    return lattice<WeightTag>(rs, v, what);
}

}  // namespace detail

/// "2" rather than boost's "2/1".
inline std::string rational_str(const Rational& r) {
    return r.denominator() == 1 ? std::to_string(r.numerator())
                                : std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

/// Canonical description of everything that determines a job's payload.
inline std::string canonical_key(const JobSpec& job) {
    std::ostringstream os;
    auto opt = [&](const char* name, const std::optional<std::vector<int>>& v) {
        os << '|' << name << '=' << (v ? detail::join(*v) : "-");
    };
    os << job.command << "|system=" << job.system << "|levi=" << job.levi;
    opt("nu", job.nu);
    opt("mu", job.mu);
    opt("delta", job.delta);
    opt("target", job.target);
    opt("beta", job.beta);
    opt("weight", job.weight);
    os << "|systems=";
    for (const auto& s : job.systems) os << s << ';';
    os << "|level=" << job.level << "|box=" << job.box << "|cap=" << job.cap;
    return os.str();
}

/// 64-bit FNV-1a of the canonical key, as 16 hex digits.
inline std::string cache_key(const JobSpec& job) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : canonical_key(job)) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << h;
    return os.str();
}

inline Json job_echo(const JobSpec& job) {
    Json j{{"command", job.command}};
    if (!job.system.empty()) j["system"] = job.system;
    if (job.command != "verify" && job.command != "roots") j["levi"] = job.levi;
    auto put = [&](const char* name, const std::optional<std::vector<int>>& v) {
        if (v) j[name] = *v;
    };
    put("nu", job.nu);
    put("mu", job.mu);
    put("delta", job.delta);
    put("target", job.target);
    put("beta", job.beta);
    put("weight", job.weight);
    if (job.command == "verify") {
        j["systems"] = job.systems;
        j["level"] = job.level;
        j["box"] = job.box;
    }
    if (job.command == "hl") j["level"] = job.level;
    if (job.command == "stab" || job.command == "delta-stab") j["cap"] = job.cap;
    return j;
}

/// Deterministic part of a run: {"job", and "poly" and/or "result"}.
struct Outcome {
    Json payload;
    Json timing;  ///< nondeterministic diagnostics kept out of the payload
    bool verification_failed = false;
};

inline Outcome run(const JobSpec& job) {
    Outcome out;
    out.payload = Json{{"job", job_echo(job)}};
    Json& p = out.payload;

    if (job.command == "verify") {
        VerifyOptions opt;
        if (!job.systems.empty()) opt.systems = job.systems;
        for (const auto& s : opt.systems) parse_system(s);
        opt.level = job.level;
        opt.box = job.box;
        opt.jobs = job.jobs;
        const VerifyReport rep = run_verify(opt);
        p["result"] = rep.to_json();
        out.verification_failed = !rep.pass();
        return out;
    }

    require(!job.system.empty(), "--system is required");
    const RootSystem rs = parse_system(job.system);

    if (job.command == "roots") {
        Json roots = Json::array();
        for (const auto& r : rs.positive_roots()) roots.push_back(r.to_vector());
        Json cartan = Json::array();
        for (std::size_t i = 0; i < rs.rank(); ++i) {
            Json row = Json::array();
            for (std::size_t j = 0; j < rs.rank(); ++j) row.push_back(rs.cartan()(i, j));
            cartan.push_back(row);
        }
        Json r{{"system", rs.name()},
               {"rank", rs.rank()},
               {"cartan", cartan},
               {"symmetrizer", rs.symmetrizer()},
               {"positive_roots", roots},
               {"weyl_order", rs.weyl_order()},
               {"rho", to_json(rs.rho())}};
        if (!job.levi.empty()) {
            const ParabolicData par = parabolic(rs, parse_levi(job.levi, rs.rank()));
            Json levi_roots = Json::array(), comp = Json::array();
            for (const auto& a : par.levi_positive_roots) levi_roots.push_back(a.to_vector());
            for (const auto& a : par.complement_roots) comp.push_back(a.to_vector());
            auto c = hypothesis_h_check(rs, par);
            r["parabolic"] = Json{{"levi", levi_to_string(par.levi, rs.rank())},
                                  {"levi_positive_roots", levi_roots},
                                  {"complement_roots", comp},
                                  {"levi_weyl_order", par.levi_weyl.size()},
                                  {"rho_bar", to_json(par.rho_bar)},
                                  {"rho_diamond", to_json(par.rho_diamond)},
                                  {"hypothesis_c", c ? Json(rational_str(*c)) : Json(nullptr)}};
        }
        p["result"] = r;
        return out;
    }

    if (job.command == "delta-stab") {
        const Weight delta = detail::weight_arg(rs, job.delta, "delta");
        const Weight nu = detail::weight_arg(rs, job.nu, "nu");
        const Weight mu = detail::weight_arg(rs, job.mu, "mu");
        const DeltaStabilization d = delta_stab(rs, delta, nu, mu, job.cap);
        p["poly"] = to_json(d.result.value);
        Json r{{"levi", levi_to_string(d.levi, rs.rank())},
               {"k_stable", d.result.k_stable},
               {"closed_form", to_json(d.result.closed_form)},
               {"pairing_constant", d.h2_constant ? Json(rational_str(*d.h2_constant)) : Json(nullptr)}};
        if (d.factorization_ok) r["factorization"] = *d.factorization_ok;
        p["result"] = r;
        out.timing = Json{{"step_ms", d.result.step_ms}};
        return out;
    }

    DeformationContext ctx(rs, parse_levi(job.levi, rs.rank()));

    if (job.command == "kpq") {
        p["poly"] = to_json(kpq(ctx, detail::weight_arg(rs, job.nu, "nu"), detail::weight_arg(rs, job.mu, "mu")));
    } else if (job.command == "branch") {
        p["poly"] = to_json(branching_poly(ctx, detail::weight_arg(rs, job.nu, "nu"),
                                           detail::weight_arg(rs, job.target, "target")));
    } else if (job.command == "kbar") {
        p["poly"] = to_json(straighten_kbar(ctx, detail::weight_arg(rs, job.target, "target"),
                                            detail::weight_arg(rs, job.mu, "mu")));
    } else if (job.command == "stab") {
        const StabilizationResult st = kpq_stab(ctx, detail::weight_arg(rs, job.nu, "nu"),
                                                detail::weight_arg(rs, job.mu, "mu"), job.cap);
        p["poly"] = to_json(st.value);
        p["result"] = Json{{"k_stable", st.k_stable},
                           {"closed_form", to_json(st.closed_form)},
                           {"hypothesis_c", st.hypothesis_c ? Json(rational_str(*st.hypothesis_c))
                                                            : Json(nullptr)}};
        out.timing = Json{{"step_ms", st.step_ms}};
    } else if (job.command == "colored") {
        const RootVector beta = detail::lattice<RootTag>(rs, job.beta, "beta");
        p["poly"] = to_json(r_pq(ctx, beta));
        p["result"] = Json{{"n", to_json(n_pq(ctx, beta))}, {"r", to_json(r_pq(ctx, beta))}};
    } else if (job.command == "chi") {
        p["poly"] = to_json(chi(ctx, detail::weight_arg(rs, job.weight, "weight"), detail::weight_arg(rs, job.mu, "mu")));
    } else if (job.command == "hl") {
        std::vector<Weight> seeds;
        if (job.nu)
            seeds.push_back(detail::weight_arg(rs, job.nu, "nu"));
        else
            seeds = dominant_grid(rs.rank(), job.level);
        const auto lam = lambda_closure(rs, seeds);
        const TransitionMatrix m = transition_matrix(ctx, lam);
        const TransitionMatrix inv = p_basis(ctx, lam);
        p["result"] = Json{{"matrix", to_json(m)}, {"inverse", to_json(inv)}};
    } else {
        throw PreconditionError("unknown command '" + job.command + "'");
    }
    return out;
}

/// Results keyed by cache_key(job). Advisory: unreadable or corrupt files are reported and ignored.
class ResultCache {
public:
    explicit ResultCache(std::string path, std::ostream& warn = std::cerr) : path_(std::move(path)), warn_(warn) {
        std::ifstream in(path_);
        if (!in) return;
        try {
            Json j = Json::parse(in);
            if (!j.is_object()) throw std::runtime_error("top level is not an object");
            entries_ = std::move(j);
        } catch (const std::exception& e) {
            warn_ << "warning: ignoring corrupt cache " << path_ << ": " << e.what() << "\n";
            entries_ = Json::object();
            dirty_ = true;
        }
    }

    std::optional<Json> lookup(const JobSpec& job) const {
        auto it = entries_.find(cache_key(job));
        if (it == entries_.end()) return std::nullopt;
        const Json& e = *it;
        if (!e.is_object() || !e.contains("key") || e["key"] != canonical_key(job) || !e.contains("payload")) {
            warn_ << "warning: cache entry for " << cache_key(job) << " is invalid; recomputing\n";
            return std::nullopt;
        }
        return e["payload"];
    }

    void store(const JobSpec& job, const Json& payload) {
        entries_[cache_key(job)] = Json{{"key", canonical_key(job)}, {"payload", payload}};
        dirty_ = true;
    }

    /// Single write at the end of the run.
    bool flush() {
        if (!dirty_) return true;
        std::ofstream out(path_, std::ios::trunc);
        if (!out || !(out << entries_.dump(1) << "\n")) {
            warn_ << "warning: cannot write cache " << path_ << "\n";
            return false;
        }
        dirty_ = false;
        return true;
    }

private:
    std::string path_;
    std::ostream& warn_;
    Json entries_ = Json::object();
    bool dirty_ = false;
};

/// CSV of polynomial terms: header then one "p,q,c" row per term.
inline std::string poly_csv(const Json& poly) {
    std::ostringstream os;
    os << "p,q,c\n";
    for (const auto& t : poly) os << t["p"].get<unsigned>() << "," << t["q"].get<unsigned>() << "," << t["c"].get<std::string>() << "\n";
    return os.str();
}

inline TransitionMatrix matrix_from_json(const Json& j) {
    TransitionMatrix m;
    for (const auto& l : j.at("labels")) m.labels.emplace_back(l.get<std::vector<int>>());
    for (const auto& row : j.at("entries")) {
        std::vector<BiPoly> r;
        for (const auto& e : row) r.push_back(poly_from_json(e));
        m.entries.push_back(std::move(r));
    }
    return m;
}

/// Renders a payload. The JSON rendering adds elapsed_ms; the other formats omit timing.
inline std::string render(const Json& payload, Format format, long long elapsed_ms, const Json& timing = {}) {
    const std::string& command = payload.at("job").at("command").get_ref<const std::string&>();
    if (format == Format::Json) {
        Json j = payload;
        j["elapsed_ms"] = elapsed_ms;
        if (!timing.is_null()) j["timing"] = timing;
        return j.dump(1) + "\n";
    }
    std::ostringstream os;
    if (format == Format::Csv) {
        if (command == "hl") {
            os << to_csv(matrix_from_json(payload["result"]["matrix"])) << "\n"
               << to_csv(matrix_from_json(payload["result"]["inverse"]));
        } else if (command == "verify") {
            os << "identity,criterion,checked,failures\n";
            for (const auto& t : payload["result"]["identities"])
                os << t["identity"].get<std::string>() << "," << t["criterion"] << "," << t["checked"] << ","
                   << t["failures"] << "\n";
        } else if (payload.contains("poly")) {
            os << poly_csv(payload["poly"]);
        } else {
            throw PreconditionError("--format csv is not available for '" + command + "'");
        }
        return os.str();
    }
    // text
    if (payload.contains("poly")) {
        const BiPoly f = poly_from_json(payload["poly"]);
        os << f << "\n";
        if (command == "kpq" || command == "stab" || command == "delta-stab") os << "at p=q: " << diagonal(f) << "\n";
    }
    if (command == "verify") {
        for (const auto& t : payload["result"]["identities"]) {
            os << (t["failures"].get<long long>() == 0 ? "PASS " : "FAIL ") << std::left << std::setw(28)
               << t["identity"].get<std::string>() << " checked=" << t["checked"] << " failures=" << t["failures"]
               << "\n";
            for (const auto& e : t["counterexamples"]) os << "    " << e.get<std::string>() << "\n";
        }
    } else if (command == "hl") {
        os << "K matrix\n"
           << to_csv(matrix_from_json(payload["result"]["matrix"])) << "inverse\n"
           << to_csv(matrix_from_json(payload["result"]["inverse"]));
    } else if (payload.contains("result") && !payload.contains("poly")) {
        os << payload["result"].dump(1) << "\n";
    } else if (payload.contains("result")) {
        for (const auto& [k, v] : payload["result"].items()) {
            os << k << ": ";
            if (v.is_array() && (v.empty() || v[0].is_object()))
                os << poly_from_json(v);
            else
                os << v.dump();
            os << "\n";
        }
    }
    return os.str();
}

}  // namespace weylpq::cli
