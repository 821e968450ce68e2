/**
 * @file acceptance.cpp
 * @brief Acceptance suite: one PASS/FAIL line per criterion.
 *
 * Usage: acceptance [--criterion N] [--cli PATH] [--jobs N]
 */

#include "weylpq/cli.hpp"
#include "weylpq/verify.hpp"

#include <CLI11.hpp>

#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include <unistd.h>

namespace {

using namespace weylpq;

const char* kTitles[] = {
    "",
    "A2 adjoint example",
    "decomposition identity on the full grid",
    "specializations p=0, q=0, p=q",
    "positivity at p=1 and after the shift",
    "colored-root triangle and the shifted decomposition",
    "stabilization, Hypothesis H and factorization",
    "Cauchy, complement stability, denominator, stabilizer witness",
    "Freudenthal = alternant division = K(1,1)",
    "Hall-Littlewood transition matrix round trip",
    "deterministic and cache-transparent verify output",
};

struct Line {
    bool ok;
    std::string detail;
};

std::string shell_quote(const std::string& s) { return "'" + s + "'"; }

std::optional<std::string> capture(const std::string& cmd, int& status) {
    std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
    if (!pipe) return std::nullopt;
    std::string out;
    std::array<char, 4096> buf;
    for (std::size_t n; (n = fread(buf.data(), 1, buf.size(), pipe.get())) > 0;) out.append(buf.data(), n);
    status = pclose(pipe.release());
    return out;
}

std::string payload_of(const std::string& json_text) {
    Json j = Json::parse(json_text);
    j.erase("elapsed_ms");
    j.erase("timing");
    return j.dump();
}

Line example_line() {
    const auto t0 = std::chrono::steady_clock::now();
    DeformationContext ctx(parse_system("A2"), parse_levi("1", 2));
    const Weight nu{1, 1}, zero{0, 0};
    const BiPoly q = BiPoly::q(), q2 = q * q;
    const BiPoly k = kpq(ctx, nu, zero);
    bool ok = diagonal(k) == q2 + q;
    ok = ok && diagonal(shift_vars(k)) == q2 + BiPoly(3) * q + BiPoly(2);
    const WeightMultiplicityMap mult = freudenthal(ctx.system(), nu);
    ok = ok && mult.at(zero) == 2;
    ok = ok && diagonal(chi(ctx, zero, zero)) == BiPoly::one();
    ok = ok && diagonal(chi(ctx, Weight{2, -1}, zero)) == q;
    ok = ok && diagonal(chi(ctx, Weight{-1, 2}, zero)) == q;
    ok = ok && diagonal(chi(ctx, nu, zero)) == q2 + q;
    ok = ok && diagonal(crystal_sum(ctx, mult, zero)) == q2 + BiPoly(3) * q + BiPoly(2);
    const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    ok = ok && ms < 1000;
    return {ok, "K(q,q) = " + diagonal(k).to_string() + ", " + std::to_string(static_cast<long long>(ms)) + " ms"};
}

Line report_line(const VerifyReport& rep, int c) {
    bool ok = true;
    std::string detail;
    for (const auto& [name, t] : rep.for_criterion(c)) {
        ok = ok && t.checked > 0 && t.failures == 0;
        if (!detail.empty()) detail += ", ";
        detail += name + " " + std::to_string(t.failures) + "/" + std::to_string(t.checked);
    }
    if (detail.empty()) return {false, "no identities recorded"};
    return {ok, "failures/checked: " + detail};
}

Line determinism_line(const std::string& cli) {
    if (cli.empty()) return {false, "no --cli given"};
    const std::string base = shell_quote(cli) + " verify --format json --jobs 1";
    int s1 = 0, s2 = 0, s3 = 0, s4 = 0;
    auto a = capture(base + " 2>/dev/null", s1);
    auto b = capture(base + " 2>/dev/null", s2);
    const auto cache = std::filesystem::temp_directory_path() /
                       ("weylpq_acceptance_" + std::to_string(::getpid()) + ".json");
    std::filesystem::remove(cache);
    const std::string cached = base + " --cache " + shell_quote(cache.string()) + " 2>/dev/null";
    auto c = capture(cached, s3);
    auto d = capture(cached, s4);
    const bool hit = std::filesystem::exists(cache);
    std::filesystem::remove(cache);
    if (!a || !b || !c || !d) return {false, "could not run " + cli};
    try {
        const std::string pa = payload_of(*a), pb = payload_of(*b), pc = payload_of(*c), pd = payload_of(*d);
        const bool same_runs = pa == pb, same_cache = pa == pc && pa == pd;
        return {same_runs && same_cache && hit,
                std::string("two runs ") + (same_runs ? "identical" : "differ") + ", cached runs " +
                    (same_cache ? "identical" : "differ") + ", cache file " + (hit ? "written" : "missing")};
    } catch (const std::exception& e) {
        return {false, std::string("unparseable output: ") + e.what()};
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"weylpq acceptance suite"};
    int only = 0;
    std::string cli;
    unsigned jobs = 1;
    app.add_option("--criterion", only, "Run a single criterion (1-10)")->check(CLI::Range(1, 10));
    app.add_option("--cli", cli, "Path to the weylpq executable");
    app.add_option("--jobs", jobs, "Worker threads for the sweep")->check(CLI::PositiveNumber);
    CLI11_PARSE(app, argc, argv);

    std::optional<VerifyReport> report;
    auto sweep = [&]() -> const VerifyReport& {
        if (!report) {
            VerifyOptions opt;
            opt.jobs = jobs;
            report = run_verify(opt);
        }
        return *report;
    };

    bool all = true;
    for (int c = 1; c <= 10; ++c) {
        if (only && c != only) continue;
        Line line;
        try {
            if (c == 1)
                line = example_line();
            else if (c == 10)
                line = determinism_line(cli);
            else
                line = report_line(sweep(), c);
        } catch (const std::exception& e) {
            line = {false, std::string("exception: ") + e.what()};
        }
        all = all && line.ok;
        std::cout << "criterion " << c << ": " << (line.ok ? "PASS" : "FAIL") << "  " << kTitles[c] << "  ["
                  << line.detail << "]\n";
        if (!line.ok && report && c >= 2 && c <= 9)
            for (const auto& [name, t] : report->for_criterion(c))
                for (const auto& e : t.examples) std::cout << "    " << name << ": " << e << "\n";
    }
    return all ? 0 : 1;
}
