/**
 * @file weylpq.cpp
 * @brief Command-line frontend for the (p,q) weight multiplicity library.
 */

#include "weylpq/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <thread>

namespace {

using namespace weylpq;
using namespace weylpq::cli;

constexpr const char* kFooter =
    "Partition-function memos grow without bound for the lifetime of a run; a full verify at the\n"
    "defaults peaks near 12 MB resident.\n"
    "Exit codes: 0 ok, 1 verification failure, 2 usage error, 3 computation cap exceeded.\n"
    "WEYLPQ_CACHE sets the cache file when --cache is absent.";

std::optional<std::vector<int>> weight_opt(const std::string& text) {
    if (text.empty()) return std::nullopt;
    return parse_weight(text);
}

void print_failures(const Json& payload) {
    for (const auto& t : payload["result"]["identities"]) {
        if (t["failures"].get<long long>() == 0) continue;
        std::cerr << "FAIL " << t["identity"].get<std::string>() << " (criterion " << t["criterion"] << "): "
                  << t["failures"] << " of " << t["checked"] << "\n";
        for (const auto& e : t["counterexamples"]) std::cerr << "  " << e.get<std::string>() << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"weylpq: exact (p,q)-deformed weight multiplicities"};
    app.footer(kFooter);
    app.require_subcommand(1, 1);

    JobSpec job;
    std::string nu, mu, delta, target, beta, weight, format = "json", cache_path;
    std::string systems;
    unsigned jobs = std::max(1u, std::thread::hardware_concurrency());

    for (const auto& name : commands()) {
        CLI::App* sub = app.add_subcommand(name);
        sub->add_option("--system", job.system, "Root system such as A2, C3, D4");
        sub->add_option("--levi", job.levi, "Levi nodes, comma separated (1-based)");
        sub->add_option("--nu", nu, "Weight in fundamental coordinates");
        sub->add_option("--mu", mu, "Weight in fundamental coordinates");
        sub->add_option("--delta", delta, "Stabilization direction (delta-stab)");
        sub->add_option("--target", target, "Levi-dominant target weight (branch, kbar)");
        sub->add_option("--beta", beta, "Root lattice vector in simple-root coordinates (colored)");
        sub->add_option("--weight", weight, "Crystal vertex weight (chi)");
        sub->add_option("--systems", systems, "Comma separated systems for verify");
        sub->add_option("--level", job.level, "Level cutoff for dominant grids")->check(CLI::NonNegativeNumber);
        sub->add_option("--box", job.box, "Box bound for root-lattice grids")->check(CLI::NonNegativeNumber);
        sub->add_option("--cap", job.cap, "Stabilization iteration cap")->check(CLI::PositiveNumber);
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
        sub->add_option("--cache", cache_path, "Result cache file (JSON)");
        sub->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    Outcome outcome;
    long long elapsed_ms = 0;
    try {
        job.command = app.get_subcommands().front()->get_name();
        job.nu = weight_opt(nu);
        job.mu = weight_opt(mu);
        job.delta = weight_opt(delta);
        job.target = weight_opt(target);
        job.beta = weight_opt(beta);
        job.weight = weight_opt(weight);
        if (!systems.empty()) {
            std::stringstream ss(systems);
            for (std::string s; std::getline(ss, s, ',');) job.systems.push_back(s);
        }
        job.format = format == "csv" ? Format::Csv : format == "text" ? Format::Text : Format::Json;
        job.jobs = jobs;

        if (cache_path.empty())
            if (const char* env = std::getenv("WEYLPQ_CACHE")) cache_path = env;
        std::optional<ResultCache> cache;
        if (!cache_path.empty()) cache.emplace(cache_path);

        const auto t0 = std::chrono::steady_clock::now();
        if (auto hit = cache ? cache->lookup(job) : std::nullopt) {
            outcome.payload = *hit;
            outcome.verification_failed = job.command == "verify" && !outcome.payload["result"]["pass"].get<bool>();
        } else {
            outcome = run(job);
            if (cache) cache->store(job, outcome.payload);
        }
        elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
        if (cache) cache->flush();

        std::cout << render(outcome.payload, job.format, elapsed_ms, outcome.timing);
    } catch (const CapExceeded& e) {
        std::cerr << "cap exceeded: " << e.what() << "\n";
        return kCapExceeded;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }

    if (outcome.verification_failed) {
        print_failures(outcome.payload);
        return kVerifyFailed;
    }
    return kOk;
}
