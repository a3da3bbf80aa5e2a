// Command-line driver: fock, rank, verify, oracle.
#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

#include "modrep/json_io.hpp"

namespace {

using namespace modrep;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInvalid = 2;

struct RunConfig {
    std::string command;
    int p = 3;
    std::optional<int> n;
    std::string mu, tau;
    int jobs = 1;
    std::string output = "-";
    std::string format = "json";
    bool allow_large = false;
    bool outside_region = false;
};

int default_jobs() {
    if (const char* env = std::getenv("MODREP_JOBS")) {
        try {
            int j = std::stoi(env);
            if (j >= 1) return j;
        } catch (const std::exception&) {
        }
    }
    return 1;
}

void emit(const RunConfig& cfg, const std::string& text) {
    if (cfg.output == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(cfg.output, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output file '" + cfg.output + "'");
    out << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

int require_n(const RunConfig& cfg) {
    if (!cfg.n) throw std::invalid_argument(cfg.command + " requires --n");
    const int n = *cfg.n;
    if (n < 0) throw std::invalid_argument("--n must be nonnegative");
    if (n > EnumerationLimits{}.max_n && !cfg.allow_large)
        throw std::length_error("--n " + std::to_string(n) + " exceeds " + std::to_string(EnumerationLimits{}.max_n) +
                                "; pass --allow-large to lift the guard");
    return n;
}

Partition require_partition(const std::string& text, const char* flag) {
    if (text.empty()) throw std::invalid_argument(std::string("missing ") + flag);
    return Partition::parse(text);
}

void require_json(const RunConfig& cfg) {
    if (cfg.format != "json") throw std::invalid_argument(cfg.command + " supports only --format json");
}

int run(const RunConfig& cfg) {
    const Prime p(cfg.p);
    EnumerationLimits limits;
    limits.allow_large = cfg.allow_large;

    if (cfg.command == "fock") {
        require_json(cfg);
        const int n = require_n(cfg);
        emit(cfg, dump(to_json(llt_canonical(n, p, TieBreak::lex_descending, cfg.jobs))));
        return kExitOk;
    }
    if (cfg.command == "rank") {
        require_json(cfg);
        const Partition mu = require_partition(cfg.mu, "--mu");
        const Partition tau = require_partition(cfg.tau, "--tau");
        if (mu.size() != tau.size()) throw SizeMismatch("--mu and --tau must have the same size");
        if (!is_p_restricted(mu, p)) throw std::invalid_argument("--mu must be p-restricted");
        emit(cfg, dump(to_json(gram_report(mu, tau, p, WordStrategy::leftmost_descent, limits))));
        return kExitOk;
    }
    if (cfg.command == "verify") {
        const int n = require_n(cfg);
        if (n >= cfg.p * cfg.p && !cfg.outside_region)
            throw std::invalid_argument("n >= p^2 lies outside the conjecture's region; pass --outside-region");
        VerifyOptions opts;
        opts.jobs = cfg.jobs;
        opts.limits = limits;
        auto rep = conjecture_check(n, p, opts);
        if (cfg.format == "csv") {
            if (!rep.overall) {
                std::cerr << "conjecture check failed; no decomposition matrix\n";
                return kExitCheckFailed;
            }
            emit(cfg, decomposition_csv(rep));
        } else {
            emit(cfg, dump(to_json(rep)));
        }
        return rep.overall && rep.nonnegative() ? kExitOk : kExitCheckFailed;
    }
    if (cfg.command == "oracle") {
        require_json(cfg);
        const Partition tau = require_partition(cfg.tau, "--tau");
        if (!is_p_restricted(tau, p)) throw std::invalid_argument("--tau must be p-restricted");
        OracleOptions opts;
        opts.allow_large = cfg.allow_large;
        Json out;
        out["tau"] = to_json(tau);
        out["p"] = cfg.p;
        out["dim_D"] = gram_oracle_dimD(tau, p, opts);
        emit(cfg, dump(out));
        return kExitOk;
    }
    throw std::invalid_argument("unknown command '" + cfg.command + "'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Decomposition numbers of symmetric groups via ladder eigenspaces and canonical bases"};
    app.require_subcommand(1);
    RunConfig cfg;
    cfg.jobs = default_jobs();

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--p", cfg.p, "odd prime")->default_val(3);
        sub->add_option("--jobs", cfg.jobs, "worker threads (default from MODREP_JOBS or 1)")
            ->check(CLI::PositiveNumber);
        sub->add_option("--output", cfg.output, "output path, - for stdout")->default_val("-");
        sub->add_option("--format", cfg.format, "json or csv")
            ->check(CLI::IsMember({"json", "csv"}))
            ->default_val("json");
        sub->add_flag("--allow-large", cfg.allow_large, "lift enumeration size guards");
        sub->add_flag("--outside-region", cfg.outside_region, "acknowledge n >= p^2");
    };

    auto* fock = app.add_subcommand("fock", "A(mu), G(mu) and n_{lambda mu}(q) for all p-restricted mu of n");
    add_common(fock);
    fock->add_option("--n", cfg.n, "size")->required();

    auto* rank = app.add_subcommand("rank", "Gram report for one (mu, tau)");
    add_common(rank);
    rank->add_option("--mu", cfg.mu, "p-restricted partition, e.g. 2,1^3")->required();
    rank->add_option("--tau", cfg.tau, "partition")->required();

    auto* verify = app.add_subcommand("verify", "full verification report for (n, p)");
    add_common(verify);
    verify->add_option("--n", cfg.n, "size")->required();

    auto* oracle = app.add_subcommand("oracle", "dim D(tau) from the full integral Gram matrix");
    add_common(oracle);
    oracle->add_option("--tau", cfg.tau, "p-restricted partition")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInvalid;
    }
    for (auto* sub : app.get_subcommands()) cfg.command = sub->get_name();

    try {
        return run(cfg);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const std::length_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const std::exception& e) {
        std::cerr << "check failed: " << e.what() << '\n';
        return kExitCheckFailed;
    }
}
