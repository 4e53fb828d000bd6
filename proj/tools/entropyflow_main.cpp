// entropyflow command-line front-end.
//
//   entropyflow run <config.json>... [--out DIR] [--format csv|json|both]
//   entropyflow audit [--seed S] [--max-dim N] [--out DIR] [--inject-fault]
//   entropyflow describe <kind>
//
// Exit codes: 0 success, 2 configuration error, 3 numerical/invariant failure.

#include <cstdlib>
#include <filesystem>
#include <future>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "entropyflow/experiments/runner.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfigError = 2;
constexpr int kExitNumericalFailure = 3;

int exit_code_for(const entropyflow::Error& e) {
    return e.kind() == entropyflow::ErrorKind::ConfigError ? kExitConfigError
                                                           : kExitNumericalFailure;
}

std::size_t batch_threads(std::size_t jobs) {
    std::size_t cap = std::thread::hardware_concurrency();
    if (cap == 0) cap = 1;
    if (const char* env = std::getenv("ENTROPYFLOW_THREADS")) {
        char* end = nullptr;
        const long parsed = std::strtol(env, &end, 10);
        if (end != env && parsed > 0) cap = static_cast<std::size_t>(parsed);
    }
    return std::min(cap, jobs);
}

struct JobOutcome {
    int exit_code = kExitOk;
    std::string message;
};

JobOutcome run_one(const std::string& path, const std::filesystem::path& out_dir,
                   const std::string& format_override) {
    JobOutcome outcome;
    try {
        entropyflow::ExperimentConfig cfg = entropyflow::ExperimentConfig::load(path);
        if (!format_override.empty()) cfg.output.format = format_override;
        const entropyflow::RunResult result = entropyflow::run_experiment(cfg, out_dir);
        outcome.exit_code = result.exit_code;
        if (result.exit_code == 0) {
            outcome.message = path + ": ok (" +
                              std::to_string(result.summary.at("rows").get<std::size_t>()) +
                              " records)";
        } else {
            outcome.message = path + ": invariant violation";
            if (result.summary.contains("firstViolation"))
                outcome.message +=
                    " at " + result.summary.at("firstViolation").dump();
        }
    } catch (const entropyflow::Error& e) {
        outcome.exit_code = exit_code_for(e);
        outcome.message = path + ": " + e.what();
    } catch (const std::exception& e) {
        outcome.exit_code = kExitNumericalFailure;
        outcome.message = path + ": " + e.what();
    }
    return outcome;
}

int run_command(const std::vector<std::string>& configs, const std::string& out_dir,
                const std::string& format_override) {
    const std::filesystem::path out(out_dir);
    const std::size_t workers = batch_threads(configs.size());
    std::vector<std::future<JobOutcome>> futures;
    futures.reserve(configs.size());

    // Bounded batch parallelism: launch at most `workers` jobs at a time.
    std::vector<JobOutcome> outcomes(configs.size());
    std::size_t next = 0;
    while (next < configs.size()) {
        const std::size_t burst = std::min(workers, configs.size() - next);
        futures.clear();
        for (std::size_t j = 0; j < burst; ++j) {
            const std::string& path = configs[next + j];
            futures.push_back(std::async(std::launch::async, run_one, path, out,
                                         format_override));
        }
        for (std::size_t j = 0; j < burst; ++j) outcomes[next + j] = futures[j].get();
        next += burst;
    }

    int exit_code = kExitOk;
    for (const JobOutcome& o : outcomes) {
        (o.exit_code == kExitOk ? std::cout : std::cerr) << o.message << "\n";
        exit_code = std::max(exit_code, o.exit_code);
    }
    return exit_code;
}

int audit_command(std::uint64_t seed, std::size_t max_dim, bool inject_fault,
                  const std::string& out_dir) {
    entropyflow::AuditOptions options;
    options.seed = seed;
    options.max_dim = max_dim;
    options.inject_fault = inject_fault;
    const entropyflow::Json report = entropyflow::run_audit(options);
    const std::string text = report.dump(2) + "\n";
    if (out_dir.empty()) {
        std::cout << text;
    } else {
        entropyflow::write_file_atomic(std::filesystem::path(out_dir) / "audit_report.json",
                                       text);
    }
    if (!report.at("allPassed").get<bool>()) {
        for (const auto& check : report.at("checks"))
            if (!check.at("passed").get<bool>()) {
                std::cerr << "audit failure: " << check.at("name").get<std::string>() << " ("
                          << check.at("inequality").get<std::string>() << ")";
                if (check.contains("counterexample"))
                    std::cerr << " counterexample " << check.at("counterexample").dump();
                std::cerr << "\n";
            }
        return kExitNumericalFailure;
    }
    return kExitOk;
}

int describe_command(const std::string& kind_name) {
    const entropyflow::ExperimentKind kind = entropyflow::experiment_kind_from_string(kind_name);
    entropyflow::Json j;
    j["kind"] = kind_name;
    j["columns"] = entropyflow::experiment_columns(kind);
    std::cout << j.dump(2) << "\n";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"entropyflow: coarse-graining entropy flows, batch experiments and audits"};
    app.require_subcommand(1);

    std::vector<std::string> configs;
    std::string out_dir = ".";
    std::string format_override;
    CLI::App* run = app.add_subcommand("run", "run experiment configs");
    run->add_option("configs", configs, "JSON experiment configs")->required();
    run->add_option("--out", out_dir, "output directory (default: .)");
    run->add_option("--format", format_override, "override output format")
        ->check(CLI::IsMember({"csv", "json", "both"}));

    std::uint64_t seed = 1;
    std::size_t max_dim = 16;
    bool inject_fault = false;
    std::string audit_out;
    CLI::App* audit = app.add_subcommand("audit", "run the invariant audit");
    audit->add_option("--seed", seed, "audit seed (default: 1)");
    audit->add_option("--max-dim", max_dim, "largest quantum dimension (default: 16)");
    audit->add_option("--out", audit_out, "write audit_report.json here instead of stdout");
    audit->add_flag("--inject-fault", inject_fault,
                    "tamper a channel's monotone attestation; the audit must catch it");

    std::string kind_name;
    CLI::App* describe = app.add_subcommand("describe", "print the column schema of a kind");
    describe->add_option("kind", kind_name, "experiment kind")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfigError;
    }

    try {
        if (run->parsed()) return run_command(configs, out_dir, format_override);
        if (audit->parsed()) return audit_command(seed, max_dim, inject_fault, audit_out);
        if (describe->parsed()) return describe_command(kind_name);
    } catch (const entropyflow::Error& e) {
        std::cerr << e.what() << "\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return kExitNumericalFailure;
    }
    return kExitOk;
}
