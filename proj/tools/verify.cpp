#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "dwork/suites.hpp"

namespace {

struct CliOptions {
    std::vector<uint64_t> primes;
    unsigned s_max = 0;
    std::vector<std::string> families;
    unsigned samples = 0;
    unsigned jobs = 0;
    uint64_t seed = 0;
    std::string out_path;
    std::string config_path;
};

void add_suite_options(CLI::App* cmd, CliOptions& opts) {
    cmd->add_option("--primes", opts.primes, "odd primes to run (comma separated)")
        ->delimiter(',');
    cmd->add_option("--s-max", opts.s_max, "highest congruence level");
    cmd->add_option("--families", opts.families,
                    "family subset: half, thirdQ, thirdR, fifth41, fifth32")
        ->delimiter(',');
    cmd->add_option("--samples", opts.samples, "randomized / sampled instance count");
    cmd->add_option("--jobs", opts.jobs, "concurrent check execution bound");
    cmd->add_option("--seed", opts.seed, "seed for randomized instance generation");
    cmd->add_option("--out", opts.out_path, "report path (default: stdout)");
    cmd->add_option("--config", opts.config_path, "JSON config file (flags take precedence)");
}

bool is_odd_prime(uint64_t p) {
    if (p < 3 || p % 2 == 0) return false;
    for (uint64_t d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

int build_config(const CLI::App* cmd, const CliOptions& opts, dwork::SuiteConfig& cfg) {
    if (!opts.config_path.empty()) {
        std::ifstream in(opts.config_path);
        if (!in) {
            std::cerr << "cannot read config file: " << opts.config_path << "\n";
            return 2;
        }
        nlohmann::json doc;
        try {
            in >> doc;
        } catch (const std::exception& e) {
            std::cerr << "config parse error: " << e.what() << "\n";
            return 2;
        }
        if (doc.contains("primes")) cfg.primes = doc["primes"].get<std::vector<uint64_t>>();
        if (doc.contains("s_max")) cfg.s_max = doc["s_max"].get<unsigned>();
        if (doc.contains("samples")) cfg.samples = doc["samples"].get<unsigned>();
        if (doc.contains("jobs")) cfg.jobs = doc["jobs"].get<unsigned>();
        if (doc.contains("seed")) cfg.seed = doc["seed"].get<uint64_t>();
        if (doc.contains("families")) {
            cfg.families.clear();
            for (const auto& name : doc["families"])
                cfg.families.push_back(dwork::family_from_name(name.get<std::string>()));
        }
    }
    if (cmd->count("--primes") > 0) cfg.primes = opts.primes;
    if (cmd->count("--s-max") > 0) cfg.s_max = opts.s_max;
    if (cmd->count("--samples") > 0) cfg.samples = opts.samples;
    if (cmd->count("--jobs") > 0) cfg.jobs = opts.jobs;
    if (cmd->count("--seed") > 0) cfg.seed = opts.seed;
    if (cmd->count("--families") > 0) {
        cfg.families.clear();
        for (const auto& name : opts.families)
            cfg.families.push_back(dwork::family_from_name(name));
    }
    if (cfg.s_max < 1) {
        std::cerr << "--s-max must be >= 1\n";
        return 2;
    }
    for (uint64_t p : cfg.primes)
        if (!is_odd_prime(p)) {
            std::cerr << "not an odd prime: " << p << "\n";
            return 2;
        }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"batch verifier for exact congruence identities of approximation polynomials"};
    app.require_subcommand(1);

    std::vector<std::string> run_names = dwork::suite_names();
    run_names.push_back("all");
    std::vector<CLI::App*> run_cmds;
    std::vector<CliOptions> run_opts(run_names.size());
    for (size_t i = 0; i < run_names.size(); ++i) {
        CLI::App* cmd = app.add_subcommand(
            run_names[i], run_names[i] == "all" ? "run every suite"
                                                : "run the " + run_names[i] + " suite");
        add_suite_options(cmd, run_opts[i]);
        run_cmds.push_back(cmd);
    }
    std::string describe_name;
    CLI::App* describe_cmd = app.add_subcommand("describe", "print what a suite checks");
    describe_cmd->add_option("suite", describe_name, "suite name or 'all'")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (describe_cmd->parsed()) {
        try {
            std::cout << dwork::describe_suite(describe_name);
        } catch (const std::exception& e) {
            std::cerr << e.what() << "\n";
            return 2;
        }
        return 0;
    }

    for (size_t i = 0; i < run_cmds.size(); ++i) {
        if (!run_cmds[i]->parsed()) continue;
        dwork::SuiteConfig cfg;
        const int rc = build_config(run_cmds[i], run_opts[i], cfg);
        if (rc != 0) return rc;
        try {
            std::vector<dwork::SuiteResult> results;
            if (run_names[i] == "all")
                results = dwork::run_all(cfg);
            else
                results = {dwork::run_suite(run_names[i], cfg)};
            const nlohmann::ordered_json doc = dwork::report_json(results, cfg);
            const std::string text = doc.dump(2) + "\n";
            if (run_opts[i].out_path.empty()) {
                std::cout << text;
            } else {
                std::ofstream out(run_opts[i].out_path);
                if (!out) {
                    std::cerr << "cannot write report: " << run_opts[i].out_path << "\n";
                    return 2;
                }
                out << text;
            }
            bool ok = true;
            for (const auto& result : results) ok = ok && result.all_pass();
            return ok ? 0 : 1;
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << "\n";
            return 2;
        }
    }
    return 2;
}
