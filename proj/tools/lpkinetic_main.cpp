#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

#include "lpkinetic/registry.hpp"

namespace fs = std::filesystem;

namespace {

int run_one(const lpk::Experiment& exp, lpk::Config cfg, const std::string& out_dir) {
    std::error_code ec;
    if (!out_dir.empty()) fs::create_directories(out_dir, ec);
    const lpk::ExperimentReport rep = lpk::run_experiment(exp, cfg, out_dir);
    for (const auto& c : rep.checks) {
        std::cout << (c.passed ? "  [pass] " : "  [FAIL] ") << c.name << ": measured "
                  << c.measured;
        if (c.tolerance > 0.0)
            std::cout << " vs " << c.expected << " +- " << c.tolerance;
        else if (c.note != "reported only")
            std::cout << " <= " << c.expected;
        if (!c.note.empty()) std::cout << "  (" << c.note << ")";
        std::cout << "\n";
    }
    if (!out_dir.empty()) rep.write_json(out_dir + "/report.json");
    std::cout << (rep.passed() ? "PASSED " : "FAILED ") << rep.experiment << " in "
              << rep.wall_seconds << " s\n";
    return rep.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"lpkinetic: verification harness for anisotropic Littlewood-Paley analysis, "
                 "kinetic kernels, stable SDE flows, and the Picard solver"};
    app.require_subcommand(1);

    auto* list_cmd = app.add_subcommand("list", "list registered experiments");

    auto* run_cmd = app.add_subcommand("run", "run one experiment");
    std::string experiment_id, config_path, out_dir = "lpkinetic-out";
    std::vector<std::string> overrides;
    run_cmd->add_option("--experiment", experiment_id, "experiment id (see `lpkinetic list`)")
        ->required();
    run_cmd->add_option("--config", config_path, "key=value config file");
    run_cmd->add_option("--out", out_dir, "output directory for report.json and data files");
    run_cmd->add_option("--set", overrides, "extra key=value overrides (repeatable)");
    double beta = -1.0, alpha = -1.0, lambda = -1.0;
    long jmax = -1, seed_flag = -1, draws = -1;
    run_cmd->add_option("--beta", beta, "beta parameter override");
    run_cmd->add_option("--alpha", alpha, "alpha parameter override");
    run_cmd->add_option("--lambda", lambda, "lambda parameter override");
    run_cmd->add_option("--jmax", jmax, "largest block index override");
    run_cmd->add_option("--seed", seed_flag, "random seed override");
    run_cmd->add_option("--draws", draws, "Monte Carlo draw count override");

    auto* suite_cmd = app.add_subcommand("suite", "run the fast or full suite");
    std::string suite_name;
    std::string suite_out = "lpkinetic-suite";
    bool force = false;
    suite_cmd->add_option("name", suite_name, "fast or full")->required();
    suite_cmd->add_option("--out", suite_out, "output directory");
    suite_cmd->add_flag("--force", force, "allow a nonempty output directory");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*list_cmd) {
            for (const auto& e : lpk::experiment_registry())
                std::cout << e.id << "\t" << e.description << "\t[" << e.paper_ref << "]\n";
            return 0;
        }
        if (*run_cmd) {
            const lpk::Experiment* exp = lpk::find_experiment(experiment_id);
            if (!exp) {
                std::cerr << "unknown experiment id '" << experiment_id
                          << "' (see `lpkinetic list`)\n";
                return 2;
            }
            lpk::Config cfg;
            if (!config_path.empty()) cfg = lpk::Config::from_file(config_path);
            for (const auto& kv : overrides) {
                const auto eq = kv.find('=');
                if (eq == std::string::npos) {
                    std::cerr << "--set expects key=value, got '" << kv << "'\n";
                    return 2;
                }
                cfg.set(kv.substr(0, eq), kv.substr(eq + 1));
            }
            if (beta >= 0.0) cfg.set("beta", std::to_string(beta));
            if (alpha >= 0.0) cfg.set("alpha", std::to_string(alpha));
            if (lambda >= 0.0) cfg.set("lambda", std::to_string(lambda));
            if (jmax >= 0) cfg.set("jmax", std::to_string(jmax));
            if (seed_flag >= 0) cfg.set("seed", std::to_string(seed_flag));
            if (draws >= 0) cfg.set("draws", std::to_string(draws));
            return run_one(*exp, cfg, out_dir);
        }
        if (*suite_cmd) {
            if (suite_name != "fast" && suite_name != "full") {
                std::cerr << "suite name must be 'fast' or 'full'\n";
                return 2;
            }
            std::error_code ec;
            if (fs::exists(suite_out) && !fs::is_empty(suite_out, ec) && !force) {
                std::cerr << "output directory '" << suite_out
                          << "' is not empty (use --force to override)\n";
                return 2;
            }
            fs::create_directories(suite_out, ec);
            nlohmann::json agg;
            agg["schema_version"] = 1;
            agg["suite"] = suite_name;
            agg["reports"] = nlohmann::json::array();
            bool all_pass = true;
            for (const auto& e : lpk::experiment_registry()) {
                lpk::Config cfg;
                if (suite_name == "fast") cfg.set("fast", "1");
                const std::string dir = suite_out + "/" + e.id;
                fs::create_directories(dir, ec);
                std::cout << "== " << e.id << " ==\n";
                const int rc = run_one(e, cfg, dir);
                all_pass = all_pass && (rc == 0);
                agg["reports"].push_back({{"experiment", e.id}, {"passed", rc == 0}});
            }
            agg["passed"] = all_pass;
            std::ofstream out(suite_out + "/suite.json");
            out << agg.dump(2) << "\n";
            std::cout << (all_pass ? "SUITE PASSED" : "SUITE FAILED") << "\n";
            return all_pass ? 0 : 1;
        }
    } catch (const lpk::ConfigError& err) {
        std::cerr << "config error: " << err.what() << "\n";
        return 2;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 1;
    }
    return 2;
}
