#include "perceptronium/experiments.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <iostream>

namespace {

int run_verify(const std::string& dir, bool has_tol, double tol) {
    using perceptronium::VerifyReport;
    const VerifyReport report = perceptronium::verify_goldens(
        dir, has_tol ? std::optional<double>(tol) : std::nullopt);
    std::size_t passed = 0, failed = 0, skipped = 0;
    for (const auto& entry : report.entries) {
        std::cout << entry.status << "  " << entry.name
                  << (entry.detail.empty() ? "" : "  (" + entry.detail + ")") << "\n";
        if (entry.status == "pass") ++passed;
        else if (entry.status == "fail") ++failed;
        else ++skipped;
    }
    std::cout << "verify: " << passed << " passed, " << failed << " failed, " << skipped
              << " skipped\n";
    return report.all_passed() ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    using perceptronium::ExperimentConfig;

    CLI::App app{"perceptronium: integrated-information and autonomy experiments"};
    app.require_subcommand(1);
    app.set_version_flag("--version", perceptronium::kToolVersion);

    // verify subcommand
    std::string verify_dir;
    double verify_tol = 0.0;
    CLI::App* verify = app.add_subcommand("verify", "re-run golden configs and diff outputs");
    verify->add_option("dir", verify_dir, "directory of <name>.json + <name>.csv pairs")
        ->required();
    CLI::Option* tol_opt =
        verify->add_option("--tol", verify_tol, "override the per-golden numeric tolerance");

    // one subcommand per experiment, with flags generated from the schema
    struct ExperimentCli {
        CLI::App* sub = nullptr;
        ExperimentConfig config;
        std::map<std::string, std::string> flag_values;
    };
    std::vector<std::unique_ptr<ExperimentCli>> experiment_clis;
    for (const std::string& name : perceptronium::experiment_names()) {
        auto cli = std::make_unique<ExperimentCli>();
        cli->config.experiment = name;
        cli->config.output_path = name + ".csv";
        cli->sub = app.add_subcommand(name, "run the " + name + " experiment");
        cli->sub->add_option("--seed", cli->config.seed, "random seed");
        cli->sub->add_option("--out", cli->config.output_path, "output CSV path");
        for (const auto& spec : perceptronium::experiment_params(name)) {
            std::string help = "default " + spec.default_value;
            if (!spec.choices.empty()) {
                help += "; one of {";
                for (std::size_t i = 0; i < spec.choices.size(); ++i)
                    help += (i ? ", " : "") + spec.choices[i];
                help += "}";
            }
            cli->sub->add_option("--" + spec.name, cli->flag_values[spec.name], help);
        }
        experiment_clis.push_back(std::move(cli));
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;  // CLI misuse is a config error
    }

    try {
        if (verify->parsed()) return run_verify(verify_dir, tol_opt->count() > 0, verify_tol);
        for (const auto& cli : experiment_clis) {
            if (!cli->sub->parsed()) continue;
            for (const auto& [key, value] : cli->flag_values)
                if (!value.empty()) cli->config.params[key] = value;
            perceptronium::run_to_file(cli->config);
            std::cout << cli->config.experiment << ": wrote " << cli->config.output_path
                      << "\n";
            return 0;
        }
    } catch (const perceptronium::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
