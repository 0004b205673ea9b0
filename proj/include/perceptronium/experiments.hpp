#pragma once

#include "perceptronium/serialization.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace perceptronium {

inline constexpr const char* kToolVersion = "0.1.0";

/// User/config mistakes (unknown experiment, bad parameter); mapped to
/// exit code 1 by the CLI, while numeric failures map to exit code 2.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ExperimentConfig {
    std::string experiment;
    std::uint64_t seed = 1;
    std::map<std::string, std::string> params;  // raw values; validated per schema
    std::string output_path;
};

struct ParamSpec {
    enum class Kind { Int, Real, Choice };
    std::string name;
    Kind kind;
    std::string default_value;
    std::vector<std::string> choices;  // for Kind::Choice
    double min = 0.0, max = 0.0;       // inclusive bounds for Int/Real
};

const std::vector<std::string>& experiment_names();
const std::vector<ParamSpec>& experiment_params(const std::string& experiment);

/// Machine-readable schema mirroring the validation table; the files under
/// schemas/ are dumps of this.
nlohmann::json experiment_schema(const std::string& experiment);

ExperimentConfig config_from_json(const nlohmann::json& j);
nlohmann::json config_to_json(const ExperimentConfig& config);

/// FNV-1a over the canonical JSON dump of the config (sans output path).
std::uint64_t config_hash(const ExperimentConfig& config);

/// Validates the config and computes the experiment's data table, including
/// all metadata lines. Throws ConfigError for schema violations and
/// std::exception subclasses for numeric failures.
CsvDocument run_experiment(const ExperimentConfig& config);

/// run_experiment plus write to config.output_path.
void run_to_file(const ExperimentConfig& config);

struct VerifyEntry {
    std::string name;
    std::string status;  // "pass", "fail", or "skip"
    std::string detail;
};

struct VerifyReport {
    std::vector<VerifyEntry> entries;
    bool all_passed() const;
};

/// Re-runs each <name>.json config found in `dir` and numerically diffs the
/// result against the bundled <name>.csv golden, using the tolerance from
/// the golden's metadata unless overridden.
VerifyReport verify_goldens(const std::string& dir,
                            std::optional<double> tolerance_override = std::nullopt);

}  // namespace perceptronium
