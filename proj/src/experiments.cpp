#include "perceptronium/experiments.hpp"

#include "perceptronium/classical.hpp"
#include "perceptronium/dynamics.hpp"
#include "perceptronium/emergent.hpp"
#include "perceptronium/quantum_phi.hpp"
#include "perceptronium/separability.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

namespace perceptronium {

namespace {

using Kind = ParamSpec::Kind;

struct ExperimentDef {
    std::string name;
    std::vector<ParamSpec> params;
    std::string tolerance;  // default numeric diff tolerance for goldens
};

const std::vector<ExperimentDef>& experiment_defs() {
    static const std::vector<ExperimentDef> defs = {
        {"ising_phi",
         {{"side", Kind::Int, "3", {}, 2, 4},
          {"tmin", Kind::Real, "0.2", {}, 1e-6, 1e6},
          {"tmax", Kind::Real, "20", {}, 1e-6, 1e6},
          {"points", Kind::Int, "20", {}, 2, 500},
          {"coupling", Kind::Real, "1", {}, -100, 100}},
         "1e-9"},
        {"code_phi",
         {{"code", Kind::Choice, "hamming84", {"hamming84", "parity"}},
          {"kmax", Kind::Int, "4", {}, 1, 4}},
         "1e-12"},
        {"random_code_sweep",
         {{"n", Kind::Int, "8", {}, 2, 16},
          {"m_min", Kind::Int, "2", {}, 2, 65536},
          {"m_max", Kind::Int, "64", {}, 2, 65536}},
         "1e-9"},
        {"codeword_count_sweep",
         {{"n", Kind::Int, "8", {}, 1, 30}, {"k_max", Kind::Int, "256", {}, 1, 1 << 30}},
         "1e-9"},
        {"quantum_phi_max",
         {{"n", Kind::Int, "4", {}, 2, 64},
          {"l", Kind::Int, "2", {}, 2, 8},
          {"m", Kind::Int, "2", {}, 2, 8},
          {"trials", Kind::Int, "200", {}, 1, 100000}},
         "1e-9"},
        {"integration_energy_demo",
         {{"l", Kind::Int, "2", {}, 2, 4}, {"m", Kind::Int, "2", {}, 2, 4}},
         "1e-9"},
        {"sliding_autonomy",
         {{"b_min", Kind::Int, "4", {}, 2, 10},
          {"b_max", Kind::Int, "8", {}, 2, 10},
          {"alpha", Kind::Int, "0", {}, 0, 8},
          {"potential", Kind::Choice, "sinusoidal", {"sinusoidal", "gaussian"}},
          {"omega2", Kind::Real, "1", {}, 0, 100},
          {"coupling", Kind::Real, "1", {}, 0, 100},
          {"samples", Kind::Int, "33", {}, 2, 10000}},
         "1e-8"},
        {"apodization_compare",
         {{"b", Kind::Int, "6", {}, 2, 10},
          {"alpha_max", Kind::Int, "4", {}, 0, 8},
          {"potential", Kind::Choice, "sinusoidal", {"sinusoidal", "gaussian"}},
          {"omega2", Kind::Real, "1", {}, 0, 100},
          {"coupling", Kind::Real, "1", {}, 0, 100},
          {"samples", Kind::Int, "33", {}, 2, 10000}},
         "1e-8"},
        {"snip_optimize",
         {{"budget", Kind::Int, "60000", {}, 100, 10000000},
          {"l", Kind::Int, "2", {}, 2, 4},
          {"m", Kind::Int, "2", {}, 2, 4}},
         "1e-6"},
        {"dispersion",
         {{"side", Kind::Int, "4", {}, 1, 8},
          {"mu", Kind::Real, "1", {}, 0, 100},
          {"gamma", Kind::Real, "1", {}, 0, 100}},
         "1e-12"},
    };
    return defs;
}

const ExperimentDef& find_def(const std::string& experiment) {
    for (const auto& def : experiment_defs())
        if (def.name == experiment) return def;
    throw ConfigError("unknown experiment: " + experiment);
}

/// Validated parameter view with typed accessors.
class Params {
  public:
    Params(const ExperimentDef& def, const std::map<std::string, std::string>& raw) {
        for (const auto& [key, value] : raw) {
            const ParamSpec* spec = nullptr;
            for (const auto& s : def.params)
                if (s.name == key) spec = &s;
            if (!spec)
                throw ConfigError(def.name + ": unknown parameter '" + key + "'");
            validate(def.name, *spec, value);
            values_[key] = value;
        }
        for (const auto& s : def.params)
            if (!values_.count(s.name)) values_[s.name] = s.default_value;
    }

    long get_int(const std::string& name) const { return std::stol(values_.at(name)); }
    double get_real(const std::string& name) const { return std::stod(values_.at(name)); }
    const std::string& get_str(const std::string& name) const { return values_.at(name); }
    const std::map<std::string, std::string>& all() const { return values_; }

  private:
    static void validate(const std::string& exp, const ParamSpec& spec,
                         const std::string& value) {
        auto fail = [&](const std::string& why) {
            throw ConfigError(exp + ": parameter '" + spec.name + "' " + why + " (got '" +
                              value + "')");
        };
        switch (spec.kind) {
            case Kind::Int: {
                std::size_t pos = 0;
                long v = 0;
                try {
                    v = std::stol(value, &pos);
                } catch (const std::exception&) {
                    fail("must be an integer");
                }
                if (pos != value.size()) fail("must be an integer");
                if (v < spec.min || v > spec.max)
                    fail("out of range [" + format_double(spec.min) + ", " +
                         format_double(spec.max) + "]");
                break;
            }
            case Kind::Real: {
                std::size_t pos = 0;
                double v = 0;
                try {
                    v = std::stod(value, &pos);
                } catch (const std::exception&) {
                    fail("must be a number");
                }
                if (pos != value.size()) fail("must be a number");
                if (v < spec.min || v > spec.max)
                    fail("out of range [" + format_double(spec.min) + ", " +
                         format_double(spec.max) + "]");
                break;
            }
            case Kind::Choice:
                if (std::find(spec.choices.begin(), spec.choices.end(), value) ==
                    spec.choices.end())
                    fail("must be one of {" + [&] {
                        std::string s;
                        for (const auto& c : spec.choices) s += (s.empty() ? "" : ", ") + c;
                        return s;
                    }() + "}");
                break;
        }
    }

    std::map<std::string, std::string> values_;
};

std::string format_mask(std::uint32_t mask) {
    std::ostringstream os;
    os << "0x" << std::hex << mask;
    return os.str();
}

Matrix random_hermitian(Eigen::Index n, Rng& rng) {
    Matrix g(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) g(i, j) = Complex(rng.normal(), rng.normal());
    return (g + g.adjoint()) / 2.0;
}

Potential parse_potential(const std::string& name) {
    return name == "gaussian" ? Potential::Gaussian : Potential::Sinusoidal;
}

// ---------------------------------------------------------------------------
// Per-experiment table builders (metadata added by the caller).

void run_ising_phi(const Params& p, std::uint64_t, CsvDocument& doc) {
    const int side = static_cast<int>(p.get_int("side"));
    const double tmin = p.get_real("tmin"), tmax = p.get_real("tmax");
    const int points = static_cast<int>(p.get_int("points"));
    if (tmin >= tmax) throw ConfigError("ising_phi: tmin must be < tmax");
    std::vector<double> temps;
    for (int i = 0; i < points; ++i)
        temps.push_back(tmin * std::pow(tmax / tmin,
                                        static_cast<double>(i) / (points - 1)));
    doc.header = {"temperature", "phi_bits", "cut"};
    for (const IsingPoint& pt : ising_phi_sweep(side, temps, p.get_real("coupling")))
        doc.rows.push_back({format_double(pt.temperature), format_double(pt.phi),
                            format_mask(pt.cut.first)});
}

void run_code_phi(const Params& p, std::uint64_t, CsvDocument& doc) {
    const BitStringCode code = p.get_str("code") == "parity" ? even_parity_code() : hamming84();
    const ClassicalState state = ClassicalState::uniform_over(code);
    doc.header = {"k", "phi_bits", "cut"};
    for (int k = 1; k <= p.get_int("kmax"); ++k) {
        const PhiResult r = classical_phi(state, k);
        doc.rows.push_back({std::to_string(k), format_double(r.phi),
                            format_mask(r.cut.first)});
    }
}

double min_phi_over_cuts(const ClassicalState& state) {
    double best = std::numeric_limits<double>::infinity();
    std::uint32_t best_cut = 0;
    for (int k = 1; k <= state.n / 2; ++k) {
        const PhiResult r = classical_phi(state, k);
        if (r.phi < best - 1e-15) {
            best = r.phi;
            best_cut = r.cut.first;
        }
    }
    (void)best_cut;
    return best;
}

void run_random_code_sweep(const Params& p, std::uint64_t seed, CsvDocument& doc) {
    const int n = static_cast<int>(p.get_int("n"));
    const long m_min = p.get_int("m_min"), m_max = p.get_int("m_max");
    if (m_min > m_max) throw ConfigError("random_code_sweep: m_min must be <= m_max");
    if (m_max > (1L << n)) throw ConfigError("random_code_sweep: m_max exceeds 2^n");
    doc.header = {"m", "phi_bits"};
    for (long m = m_min; m <= m_max; m *= 2) {
        const BitStringCode code = random_code(n, static_cast<int>(m),
                                               seed + static_cast<std::uint64_t>(m));
        doc.rows.push_back({std::to_string(m),
                            format_double(min_phi_over_cuts(
                                ClassicalState::uniform_over(code)))});
    }
}

void run_codeword_count_sweep(const Params& p, std::uint64_t, CsvDocument& doc) {
    const int n = static_cast<int>(p.get_int("n"));
    const long k_max = p.get_int("k_max");
    doc.header = {"k", "exact_bits", "approx_bits"};
    for (long k = 1; k <= k_max; k *= 2) {
        const CodeCapacity c = code_capacity(n, static_cast<std::uint64_t>(k));
        doc.rows.push_back({std::to_string(k), format_double(c.exact_bits),
                            format_double(c.approx_bits)});
    }
}

void run_quantum_phi_max(const Params& p, std::uint64_t seed, CsvDocument& doc) {
    const FactorShape shape{p.get_int("l"), p.get_int("m")};
    const Eigen::Index n = p.get_int("n");
    if (n != shape.dim()) throw ConfigError("quantum_phi_max: n must equal l*m");
    const MaxPhiResult r = max_phi_search(n, shape, static_cast<int>(p.get_int("trials")), seed);
    doc.header = {"field", "value"};
    doc.rows.push_back({"best_phi", format_double(r.best_phi)});
    doc.rows.push_back({"best_random_phi", format_double(r.best_random_phi)});
    for (Eigen::Index i = 0; i < r.best_spectrum.size(); ++i)
        doc.rows.push_back({"spectrum_" + std::to_string(i),
                            format_double(r.best_spectrum(i))});
}

void run_integration_energy_demo(const Params& p, std::uint64_t seed, CsvDocument& doc) {
    const FactorShape shape{p.get_int("l"), p.get_int("m")};
    Rng rng(seed);
    const Matrix h = random_hermitian(shape.dim(), rng);
    const SeparabilityReport r = integration_energy(h, shape);
    doc.header = {"field", "value"};
    for (int i = 0; i < 4; ++i)
        doc.rows.push_back({"norm_h" + std::to_string(i), format_double(r.norms[i])});
    doc.rows.push_back({"integration_energy", format_double(r.integration_energy)});
    for (Eigen::Index i = 0; i < r.arranged_eigs.size(); ++i)
        doc.rows.push_back({"arranged_eig_" + std::to_string(i),
                            format_double(r.arranged_eigs(i))});
}

void run_sliding_autonomy(const Params& p, std::uint64_t seed, CsvDocument& doc) {
    const int b_min = static_cast<int>(p.get_int("b_min"));
    const int b_max = static_cast<int>(p.get_int("b_max"));
    if (b_min > b_max) throw ConfigError("sliding_autonomy: b_min must be <= b_max");
    const int alpha = static_cast<int>(p.get_int("alpha"));
    const std::string& pot_name = p.get_str("potential");
    doc.header = {"b", "alpha", "potential", "slin_T", "delta_h",
                  "tau_dyn", "tau_ind", "autonomy", "seed"};
    for (int b = b_min; b <= b_max; ++b) {
        const AutonomyReport r =
            sliding_simulation(b, parse_potential(pot_name), alpha, p.get_real("omega2"),
                               p.get_real("coupling"), static_cast<int>(p.get_int("samples")));
        doc.rows.push_back({std::to_string(b), std::to_string(alpha), pot_name,
                            format_double(r.slin_final), format_double(r.delta_h),
                            format_double(r.tau_dyn), format_double(r.tau_ind),
                            format_double(r.autonomy), std::to_string(seed)});
    }
}

void run_apodization_compare(const Params& p, std::uint64_t seed, CsvDocument& doc) {
    const int b = static_cast<int>(p.get_int("b"));
    const std::string& pot_name = p.get_str("potential");
    doc.header = {"b", "alpha", "potential", "slin_T", "delta_h",
                  "tau_dyn", "tau_ind", "autonomy", "seed"};
    for (int alpha = 0; alpha <= p.get_int("alpha_max"); ++alpha) {
        const AutonomyReport r =
            sliding_simulation(b, parse_potential(pot_name), alpha, p.get_real("omega2"),
                               p.get_real("coupling"), static_cast<int>(p.get_int("samples")));
        doc.rows.push_back({std::to_string(b), std::to_string(alpha), pot_name,
                            format_double(r.slin_final), format_double(r.delta_h),
                            format_double(r.tau_dyn), format_double(r.tau_ind),
                            format_double(r.autonomy), std::to_string(seed)});
    }
}

void run_snip_optimize(const Params& p, std::uint64_t seed, CsvDocument& doc) {
    const FactorShape shape{p.get_int("l"), p.get_int("m")};
    Rng rng(seed);
    const Matrix h = random_hermitian(shape.dim(), rng);
    Eigen::VectorXcd psi(shape.dim());
    for (Eigen::Index i = 0; i < psi.size(); ++i) psi(i) = Complex(rng.normal(), rng.normal());
    psi /= psi.norm();
    const Matrix rho0 = psi * psi.adjoint();
    std::vector<double> times;
    for (int i = 0; i < 9; ++i) times.push_back(static_cast<double>(i) / 8.0);

    double identity_entropy = 0.0;
    for (double t : times)
        identity_entropy += von_neumann_entropy(ptrace_first(evolve(rho0, h, t), shape));
    identity_entropy /= static_cast<double>(times.size());

    const FactorizationResult r = factorization_optimize(
        rho0, h, shape, times, static_cast<int>(p.get_int("budget")), seed);
    doc.header = {"field", "value"};
    doc.rows.push_back({"objective", format_double(r.objective)});
    doc.rows.push_back({"mean_entropy_optimized", format_double(r.mean_entropy)});
    doc.rows.push_back({"mean_entropy_identity", format_double(identity_entropy)});
    doc.rows.push_back({"converged", r.converged ? "1" : "0"});
}

void run_dispersion(const Params& p, std::uint64_t, CsvDocument& doc) {
    const int side = static_cast<int>(p.get_int("side"));
    const double mu = p.get_real("mu"), gamma = p.get_real("gamma");
    const CouplingMap couplings = nearest_neighbor_couplings(mu, gamma);
    doc.header = {"kx", "ky", "kz", "omega2"};
    for (int x = 0; x < side; ++x)
        for (int y = 0; y < side; ++y)
            for (int z = 0; z < side; ++z) {
                const std::array<double, 3> kappa{2.0 * std::numbers::pi * x / side,
                                                  2.0 * std::numbers::pi * y / side,
                                                  2.0 * std::numbers::pi * z / side};
                doc.rows.push_back({format_double(kappa[0]), format_double(kappa[1]),
                                    format_double(kappa[2]),
                                    format_double(lattice_dispersion(couplings, kappa))});
            }
}

}  // namespace

const std::vector<std::string>& experiment_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& def : experiment_defs()) out.push_back(def.name);
        return out;
    }();
    return names;
}

const std::vector<ParamSpec>& experiment_params(const std::string& experiment) {
    return find_def(experiment).params;
}

nlohmann::json experiment_schema(const std::string& experiment) {
    const ExperimentDef& def = find_def(experiment);
    nlohmann::json params = nlohmann::json::object();
    for (const auto& spec : def.params) {
        nlohmann::json entry;
        switch (spec.kind) {
            case Kind::Int:
                entry["type"] = "int";
                entry["min"] = static_cast<long>(spec.min);
                entry["max"] = static_cast<long>(spec.max);
                break;
            case Kind::Real:
                entry["type"] = "real";
                entry["min"] = spec.min;
                entry["max"] = spec.max;
                break;
            case Kind::Choice:
                entry["type"] = "choice";
                entry["choices"] = spec.choices;
                break;
        }
        entry["default"] = spec.default_value;
        params[spec.name] = std::move(entry);
    }
    return {{"experiment", def.name}, {"params", std::move(params)},
            {"tolerance", def.tolerance}};
}

ExperimentConfig config_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("experiment"))
        throw ConfigError("config: expected an object with an 'experiment' field");
    ExperimentConfig config;
    config.experiment = j.at("experiment").get<std::string>();
    if (j.contains("seed")) config.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("output_path")) config.output_path = j.at("output_path").get<std::string>();
    if (j.contains("params")) {
        if (!j.at("params").is_object()) throw ConfigError("config: 'params' must be an object");
        for (const auto& [key, value] : j.at("params").items()) {
            if (value.is_string())
                config.params[key] = value.get<std::string>();
            else
                config.params[key] = value.dump();
        }
    }
    return config;
}

nlohmann::json config_to_json(const ExperimentConfig& config) {
    nlohmann::json params = nlohmann::json::object();
    for (const auto& [key, value] : config.params) params[key] = value;
    nlohmann::json j = {{"experiment", config.experiment},
                        {"seed", config.seed},
                        {"params", std::move(params)}};
    if (!config.output_path.empty()) j["output_path"] = config.output_path;
    return j;
}

std::uint64_t config_hash(const ExperimentConfig& config) {
    ExperimentConfig canonical = config;
    canonical.output_path.clear();
    // Include defaults so that an explicitly passed default hashes the same.
    const Params params(find_def(config.experiment), config.params);
    canonical.params = params.all();
    const std::string dump = config_to_json(canonical).dump();
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : dump) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

CsvDocument run_experiment(const ExperimentConfig& config) {
    const ExperimentDef& def = find_def(config.experiment);
    const Params params(def, config.params);
    CsvDocument doc;
    if (config.experiment == "ising_phi") run_ising_phi(params, config.seed, doc);
    else if (config.experiment == "code_phi") run_code_phi(params, config.seed, doc);
    else if (config.experiment == "random_code_sweep")
        run_random_code_sweep(params, config.seed, doc);
    else if (config.experiment == "codeword_count_sweep")
        run_codeword_count_sweep(params, config.seed, doc);
    else if (config.experiment == "quantum_phi_max")
        run_quantum_phi_max(params, config.seed, doc);
    else if (config.experiment == "integration_energy_demo")
        run_integration_energy_demo(params, config.seed, doc);
    else if (config.experiment == "sliding_autonomy")
        run_sliding_autonomy(params, config.seed, doc);
    else if (config.experiment == "apodization_compare")
        run_apodization_compare(params, config.seed, doc);
    else if (config.experiment == "snip_optimize") run_snip_optimize(params, config.seed, doc);
    else if (config.experiment == "dispersion") run_dispersion(params, config.seed, doc);

    CsvDocument out;
    out.metadata = {{"tool_version", kToolVersion},
                    {"experiment", config.experiment},
                    {"config_hash", std::to_string(config_hash(config))},
                    {"seed", std::to_string(config.seed)},
                    {"tolerance", def.tolerance}};
    out.header = std::move(doc.header);
    out.rows = std::move(doc.rows);
    return out;
}

void run_to_file(const ExperimentConfig& config) {
    if (config.output_path.empty()) throw ConfigError("run: output path is required");
    const CsvDocument doc = run_experiment(config);
    std::ofstream os(config.output_path);
    if (!os) throw ConfigError("run: cannot open output path " + config.output_path);
    write_csv(os, doc);
}

bool VerifyReport::all_passed() const {
    for (const auto& e : entries)
        if (e.status == "fail") return false;
    return true;
}

namespace {

bool numeric_equal(const std::string& a, const std::string& b, double tol) {
    std::size_t pa = 0, pb = 0;
    double va = 0, vb = 0;
    try {
        va = std::stod(a, &pa);
        vb = std::stod(b, &pb);
    } catch (const std::exception&) {
        return a == b;
    }
    if (pa != a.size() || pb != b.size()) return a == b;
    return std::abs(va - vb) <= tol * std::max(1.0, std::abs(vb));
}

}  // namespace

VerifyReport verify_goldens(const std::string& dir, std::optional<double> tolerance_override) {
    namespace fs = std::filesystem;
    VerifyReport report;
    if (!fs::is_directory(dir)) throw ConfigError("verify: not a directory: " + dir);
    std::vector<fs::path> configs;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.path().extension() == ".json") configs.push_back(entry.path());
    std::sort(configs.begin(), configs.end());
    if (configs.empty()) throw ConfigError("verify: no .json configs in " + dir);

    for (const auto& config_path : configs) {
        VerifyEntry entry;
        entry.name = config_path.stem().string();
        const fs::path golden_path = fs::path(config_path).replace_extension(".csv");
        if (!fs::exists(golden_path)) {
            entry.status = "skip";
            entry.detail = "missing golden " + golden_path.filename().string();
            report.entries.push_back(entry);
            continue;
        }
        try {
            std::ifstream cfg_is(config_path);
            const ExperimentConfig config =
                config_from_json(nlohmann::json::parse(cfg_is));
            std::ifstream golden_is(golden_path);
            const CsvDocument golden = read_csv(golden_is);
            const CsvDocument fresh = run_experiment(config);
            const double tol =
                tolerance_override ? *tolerance_override
                                   : std::stod(golden.metadata_value("tolerance", "1e-9"));
            entry.detail = "tolerance " + format_double(tol);
            if (fresh.header != golden.header) {
                entry.status = "fail";
                entry.detail += "; header mismatch";
            } else if (fresh.rows.size() != golden.rows.size()) {
                entry.status = "fail";
                entry.detail += "; row count " + std::to_string(fresh.rows.size()) + " vs " +
                                std::to_string(golden.rows.size());
            } else {
                entry.status = "pass";
                for (std::size_t r = 0; r < fresh.rows.size() && entry.status == "pass"; ++r) {
                    if (fresh.rows[r].size() != golden.rows[r].size()) {
                        entry.status = "fail";
                        entry.detail += "; column count mismatch at row " + std::to_string(r);
                        break;
                    }
                    for (std::size_t c = 0; c < fresh.rows[r].size(); ++c)
                        if (!numeric_equal(fresh.rows[r][c], golden.rows[r][c], tol)) {
                            entry.status = "fail";
                            entry.detail += "; mismatch at row " + std::to_string(r) +
                                            " col " + std::to_string(c) + ": " +
                                            fresh.rows[r][c] + " vs " + golden.rows[r][c];
                            break;
                        }
                }
            }
        } catch (const ConfigError& e) {
            entry.status = "fail";
            entry.detail = std::string("config error: ") + e.what();
        } catch (const std::exception& e) {
            entry.status = "fail";
            entry.detail = std::string("error: ") + e.what();
        }
        report.entries.push_back(entry);
    }
    return report;
}

}  // namespace perceptronium
