#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "nselab/families.hpp"
#include "nselab/grid.hpp"
#include "nselab/time_profile.hpp"

namespace nselab {

enum class ExperimentKind { verify, nonuniq, blowup, taylor, dns_compare, gauge };

std::string to_string(ExperimentKind kind);
std::optional<ExperimentKind> parse_experiment(const std::string& name);

/// Configuration or usage problem; the CLI maps it to exit status 2.
class ConfigError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Default tolerances for every pass/fail check, in one place.
struct Tolerances {
    double momentum = 1e-7;
    double divergence = 1e-9;
    double h_equation = 1e-7;
    double lemma3 = 1e-9;
    double u0_match = 1e-12;
    double branch_separation = 0.1;   // lower bound
    double blowup_residual = 1e-6;
    double taylor_mode_rel = 1e-9;
    double taylor_series = 1e-9;
    double taylor_divergence = 1e-9;
    double dns_tracking = 1e-6;
    double dns_energy_rel = 1e-6;
    double gauge_match = 1e-9;
    double gauge_identity = 1e-12;
    double gauge_residual = 1e-7;
    double feedback_zero = 1e-12;
};

struct ConfigEntry {
    std::string key;
    std::string value;
    int line = 0;  // 0 means command line
};

struct ConfigFile {
    std::string path;
    std::vector<ConfigEntry> global;
    std::map<std::string, std::vector<ConfigEntry>> sections;  // keyed by experiment name
    std::optional<std::string> experiment;                     // global `experiment =` key
};

/// Key = value lines with optional [experiment] sections and # comments.
/// Unknown sections and malformed lines are reported with line numbers.
ConfigFile parse_config_file(const std::string& path);

struct ExperimentConfig {
    ExperimentKind experiment = ExperimentKind::verify;
    std::string family = "trig-triple";
    std::string profile;  // zero | quadratic | blowup | polynomial; default per experiment
    double c = 1.0;
    double a = 0.5;
    std::vector<double> poly_coeffs;
    double nu = 0.01;
    int grid_n = 32;
    std::vector<double> times;
    std::string mode = "auto";  // verify: auto | grid | pointwise
    int points = 64;
    double t_check = 0.5;   // nonuniq separation time
    double dt = 1e-3;
    double t_end = 0.2;
    int taylor_order = 12;
    double t_eval = 0.05;
    double threshold = 1e4;
    Vec3 b{1.0, 1.0, -2.0};
    std::optional<Vec3> alpha;
    std::optional<Vec3> b1, b2, alpha1, alpha2;  // two-wave overrides
    std::vector<double> fourier_sin, fourier_cos;
    std::string out_dir = "out";
    bool snapshot = false;
    Tolerances tol;

    TimeProfile make_profile() const;
    /// Builds the configured family; throws ConfigError when validate_params fails.
    SolutionFamily make_family() const;
    Grid3 grid() const { return Grid3(grid_n); }
};

/// Applies defaults, then the file section for `kind`, then CLI overrides;
/// rejects unknown keys and validates the result.
ExperimentConfig build_config(ExperimentKind kind, const ConfigFile* file,
                              const std::vector<ConfigEntry>& overrides);

/// Loads a config whose experiment is named by its `experiment =` key.
ExperimentConfig load_config(const std::string& path);

nlohmann::json config_echo(const ExperimentConfig& cfg);

}  // namespace nselab
