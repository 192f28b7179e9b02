#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <optional>

#include "nselab/experiments.hpp"

namespace {

using nselab::ConfigEntry;

struct CliOptions {
    std::string config_path;
    std::map<std::string, std::string> values;  // only options given on the command line
};

void add_options(CLI::App* cmd, CliOptions& opts) {
    cmd->add_option("--config", opts.config_path, "config file (key = value, [experiment] sections)");

    auto opt = [cmd, &opts](const std::string& key, const std::string& desc) {
        cmd->add_option_function<std::string>(
            "--" + key, [&opts, key](const std::string& v) { opts.values[key] = v; }, desc);
    };
    opt("family", "trig-triple | plane-wave | fourier-series | two-wave");
    opt("profile", "zero | quadratic | blowup | polynomial");
    opt("c", "profile strength");
    opt("a", "blow-up time of the blowup profile");
    opt("poly", "polynomial profile coefficients of t^2,t^3,... (comma list)");
    opt("nu", "viscosity");
    opt("grid", "samples per axis (even, >= 8)");
    opt("times", "sample times (comma list)");
    opt("mode", "verify residual path: auto | grid | pointwise");
    opt("points", "sample point count for pointwise mode");
    opt("t", "comparison time for nonuniq");
    opt("dt", "dns time step");
    opt("t-end", "dns end time");
    opt("order", "taylor series order");
    opt("t-eval", "taylor evaluation time");
    opt("threshold", "blow-up detection threshold");
    opt("b", "wave amplitude vector (x,y,z)");
    opt("alpha", "wave direction scales (x,y,z)");
    opt("wavevector", "integer wavevector; sets alpha = 1/(2 pi k)");
    opt("b1", "first two-wave amplitude");
    opt("b2", "second two-wave amplitude");
    opt("alpha1", "first two-wave direction scales");
    opt("alpha2", "second two-wave direction scales");
    opt("wavevector1", "first two-wave integer wavevector");
    opt("wavevector2", "second two-wave integer wavevector");
    opt("fourier-sin", "sine coefficients c_1..c_N (comma list)");
    opt("fourier-cos", "cosine coefficients d_1..d_N (comma list)");
    opt("out-dir", "report output directory");
    cmd->add_flag_callback(
        "--snapshot", [&opts]() { opts.values["snapshot"] = "true"; },
        "write NSEF field snapshots");
}

void print_summary(const nselab::RunReport& report, const nselab::WrittenFiles& files) {
    for (const auto& c : report.checks)
        std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << c.name << " ("
                  << nselab::format_double(c.value) << ' ' << c.comparison << ' '
                  << nselab::format_double(c.threshold) << ")\n";
    std::cout << (report.passed ? "PASSED" : "FAILED") << " " << report.experiment << " ("
              << nselab::format_double(report.duration_seconds) << " s)\n";
    std::cout << "report: " << files.json_path << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"verification experiments for explicit periodic Navier-Stokes solutions"};
    app.require_subcommand(1);

    CliOptions opts;
    std::map<const CLI::App*, nselab::ExperimentKind> kinds;
    const std::vector<std::pair<nselab::ExperimentKind, std::string>> subcommands = {
        {nselab::ExperimentKind::verify, "residual ladder for one solution family"},
        {nselab::ExperimentKind::nonuniq, "two solutions sharing the same initial field"},
        {nselab::ExperimentKind::blowup, "finite-time blow-up monitor"},
        {nselab::ExperimentKind::taylor, "time power-series recursion checks"},
        {nselab::ExperimentKind::dns_compare, "pseudo-spectral integrator vs closed form"},
        {nselab::ExperimentKind::gauge, "profile-shift transform checks"},
    };
    for (const auto& [kind, desc] : subcommands) {
        CLI::App* cmd = app.add_subcommand(nselab::to_string(kind), desc);
        add_options(cmd, opts);
        kinds[cmd] = kind;
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    const nselab::ExperimentKind kind = kinds.at(app.get_subcommands().front());
    try {
        std::optional<nselab::ConfigFile> file;
        if (!opts.config_path.empty()) file = nselab::parse_config_file(opts.config_path);
        std::vector<ConfigEntry> overrides;
        for (const auto& [key, value] : opts.values) overrides.push_back({key, value, 0});

        const nselab::ExperimentConfig cfg =
            nselab::build_config(kind, file ? &*file : nullptr, overrides);
        const nselab::RunReport report = nselab::run(cfg);
        const nselab::WrittenFiles files = nselab::write_report(report, cfg.out_dir);
        print_summary(report, files);
        return nselab::exit_status(report);
    } catch (const nselab::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
