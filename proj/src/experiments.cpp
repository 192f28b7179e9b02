#include "nselab/experiments.hpp"

#include <chrono>
#include <cmath>
#include <filesystem>
#include <iomanip>
#include <sstream>

#include "nselab/dns.hpp"
#include "nselab/snapshot.hpp"
#include "nselab/spectral.hpp"
#include "nselab/taylor.hpp"
#include "nselab/verification.hpp"

namespace nselab {

namespace {

std::string snapshot_path(const std::string& out_dir, const std::string& stem, int index) {
    std::ostringstream os;
    os << stem << '_' << std::setfill('0') << std::setw(3) << index << ".nsef";
    return (std::filesystem::path(out_dir) / os.str()).string();
}

void prepare_out_dir(const ExperimentConfig& cfg) {
    if (!cfg.snapshot) return;
    std::error_code ec;
    std::filesystem::create_directories(cfg.out_dir, ec);
    if (ec) throw std::runtime_error("cannot create output directory " + cfg.out_dir);
}

std::string at_time(const std::string& what, double t) {
    return what + " at t=" + format_double(t);
}

void run_verify(const ExperimentConfig& cfg, RunReport& rep) {
    const SolutionFamily fam = cfg.make_family();
    const Grid3 grid = cfg.grid();
    const bool grid_mode = cfg.mode == "grid";
    const std::vector<Vec3> points =
        grid_mode ? std::vector<Vec3>{} : residual_sample_points(cfg.points);

    nlohmann::json snaps = nlohmann::json::array();
    int snap_index = 0;
    for (double t : cfg.times) {
        ReportRow row;
        row.t = t;
        if (grid_mode) {
            const ResidualReport rr = nse_residual(fam, grid, t);
            const HEquationReport hr = h_equation_residual(fam, grid, t);
            const VecField3 u = sample_velocity(fam, grid, t);
            const double l3 = lemma3_residual_linf(u);
            const FieldNorms un = norms(u);
            row.linf_momentum = rr.linf_momentum;
            row.linf_divergence = rr.linf_divergence;
            row.linf_h_equation = hr.linf;
            row.linf_lemma3 = l3;
            row.energy = un.l2 * un.l2;
            row.max_velocity = un.linf;
            add_check(rep, check_le(at_time("momentum residual", t), rr.linf_momentum,
                                    cfg.tol.momentum));
            add_check(rep, check_le(at_time("divergence", t), rr.linf_divergence,
                                    cfg.tol.divergence));
            add_check(rep, check_le(at_time("h-equation residual", t), hr.linf,
                                    cfg.tol.h_equation));
            add_check(rep, check_le(at_time("laplacian identity residual", t), l3,
                                    cfg.tol.lemma3));
            if (cfg.snapshot) {
                const std::string path = snapshot_path(cfg.out_dir, "velocity", snap_index++);
                write_nsef(path, u);
                snaps.push_back({{"t", t}, {"path", path}});
            }
        } else {
            const ResidualReport rr = nse_residual(fam, points, t);
            row.linf_momentum = rr.linf_momentum;
            row.linf_divergence = rr.linf_divergence;
            add_check(rep, check_le(at_time("momentum residual", t), rr.linf_momentum,
                                    cfg.tol.momentum));
            add_check(rep, check_le(at_time("divergence", t), rr.linf_divergence,
                                    cfg.tol.divergence));
        }
        rep.rows.push_back(row);
    }
    if (!snaps.empty()) rep.extra["snapshots"] = std::move(snaps);
}

void run_nonuniq(const ExperimentConfig& cfg, RunReport& rep) {
    if (cfg.family != "trig-triple" && cfg.family != "plane-wave")
        throw ConfigError("nonuniq requires a profiled family (trig-triple or plane-wave)");

    ExperimentConfig zero_cfg = cfg;
    zero_cfg.profile = "zero";
    ExperimentConfig quad_cfg = cfg;
    quad_cfg.profile = "quadratic";

    const SolutionFamily fam0 = zero_cfg.make_family();
    const SolutionFamily fam1 = quad_cfg.make_family();
    const Grid3 grid = cfg.grid();

    const double u0_diff = linf_diff(initial_field(fam0, grid), initial_field(fam1, grid));
    add_check(rep, check_le("shared initial field linf difference", u0_diff, cfg.tol.u0_match));

    const std::array<const SolutionFamily*, 2> fams = {&fam0, &fam1};
    const std::array<std::string, 2> labels = {"zero branch", "quadratic branch"};
    for (int f = 0; f < 2; ++f) {
        for (double t : cfg.times) {
            const ResidualReport rr = nse_residual(*fams[f], grid, t);
            ReportRow row;
            row.t = t;
            row.linf_momentum = rr.linf_momentum;
            row.linf_divergence = rr.linf_divergence;
            rep.rows.push_back(row);
            add_check(rep, check_le(at_time(labels[f] + " momentum residual", t),
                                    rr.linf_momentum, cfg.tol.momentum));
            add_check(rep, check_le(at_time(labels[f] + " divergence", t), rr.linf_divergence,
                                    cfg.tol.divergence));
        }
    }

    const double separation = linf_diff(sample_velocity(fam0, grid, cfg.t_check),
                                        sample_velocity(fam1, grid, cfg.t_check));
    add_check(rep, check_ge(at_time("branch separation", cfg.t_check), separation,
                            cfg.tol.branch_separation));
    rep.extra["u0_linf_difference"] = u0_diff;
    rep.extra["separation_linf"] = separation;
}

void run_blowup(const ExperimentConfig& cfg, RunReport& rep) {
    if (cfg.profile != "blowup")
        throw ConfigError("the blowup experiment requires the blowup profile");
    const SolutionFamily fam = cfg.make_family();
    const Grid3 grid = cfg.grid();

    const BlowupReport monitor = blowup_monitor(fam, grid, cfg.times, cfg.threshold);
    nlohmann::json samples = nlohmann::json::array();
    double sup_max = 0.0;
    for (std::size_t i = 0; i < cfg.times.size(); ++i) {
        const double t = cfg.times[i];
        const ResidualReport rr = nse_residual(fam, grid, t);
        ReportRow row;
        row.t = t;
        row.linf_momentum = rr.linf_momentum;
        row.linf_divergence = rr.linf_divergence;
        row.max_velocity = monitor.samples[i].sup_velocity;
        rep.rows.push_back(row);
        sup_max = std::max(sup_max, monitor.samples[i].sup_velocity);
        samples.push_back({{"t", t},
                           {"sup_velocity", monitor.samples[i].sup_velocity},
                           {"sup_components", monitor.samples[i].sup_comp}});
        add_check(rep, check_le(at_time("momentum residual", t), rr.linf_momentum,
                                cfg.tol.blowup_residual));
        add_check(rep,
                  check_le(at_time("divergence", t), rr.linf_divergence, cfg.tol.divergence));
    }
    if (std::isfinite(cfg.threshold))
        add_check(rep, check_ge("sup velocity exceeds threshold", sup_max, cfg.threshold));
    rep.extra["monitor"] = {{"threshold", cfg.threshold}, {"samples", std::move(samples)}};
    if (monitor.first_exceedance)
        rep.extra["monitor"]["first_exceedance"] = *monitor.first_exceedance;
}

void run_taylor(const ExperimentConfig& cfg, RunReport& rep) {
    const SolutionFamily fam = cfg.make_family();
    const Grid3 grid = cfg.grid();

    const SpectralVec u0 = to_spectral(initial_field(fam, grid));
    const TaylorSeries series = compute_coefficients(u0, {}, cfg.nu, cfg.taylor_order);

    double div_max = 0.0;
    nlohmann::json div_per_order = nlohmann::json::array();
    for (const SpectralVec& psi : series.psi) {
        SpectralVec copy = psi;
        const double d = norms(to_physical(divergence(copy))).linf;
        div_per_order.push_back(d);
        div_max = std::max(div_max, d);
    }
    add_check(rep, check_le("coefficient divergence", div_max, cfg.tol.taylor_divergence));

    // For single-rate families u(t) = e^{rate t} u0 the coefficients must
    // reproduce the exponential series rate^n / n!.
    std::optional<double> rate;
    if (const auto* trig = std::get_if<TrigTripleSolution>(&fam)) rate = -trig->beta();
    if (const auto* plane = std::get_if<PlaneWaveSolution>(&fam)) rate = plane->beta();
    if (const auto* two = std::get_if<TwoWaveSolution>(&fam)) rate = two->beta(0);
    if (const auto* series_fam = std::get_if<FourierSeriesSolution>(&fam))
        if (series_fam->coeffs.size() == 1) rate = series_fam->beta();
    if (rate) {
        double mode_err_max = 0.0;
        nlohmann::json mode_err = nlohmann::json::array();
        double factor = 1.0;
        for (int n = 0; n < static_cast<int>(series.psi.size()); ++n) {
            if (n > 0) factor *= *rate / n;
            double scale = 0.0, err = 0.0;
            for (int c = 0; c < 3; ++c)
                for (std::size_t q = 0; q < u0[c].modes.size(); ++q) {
                    const std::complex<double> expected = u0[c].modes[q] * factor;
                    scale = std::max(scale, std::abs(expected));
                    err = std::max(err, std::abs(series.psi[n][c].modes[q] - expected));
                }
            mode_err.push_back(err / scale);
            mode_err_max = std::max(mode_err_max, err / scale);
        }
        add_check(rep, check_le("coefficient spectrum relative error", mode_err_max,
                                cfg.tol.taylor_mode_rel));
        rep.extra["mode_relative_error"] = std::move(mode_err);
    }

    const double eval_err =
        linf_diff(evaluate(series, cfg.t_eval), sample_velocity(fam, grid, cfg.t_eval));
    add_check(rep, check_le(at_time("series vs closed form", cfg.t_eval), eval_err,
                            cfg.tol.taylor_series));

    rep.extra["coefficient_divergence"] = std::move(div_per_order);
    rep.extra["series_linf_error"] = eval_err;
    rep.extra["order"] = series.order;

    if (cfg.snapshot) {
        nlohmann::json snaps = nlohmann::json::array();
        for (int n = 0; n < static_cast<int>(series.psi.size()); ++n) {
            const std::string path = snapshot_path(cfg.out_dir, "psi", n);
            write_nsef(path, to_physical(series.psi[n]));
            snaps.push_back({{"order", n}, {"path", path}});
        }
        rep.extra["snapshots"] = std::move(snaps);
    }
}

void run_dns_compare(const ExperimentConfig& cfg, RunReport& rep) {
    const SolutionFamily fam = cfg.make_family();
    const Grid3 grid = cfg.grid();

    for (double t : cfg.times) {
        if (t > cfg.t_end + 1e-12) throw ConfigError("sample times must not exceed t-end");
        const double steps = t / cfg.dt;
        if (std::abs(steps - std::round(steps)) > 1e-6)
            throw ConfigError("sample times must be multiples of dt");
    }

    DnsConfig dns_cfg;
    dns_cfg.n = cfg.grid_n;
    dns_cfg.nu = cfg.nu;
    dns_cfg.dt = cfg.dt;
    dns_cfg.t_end = cfg.t_end;
    dns_cfg.blowup_threshold = cfg.threshold;

    DnsState state = dns_init(initial_field(fam, grid), dns_cfg);
    const DnsTrajectory traj = dns_integrate(state, dns_cfg, cfg.t_end, cfg.times);
    rep.dns_diagnostics = traj.diagnostics;

    add_check(rep, {"integration completed without blow-up halt",
                    traj.blowup_flagged ? 1.0 : 0.0, 0.0, "<=", !traj.blowup_flagged});

    nlohmann::json samples = nlohmann::json::array();
    double err_max = 0.0, energy_rel_max = 0.0, err_final = 0.0;
    double energy_prev = traj.diagnostics.empty() ? 0.0 : traj.diagnostics.front().energy;
    double energy_increase = 0.0;
    int snap_index = 0;
    nlohmann::json snaps = nlohmann::json::array();
    for (std::size_t i = 0; i < traj.sample_times.size(); ++i) {
        const double t = traj.sample_times[i];
        const VecField3 analytic = sample_velocity(fam, grid, t);
        const double err = linf_diff(traj.snapshots[i], analytic);
        const FieldNorms an = norms(analytic);
        const double energy_expected = an.l2 * an.l2;
        const DnsDiagnosticsRow& diag = traj.diagnostics[i];
        const double energy_rel =
            std::abs(diag.energy - energy_expected) / std::max(energy_expected, 1e-300);

        err_max = std::max(err_max, err);
        err_final = err;
        energy_rel_max = std::max(energy_rel_max, energy_rel);
        energy_increase = std::max(energy_increase, diag.energy - energy_prev);
        energy_prev = diag.energy;

        ReportRow row;
        row.t = t;
        row.linf_divergence = diag.div_linf;
        row.energy = diag.energy;
        row.max_velocity = diag.max_velocity;
        rep.rows.push_back(row);
        samples.push_back({{"t", t},
                           {"linf_error", err},
                           {"energy", diag.energy},
                           {"energy_expected", energy_expected},
                           {"energy_relative_error", energy_rel}});
        add_check(rep, check_le(at_time("divergence", t), diag.div_linf, cfg.tol.divergence));
        if (cfg.snapshot) {
            const std::string path = snapshot_path(cfg.out_dir, "dns", snap_index++);
            write_nsef(path, traj.snapshots[i]);
            snaps.push_back({{"t", t}, {"path", path}});
        }
    }

    add_check(rep, check_le("energy non-increasing (max increase)", energy_increase, 1e-12));
    if (cfg.profile == "zero") {
        add_check(rep, check_le("tracking error vs analytic branch", err_max, cfg.tol.dns_tracking));
        add_check(rep, check_le("energy relative error vs analytic branch", energy_rel_max,
                                cfg.tol.dns_energy_rel));
    } else {
        add_check(rep, check_ge(at_time("departure from non-periodic-pressure branch", cfg.t_end),
                                err_final, cfg.tol.branch_separation));
    }
    rep.extra["samples"] = std::move(samples);
    if (!snaps.empty()) rep.extra["snapshots"] = std::move(snaps);
}

void run_gauge(const ExperimentConfig& cfg, RunReport& rep) {
    if (cfg.family != "trig-triple")
        throw ConfigError("the gauge experiment requires the trig-triple family");

    ExperimentConfig zero_cfg = cfg;
    zero_cfg.profile = "zero";
    const SolutionFamily base = zero_cfg.make_family();
    const SolutionFamily target = cfg.make_family();
    const TimeProfile profile = cfg.make_profile();
    const Grid3 grid = cfg.grid();

    {  // g(0) = g'(0) = 0 makes the velocity transform the identity at t = 0
        const VecField3 u0 = sample_velocity(base, grid, 0.0);
        const RealField3 p0 = sample_pressure_periodic(base, grid, 0.0);
        const GaugeSnapshot id = gauge_transform(u0, p0, profile, 0.0);
        add_check(rep, check_le("identity at t=0 (velocity)", linf_diff(id.velocity, u0),
                                cfg.tol.gauge_identity));
        add_check(rep, check_le("identity at t=0 (periodic pressure)",
                                linf_diff(id.pressure.periodic, p0), cfg.tol.gauge_identity));
    }

    nlohmann::json detail = nlohmann::json::array();
    for (double t : cfg.times) {
        const VecField3 u_base = sample_velocity(base, grid, t);
        const RealField3 p_base = sample_pressure_periodic(base, grid, t);
        const GaugeSnapshot transformed = gauge_transform(u_base, p_base, profile, t);

        const double vel_err =
            linf_diff(transformed.velocity, sample_velocity(target, grid, t));
        const double p_err =
            linf_diff(transformed.pressure.periodic, sample_pressure_periodic(target, grid, t));
        const double coeff_err =
            std::abs(transformed.pressure.linear_coeff - pressure_linear_coeff(target, t));
        const ResidualReport rr = nse_residual(target, grid, t);

        ReportRow row;
        row.t = t;
        row.linf_momentum = rr.linf_momentum;
        row.linf_divergence = rr.linf_divergence;
        rep.rows.push_back(row);
        detail.push_back({{"t", t},
                          {"velocity_linf_error", vel_err},
                          {"pressure_linf_error", p_err},
                          {"pressure_linear_coeff_error", coeff_err}});

        add_check(rep, check_le(at_time("transformed velocity matches profile branch", t),
                                vel_err, cfg.tol.gauge_match));
        add_check(rep, check_le(at_time("transformed pressure matches profile branch", t),
                                p_err, cfg.tol.gauge_match));
        add_check(rep, check_le(at_time("pressure linear coefficient", t), coeff_err,
                                cfg.tol.gauge_match));
        add_check(rep, check_le(at_time("transformed-branch momentum residual", t),
                                rr.linf_momentum, cfg.tol.gauge_residual));
    }
    rep.extra["transform"] = std::move(detail);
}

}  // namespace

RunReport run(const ExperimentConfig& cfg) {
    const auto start = std::chrono::steady_clock::now();
    RunReport rep;
    rep.experiment = to_string(cfg.experiment);
    rep.config_echo = config_echo(cfg);
    prepare_out_dir(cfg);

    switch (cfg.experiment) {
        case ExperimentKind::verify:
            run_verify(cfg, rep);
            break;
        case ExperimentKind::nonuniq:
            run_nonuniq(cfg, rep);
            break;
        case ExperimentKind::blowup:
            run_blowup(cfg, rep);
            break;
        case ExperimentKind::taylor:
            run_taylor(cfg, rep);
            break;
        case ExperimentKind::dns_compare:
            run_dns_compare(cfg, rep);
            break;
        case ExperimentKind::gauge:
            run_gauge(cfg, rep);
            break;
    }

    rep.duration_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

int exit_status(const RunReport& report) { return report.passed ? 0 : 1; }

}  // namespace nselab
