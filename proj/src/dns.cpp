#include "nselab/dns.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace nselab {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

void axpy(SpectralVec& y, double a, const SpectralVec& x) {
    for (int c = 0; c < 3; ++c)
        for (std::size_t q = 0; q < y[c].modes.size(); ++q) y[c].modes[q] += a * x[c].modes[q];
}

SpectralVec stage(const SpectralVec& u, double a, const SpectralVec& k) {
    SpectralVec out = u;
    axpy(out, a, k);
    return out;
}

// -P[(u.grad)u] + nu lap u; optionally reports the physical max velocity.
SpectralVec rhs(const SpectralVec& U, const DnsConfig& cfg, double* max_velocity) {
    const Grid3& grid = U.grid();
    const VecField3 u = to_physical(U);
    if (max_velocity) *max_velocity = norms(u).linf;

    VecField3 conv(grid);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            const RealField3 d = to_physical(partial_derivative(U[i], j));
            for (std::size_t q = 0; q < conv[i].values.size(); ++q)
                conv[i].values[q] += u[j].values[q] * d.values[q];
        }

    SpectralVec C = to_spectral(conv);
    if (cfg.dealias) dealias_two_thirds(C);
    leray_project(C);

    SpectralVec out = laplacian(U);
    for (int c = 0; c < 3; ++c)
        for (std::size_t q = 0; q < out[c].modes.size(); ++q)
            out[c].modes[q] = cfg.nu * out[c].modes[q] - C[c].modes[q];
    return out;
}

void push_diagnostics(DnsState& state, DnsDiagnosticsRow row) {
    if (state.diagnostics_ring.size() >= DnsState::diagnostics_capacity)
        state.diagnostics_ring.erase(state.diagnostics_ring.begin());
    state.diagnostics_ring.push_back(row);
}

}  // namespace

double DnsConfig::stability_limit() const {
    const double half_n = n / 2.0;
    return 0.5 / (nu * two_pi * two_pi * half_n * half_n);
}

void DnsConfig::validate() const {
    if (n < 8 || n % 2 != 0) throw std::invalid_argument("DnsConfig: n must be even and >= 8");
    if (!(nu > 0.0)) throw std::invalid_argument("DnsConfig: nu must be positive");
    if (!(dt > 0.0)) throw std::invalid_argument("DnsConfig: dt must be positive");
    if (dt > stability_limit())
        throw std::invalid_argument("DnsConfig: dt exceeds the diffusive stability bound");
}

DnsState dns_init(const VecField3& u0, const DnsConfig& cfg) {
    cfg.validate();
    if (u0.grid().n != cfg.n)
        throw std::invalid_argument("dns_init: initial field grid does not match config");
    if (norms(divergence(u0)).linf > 1e-8)
        throw std::invalid_argument("dns_init: initial field is not divergence-free");

    DnsState state;
    state.grid = u0.grid();
    state.t = 0.0;
    state.velocity_hat = to_spectral(u0);
    leray_project(state.velocity_hat);
    push_diagnostics(state, {0.0, dns_energy(state), norms(u0).linf,
                             norms(to_physical(divergence(state.velocity_hat))).linf});
    return state;
}

void dns_step(DnsState& state, const DnsConfig& cfg) {
    const double dt = cfg.dt;
    double max_vel = 0.0;
    const SpectralVec k1 = rhs(state.velocity_hat, cfg, &max_vel);
    const SpectralVec k2 = rhs(stage(state.velocity_hat, 0.5 * dt, k1), cfg, nullptr);
    const SpectralVec k3 = rhs(stage(state.velocity_hat, 0.5 * dt, k2), cfg, nullptr);
    const SpectralVec k4 = rhs(stage(state.velocity_hat, dt, k3), cfg, nullptr);

    axpy(state.velocity_hat, dt / 6.0, k1);
    axpy(state.velocity_hat, dt / 3.0, k2);
    axpy(state.velocity_hat, dt / 3.0, k3);
    axpy(state.velocity_hat, dt / 6.0, k4);
    leray_project(state.velocity_hat);
    state.t += dt;

    DnsDiagnosticsRow row;
    row.t = state.t;
    row.energy = dns_energy(state);
    row.max_velocity = max_vel;  // sampled at the step start
    row.div_linf = norms(to_physical(divergence(state.velocity_hat))).linf;
    push_diagnostics(state, row);
}

double dns_energy(const DnsState& state) { return mean_square(state.velocity_hat); }

DnsTrajectory dns_integrate(DnsState& state, const DnsConfig& cfg, double t_target,
                            std::span<const double> sample_times) {
    const double dt = cfg.dt;
    const double span_t = t_target - state.t;
    if (span_t < -1e-12) throw std::invalid_argument("dns_integrate: t_target is in the past");
    const long steps = std::lround(span_t / dt);
    if (std::abs(steps * dt - span_t) > 1e-9 * std::max(1.0, std::abs(t_target)))
        throw std::invalid_argument("dns_integrate: t_target is not a multiple of dt");

    DnsTrajectory traj;
    auto on_lattice = [&](double ts) { return std::abs(ts - state.t) <= 1e-9 * std::max(1.0, ts); };
    auto record = [&]() {
        for (double ts : sample_times) {
            if (!on_lattice(ts)) continue;
            const VecField3 u = to_physical(state.velocity_hat);
            DnsDiagnosticsRow row;
            row.t = ts;
            row.energy = dns_energy(state);
            row.max_velocity = norms(u).linf;
            row.div_linf = norms(to_physical(divergence(state.velocity_hat))).linf;
            traj.sample_times.push_back(ts);
            traj.snapshots.push_back(u);
            traj.diagnostics.push_back(row);
        }
    };

    record();
    for (long s = 0; s < steps; ++s) {
        dns_step(state, cfg);
        if (norms(to_physical(state.velocity_hat)).linf > cfg.blowup_threshold) {
            traj.blowup_flagged = true;
            traj.halted_at = state.t;
            break;
        }
        record();
    }
    return traj;
}

BlowupReport blowup_monitor(const SolutionFamily& s, const Grid3& grid,
                            std::span<const double> sample_times, double threshold) {
    BlowupReport rep;
    rep.threshold = threshold;
    for (double t : sample_times) {
        const VecField3 u = sample_velocity(s, grid, t);
        BlowupSample sample;
        sample.t = t;
        for (int c = 0; c < 3; ++c) {
            sample.sup_comp[c] = norms(u[c]).linf;
            sample.sup_velocity = std::max(sample.sup_velocity, sample.sup_comp[c]);
        }
        if (!rep.first_exceedance && sample.sup_velocity > threshold) rep.first_exceedance = t;
        rep.samples.push_back(sample);
    }
    return rep;
}

}  // namespace nselab
