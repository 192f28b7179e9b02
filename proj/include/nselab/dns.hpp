#pragma once

#include <optional>
#include <span>
#include <vector>

#include "nselab/families.hpp"
#include "nselab/grid.hpp"
#include "nselab/spectral.hpp"

namespace nselab {

struct DnsConfig {
    int n = 32;
    double nu = 0.01;
    double dt = 1e-3;
    double t_end = 0.2;
    bool dealias = true;
    double blowup_threshold = 1e4;

    /// Explicit-diffusion stability bound 0.5 / (nu (2 pi)^2 (n/2)^2).
    double stability_limit() const;
    void validate() const;
};

struct DnsDiagnosticsRow {
    double t = 0.0;
    double energy = 0.0;        // mean |u|^2 via Parseval
    double max_velocity = 0.0;  // linf over components and samples
    double div_linf = 0.0;
};

struct DnsState {
    static constexpr std::size_t diagnostics_capacity = 64;

    Grid3 grid;
    double t = 0.0;
    SpectralVec velocity_hat;  // divergence-free
    std::vector<DnsDiagnosticsRow> diagnostics_ring;  // most recent steps, capped

    const DnsDiagnosticsRow& last() const { return diagnostics_ring.back(); }
};

/// Projects the initial spectrum and checks solenoidality (1e-8) and the
/// time-step stability bound.
DnsState dns_init(const VecField3& u0, const DnsConfig& cfg);

/// One RK4 step of du/dt = -P[(u.grad)u] + nu lap u with per-stage projection.
void dns_step(DnsState& state, const DnsConfig& cfg);

double dns_energy(const DnsState& state);

struct DnsTrajectory {
    std::vector<double> sample_times;
    std::vector<VecField3> snapshots;
    std::vector<DnsDiagnosticsRow> diagnostics;
    bool blowup_flagged = false;
    std::optional<double> halted_at;
};

/// Fixed-step integration to t_target, recording snapshots and diagnostics at
/// the requested sample times (each must sit on the step lattice). Exceeding
/// the blow-up threshold halts integration with a flagged diagnostic.
DnsTrajectory dns_integrate(DnsState& state, const DnsConfig& cfg, double t_target,
                            std::span<const double> sample_times);

struct BlowupSample {
    double t = 0.0;
    double sup_velocity = 0.0;
    Vec3 sup_comp{};
};

struct BlowupReport {
    double threshold = 0.0;
    std::vector<BlowupSample> samples;
    std::optional<double> first_exceedance;
};

/// Sup-norm ladder of the analytic family with first threshold exceedance.
BlowupReport blowup_monitor(const SolutionFamily& s, const Grid3& grid,
                            std::span<const double> sample_times, double threshold);

}  // namespace nselab
