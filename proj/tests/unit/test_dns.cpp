#include <cmath>
#include <stdexcept>
#include <numbers>

#include "doctest.h"
#include "nselab/dns.hpp"
#include "nselab/families.hpp"
#include "nselab/spectral.hpp"
#include "nselab/taylor.hpp"
#include "test_helpers.hpp"

using namespace nselab;

namespace {
constexpr double two_pi = 2.0 * std::numbers::pi;
}

TEST_CASE("config validation") {
    DnsConfig cfg;
    cfg.n = 32;
    cfg.nu = 0.01;
    cfg.dt = 1e-3;
    CHECK_NOTHROW(cfg.validate());
    cfg.dt = 1e-2;  // above 0.5 / (nu (2 pi)^2 (n/2)^2) ~ 4.95e-3
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg.dt = -1.0;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
}

TEST_CASE("init checks and initial energy") {
    const Grid3 g(32);
    DnsConfig cfg;
    cfg.n = 32;
    cfg.nu = 0.01;
    cfg.dt = 1e-3;

    SUBCASE("trig initial field has mean square 3 (2 pi)^2") {
        const DnsState state =
            dns_init(initial_field(SolutionFamily(canonical_trig_triple(0.01)), g), cfg);
        CHECK(dns_energy(state) ==
              doctest::Approx(3.0 * two_pi * two_pi).epsilon(1e-6));
    }
    SUBCASE("zero field") {
        const DnsState state = dns_init(VecField3(g), cfg);
        CHECK(dns_energy(state) == 0.0);
    }
    SUBCASE("non-solenoidal input is rejected") {
        const VecField3 u = testing::random_band_limited(g, 4, 13);
        REQUIRE(norms(divergence(u)).linf > 1e-6);
        CHECK_THROWS_AS(dns_init(u, cfg), std::invalid_argument);
    }
}

TEST_CASE("tracks the decaying trig branch") {
    const Grid3 g(32);
    const SolutionFamily fam = canonical_trig_triple(0.01);
    DnsConfig cfg;
    cfg.n = 32;
    cfg.nu = 0.01;
    cfg.dt = 1e-3;

    DnsState state = dns_init(initial_field(fam, g), cfg);
    const std::vector<double> samples = {0.05};
    const DnsTrajectory traj = dns_integrate(state, cfg, 0.05, samples);
    REQUIRE(traj.snapshots.size() == 1);
    CHECK(linf_diff(traj.snapshots[0], sample_velocity(fam, g, 0.05)) < 1e-6);
    CHECK(traj.diagnostics[0].div_linf < 1e-9);
    const double beta = two_pi * two_pi * 0.01;
    CHECK(traj.diagnostics[0].energy ==
          doctest::Approx(3.0 * two_pi * two_pi * std::exp(-2.0 * beta * 0.05)).epsilon(1e-6));
}

TEST_CASE("zero stays zero") {
    const Grid3 g(16);
    DnsConfig cfg;
    cfg.n = 16;
    cfg.nu = 0.01;
    cfg.dt = 1e-3;
    DnsState state = dns_init(VecField3(g), cfg);
    for (int i = 0; i < 10; ++i) dns_step(state, cfg);
    CHECK(norms(to_physical(state.velocity_hat)).linf == 0.0);
}

TEST_CASE("plane wave stays on its wavevector") {
    const Grid3 g(32);
    const SolutionFamily fam = canonical_plane_wave(0.01);
    DnsConfig cfg;
    cfg.n = 32;
    cfg.nu = 0.01;
    cfg.dt = 1e-3;
    DnsState state = dns_init(initial_field(fam, g), cfg);
    for (int i = 0; i < 20; ++i) dns_step(state, cfg);

    double off_mode_energy = 0.0;
    const int n = g.n;
    for (int c = 0; c < 3; ++c) {
        std::size_t idx = 0;
        for (int m1 = 0; m1 < n; ++m1)
            for (int m2 = 0; m2 < n; ++m2)
                for (int m3 = 0; m3 < n; ++m3, ++idx) {
                    const int k1 = wavenumber(m1, n), k2 = wavenumber(m2, n),
                              k3 = wavenumber(m3, n);
                    const bool on = (k1 == 1 && k2 == 1 && k3 == 1) ||
                                    (k1 == -1 && k2 == -1 && k3 == -1);
                    if (!on) off_mode_energy += std::norm(state.velocity_hat[c].modes[idx]);
                }
    }
    CHECK(off_mode_energy < 1e-12);
}

TEST_CASE("energy is non-increasing step by step") {
    const Grid3 g(16);
    DnsConfig cfg;
    cfg.n = 16;
    cfg.nu = 0.02;
    cfg.dt = 2e-3;
    DnsState state = dns_init(testing::random_solenoidal(g, 4, 31), cfg);
    double prev = dns_energy(state);
    for (int i = 0; i < 50; ++i) {
        dns_step(state, cfg);
        const double e = dns_energy(state);
        CHECK(e <= prev + 1e-12);
        prev = e;
    }
}

TEST_CASE("fourth-order convergence in dt") {
    // Truncation error must dominate roundoff for the factor to be visible,
    // hence the stiffer nu and the coarse grid.
    const Grid3 g(8);
    const double nu = 0.2;
    const SolutionFamily fam = canonical_trig_triple(nu);
    const VecField3 u0 = initial_field(fam, g);
    const VecField3 want = sample_velocity(fam, g, 0.1);

    auto error_at = [&](double dt) {
        DnsConfig cfg;
        cfg.n = 8;
        cfg.nu = nu;
        cfg.dt = dt;
        DnsState state = dns_init(u0, cfg);
        const std::vector<double> samples = {0.1};
        const DnsTrajectory traj = dns_integrate(state, cfg, 0.1, samples);
        REQUIRE(traj.snapshots.size() == 1);
        return linf_diff(traj.snapshots[0], want);
    };

    const double coarse = error_at(2e-3);
    const double fine = error_at(1e-3);
    const double factor = coarse / fine;
    CHECK(factor >= 8.0);
    CHECK(factor <= 32.0);
}

TEST_CASE("integration halts when the threshold is exceeded") {
    const Grid3 g(16);
    DnsConfig cfg;
    cfg.n = 16;
    cfg.nu = 0.01;
    cfg.dt = 1e-3;
    cfg.blowup_threshold = 1.0;  // trig field has linf 4 pi
    DnsState state = dns_init(initial_field(SolutionFamily(canonical_trig_triple(0.01)), g), cfg);
    const DnsTrajectory traj = dns_integrate(state, cfg, 0.05, {});
    CHECK(traj.blowup_flagged);
    CHECK(traj.halted_at.has_value());
}

TEST_CASE("misaligned target time is rejected") {
    const Grid3 g(16);
    DnsConfig cfg;
    cfg.n = 16;
    cfg.nu = 0.01;
    cfg.dt = 1e-3;
    DnsState state = dns_init(VecField3(g), cfg);
    CHECK_THROWS_AS(dns_integrate(state, cfg, 0.0005, {}), std::invalid_argument);
}

TEST_CASE("the power series and the integrator agree at small times") {
    const Grid3 g(32);
    const double nu = 0.01;
    const SolutionFamily fam = canonical_trig_triple(nu);
    const VecField3 u0 = initial_field(fam, g);

    const TaylorSeries series = compute_coefficients(to_spectral(u0), {}, nu, 8);

    DnsConfig cfg;
    cfg.n = 32;
    cfg.nu = nu;
    cfg.dt = 1e-3;
    DnsState state = dns_init(u0, cfg);
    const std::vector<double> samples = {0.025, 0.05};
    const DnsTrajectory traj = dns_integrate(state, cfg, 0.05, samples);

    REQUIRE(traj.snapshots.size() == 2);
    for (std::size_t i = 0; i < samples.size(); ++i)
        CHECK(linf_diff(evaluate(series, samples[i]), traj.snapshots[i]) < 1e-6);
}

TEST_CASE("diagnostics ring keeps a bounded recent history") {
    const Grid3 g(16);
    DnsConfig cfg;
    cfg.n = 16;
    cfg.nu = 0.01;
    cfg.dt = 1e-3;
    DnsState state = dns_init(initial_field(SolutionFamily(canonical_trig_triple(0.01)), g), cfg);
    for (int i = 0; i < 80; ++i) dns_step(state, cfg);
    CHECK(state.diagnostics_ring.size() == DnsState::diagnostics_capacity);
    CHECK(state.last().t == doctest::Approx(state.t));
    CHECK(state.last().div_linf < 1e-9);
}

TEST_CASE("blow-up monitor") {
    const Grid3 g(32);
    SUBCASE("detects the divergence of the blow-up profile") {
        const SolutionFamily fam =
            canonical_trig_triple(0.01, TimeProfile::rational_blowup(1.0, 0.5));
        const std::vector<double> times = {0.4, 0.45, 0.49};
        const BlowupReport rep = blowup_monitor(fam, g, times, 1000.0);
        REQUIRE(rep.samples.size() == 3);
        CHECK(rep.samples[2].sup_comp[0] >= 1200.0);
        REQUIRE(rep.first_exceedance.has_value());
        CHECK(*rep.first_exceedance == 0.49);
    }
    SUBCASE("c=0 never exceeds a loose threshold") {
        const SolutionFamily fam =
            canonical_trig_triple(0.01, TimeProfile::rational_blowup(0.0, 0.5));
        const std::vector<double> times = {0.1, 0.3, 0.45};
        const BlowupReport rep = blowup_monitor(fam, g, times, 4.0 * two_pi);
        CHECK_FALSE(rep.first_exceedance.has_value());
    }
    SUBCASE("infinite threshold reports no exceedance") {
        const SolutionFamily fam =
            canonical_trig_triple(0.01, TimeProfile::rational_blowup(1.0, 0.5));
        const std::vector<double> times = {0.49};
        const BlowupReport rep =
            blowup_monitor(fam, g, times, std::numeric_limits<double>::infinity());
        CHECK_FALSE(rep.first_exceedance.has_value());
    }
}
