#include <cmath>
#include <stdexcept>
#include <numbers>

#include "doctest.h"
#include "nselab/families.hpp"
#include "nselab/spectral.hpp"
#include "nselab/verification.hpp"
#include "test_helpers.hpp"

using namespace nselab;

namespace {
constexpr double two_pi = 2.0 * std::numbers::pi;
}

TEST_CASE("grid residuals vanish for the exact families") {
    const Grid3 g(32);
    SUBCASE("trig triple, zero profile") {
        const ResidualReport r = nse_residual(canonical_trig_triple(0.01), g, 0.1);
        CHECK(r.linf_momentum < 1e-8);
        CHECK(r.linf_divergence < 1e-10);
        CHECK(r.method == ResidualMethod::spectral_grid);
    }
    SUBCASE("two-wave at t=0.1") {
        const ResidualReport r = nse_residual(canonical_two_wave(0.01), g, 0.1);
        CHECK(r.linf_momentum < 1e-8);
        CHECK(r.linf_divergence < 1e-9);
    }
}

TEST_CASE("residual ladder stays clean out to t=0.5 for every family") {
    const Grid3 g(32);
    const SolutionFamily families[] = {canonical_trig_triple(0.01),
                                       canonical_trig_triple(0.01, TimeProfile::quadratic(1.0)),
                                       canonical_plane_wave(0.01),
                                       canonical_fourier_series(0.01),
                                       canonical_two_wave(0.01)};
    for (const SolutionFamily& s : families) {
        INFO(family_name(s));
        const ResidualReport r = nse_residual(s, g, 0.5);
        CHECK(r.linf_momentum < 1e-7);
        CHECK(r.linf_divergence < 1e-9);
    }
}

TEST_CASE("pointwise residuals work for incommensurate parameters") {
    PlaneWaveSolution s;
    s.b = {1.0, 1.0, -2.0};
    const double base = 1.0 / std::numbers::e;
    s.alpha = {base, base, base};  // valid but not an integer wavevector
    s.nu = 0.01;
    REQUIRE(validate_params(SolutionFamily(s)).passed);
    REQUIRE_FALSE(grid_commensurate(SolutionFamily(s), Grid3(32)));
    CHECK_THROWS_AS(nse_residual(SolutionFamily(s), Grid3(32), 0.1), std::invalid_argument);

    const std::vector<Vec3> pts = residual_sample_points(64);
    const ResidualReport r = nse_residual(SolutionFamily(s), pts, 0.1);
    CHECK(r.linf_momentum < 1e-9);
    CHECK(r.linf_divergence < 1e-10);
    CHECK(r.method == ResidualMethod::pointwise_closed_form);
}

TEST_CASE("pointwise and grid residuals agree on commensurate families") {
    const Grid3 g(32);
    const std::vector<Vec3> pts = residual_sample_points(128);
    for (const SolutionFamily s : {SolutionFamily(canonical_trig_triple(0.01)),
                                   SolutionFamily(canonical_two_wave(0.01))}) {
        const ResidualReport grid_rep = nse_residual(s, g, 0.25);
        const ResidualReport point_rep = nse_residual(s, pts, 0.25);
        CHECK(std::abs(grid_rep.linf_momentum - point_rep.linf_momentum) < 1e-7);
        CHECK(std::abs(grid_rep.linf_divergence - point_rep.linf_divergence) < 1e-7);
    }
}

TEST_CASE("a wrong decay rate leaves the unbalanced heat term as residual") {
    // Solution evaluated with beta halved (nu/2) inserted into the equation
    // with the true nu: the residual is (nu - nu/2) lap u, order 1 at t=0.5.
    const SolutionFamily wrong = canonical_trig_triple(0.005);
    const double nu = 0.01;
    double linf = 0.0;
    for (const Vec3& x : residual_sample_points(64, 7)) {
        const double t = 0.5;
        const Vec3 dudt = eval_velocity_time_derivative(wrong, x, t);
        const Mat3 grad = eval_velocity_gradient(wrong, x, t);
        const Vec3 lap = eval_velocity_laplacian(wrong, x, t);
        const Vec3 grad_p = eval_pressure_gradient(wrong, x, t);
        const Vec3 u = eval_velocity(wrong, x, t);
        for (int i = 0; i < 3; ++i) {
            double r = dudt[i] - nu * lap[i] + grad_p[i];
            for (int j = 0; j < 3; ++j) r += u[j] * grad[i][j];
            linf = std::max(linf, std::abs(r));
        }
    }
    CHECK(linf >= 1.0);
}

TEST_CASE("residual honours the force term") {
    const Grid3 g(16);
    const SolutionFamily ref = canonical_trig_triple(0.01);
    const SolutionFamily controlled = canonical_trig_triple(0.01, TimeProfile::quadratic(1.0));
    // The feedback force on the reference trajectory itself vanishes, so the
    // reference stays residual-free under it.
    const ForceSpec force = ForceSpec::feedback_difference(ref, ref);
    const ResidualReport r = nse_residual(ref, g, 0.1, force);
    CHECK(r.linf_momentum < 1e-8);
    // A genuinely different controlled trajectory gives a nonzero force.
    const ForceSpec active = ForceSpec::feedback_difference(controlled, ref);
    const Vec3 f = active.eval({0.25, 0.5, 0.75}, 0.0);
    CHECK(std::abs(f[0] + 1.0) < 1e-12);  // -g''(0) = -c
}

TEST_CASE("h field") {
    const Grid3 g(32);
    SUBCASE("antisymmetry for arbitrary fields") {
        const VecField3 u = testing::random_band_limited(g, 10, 11);
        const RealField3 h01 = h_field(u, 0, 1);
        const RealField3 h10 = h_field(u, 1, 0);
        double worst = 0.0;
        for (std::size_t q = 0; q < h01.values.size(); ++q)
            worst = std::max(worst, std::abs(h01.values[q] + h10.values[q]));
        CHECK(worst < 1e-12 * (1.0 + norms(u).linf));
    }
    SUBCASE("matches the closed-form gradient combination") {
        const SolutionFamily s = canonical_trig_triple(0.01);
        const VecField3 u0 = initial_field(s, g);
        const RealField3 got = h_field(u0, 0, 1);
        const RealField3 want = sample_scalar(g, [&](const Vec3& x) {
            const Mat3 grad = eval_velocity_gradient(s, x, 0.0);
            return grad[0][1] - grad[1][0];
        });
        CHECK(linf_diff(got, want) < 1e-10);
    }
    SUBCASE("constant fields have no vorticity") {
        VecField3 c(g);
        for (int i = 0; i < 3; ++i)
            for (double& v : c[i].values) v = 2.0 - i;
        CHECK(norms(h_field(c, 0, 2)).linf < 1e-13);
    }
    SUBCASE("equal indices are a usage error") {
        const VecField3 u(g);
        CHECK_THROWS_AS(h_field(u, 1, 1), std::invalid_argument);
    }
}

TEST_CASE("vorticity-component equation residual") {
    const Grid3 g(32);
    for (double t : {0.0, 0.2}) {
        CHECK(h_equation_residual(canonical_trig_triple(0.01), g, t).linf < 1e-7);
        CHECK(h_equation_residual(canonical_trig_triple(0.01, TimeProfile::quadratic(1.0)), g, t)
                  .linf < 1e-7);
        CHECK(h_equation_residual(canonical_plane_wave(0.01), g, t).linf < 1e-7);
    }
}

TEST_CASE("laplacian identity for divergence-free fields") {
    const Grid3 g(32);
    SUBCASE("trig triple initial field") {
        const VecField3 u0 = initial_field(SolutionFamily(canonical_trig_triple(0.01)), g);
        CHECK(lemma3_residual_linf(u0) < 1e-9);
    }
    SUBCASE("random solenoidal fields") {
        for (unsigned seed : {1u, 2u, 3u}) {
            const VecField3 u = testing::random_solenoidal(g, g.n / 3, seed);
            CHECK(lemma3_residual_linf(u) < 1e-9 * (1.0 + norms(u).linf));
        }
    }
    SUBCASE("zero field") { CHECK(lemma3_residual_linf(VecField3(g)) == 0.0); }
    SUBCASE("non-solenoidal input is refused") {
        const VecField3 u = testing::random_band_limited(g, 5, 9);
        REQUIRE(norms(divergence(u)).linf > 1e-6);
        CHECK_THROWS_AS(lemma3_residual(u, 0), std::invalid_argument);
    }
}

TEST_CASE("gauge transform") {
    const Grid3 g(32);
    const SolutionFamily base = canonical_trig_triple(0.01);
    const TimeProfile quad = TimeProfile::quadratic(1.0);
    const SolutionFamily target = canonical_trig_triple(0.01, quad);

    SUBCASE("zero profile is the identity") {
        const VecField3 u = sample_velocity(base, g, 0.3);
        const RealField3 p = sample_pressure_periodic(base, g, 0.3);
        const GaugeSnapshot out = gauge_transform(u, p, TimeProfile::zero(), 0.3);
        CHECK(linf_diff(out.velocity, u) < 1e-12);
        CHECK(linf_diff(out.pressure.periodic, p) < 1e-12);
        CHECK(out.pressure.linear_coeff == 0.0);
    }
    SUBCASE("maps the zero-profile branch onto the quadratic branch") {
        const double t = 0.5;
        const GaugeSnapshot out = gauge_transform(sample_velocity(base, g, t),
                                                  sample_pressure_periodic(base, g, t), quad, t);
        CHECK(linf_diff(out.velocity, sample_velocity(target, g, t)) < 1e-9);
        CHECK(linf_diff(out.pressure.periodic, sample_pressure_periodic(target, g, t)) < 1e-9);
        CHECK(out.pressure.linear_coeff ==
              doctest::Approx(pressure_linear_coeff(target, t)).epsilon(1e-12));
    }
    SUBCASE("identity at t=0 because g(0) = g'(0) = 0") {
        const VecField3 u = sample_velocity(base, g, 0.0);
        const RealField3 p = sample_pressure_periodic(base, g, 0.0);
        const GaugeSnapshot out = gauge_transform(u, p, quad, 0.0);
        CHECK(linf_diff(out.velocity, u) < 1e-12);
        CHECK(linf_diff(out.pressure.periodic, p) < 1e-12);
    }
}

TEST_CASE("feedback force") {
    const Grid3 g(16);
    const SolutionFamily ref = canonical_trig_triple(0.01, TimeProfile::rational_blowup(1.0, 2.0));
    SUBCASE("vanishes along the reference trajectory") {
        for (double t : {0.0, 0.1, 0.3})
            CHECK(norms(feedback_force(ref, ref, g, t)).linf <= 1e-12);
    }
    SUBCASE("quadratic-vs-zero force at t=0 is the constant -c") {
        const SolutionFamily u = canonical_trig_triple(0.01, TimeProfile::quadratic(1.0));
        const SolutionFamily base = canonical_trig_triple(0.01);
        const VecField3 f = feedback_force(u, base, g, 0.0);
        for (int i = 0; i < 3; ++i)
            for (double v : f[i].values) CHECK(v == doctest::Approx(-1.0).epsilon(1e-12));
    }
}
