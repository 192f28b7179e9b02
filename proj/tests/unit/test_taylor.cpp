#include <cmath>
#include <stdexcept>
#include <numbers>

#include "doctest.h"
#include "nselab/families.hpp"
#include "nselab/spectral.hpp"
#include "nselab/taylor.hpp"
#include "test_helpers.hpp"

using namespace nselab;

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

double solenoidal_linf(const SpectralVec& v) {
    SpectralVec copy = v;
    leray_project(copy);
    return norms(to_physical(copy)).linf;
}

// Largest relative deviation of psi_n from factor * u0, mode by mode,
// normalized by the largest expected coefficient of that order.
double mode_relative_error(const SpectralVec& psi, const SpectralVec& u0, double factor) {
    double scale = 0.0, err = 0.0;
    for (int c = 0; c < 3; ++c)
        for (std::size_t q = 0; q < u0[c].modes.size(); ++q) {
            const std::complex<double> expected = u0[c].modes[q] * factor;
            scale = std::max(scale, std::abs(expected));
            err = std::max(err, std::abs(psi[c].modes[q] - expected));
        }
    return err / scale;
}

}  // namespace

TEST_CASE("the trig-triple self-advection term is a pure gradient") {
    const Grid3 g(32);
    const SpectralVec u0 = to_spectral(initial_field(SolutionFamily(canonical_trig_triple(0.01)), g));
    const SpectralVec v0 = nonlinear_convolution({&u0, 1}, {}, 0);
    CHECK(solenoidal_linf(v0) < 1e-8);
    CHECK(norms(to_physical(v0)).linf > 100.0);  // the term itself is large
}

TEST_CASE("the plane-wave self-advection term vanishes") {
    const Grid3 g(32);
    const SpectralVec u0 = to_spectral(initial_field(SolutionFamily(canonical_plane_wave(0.01)), g));
    const SpectralVec v0 = nonlinear_convolution({&u0, 1}, {}, 0);
    CHECK(solenoidal_linf(v0) < 1e-8);
}

TEST_CASE("zero coefficients convolve to zero") {
    const Grid3 g(16);
    const SpectralVec zero(g);
    const SpectralVec v = nonlinear_convolution({&zero, 1}, {}, 0);
    CHECK(norms(to_physical(v)).linf == 0.0);
}

TEST_CASE("recursion reproduces the exponential decay of the trig branch") {
    const Grid3 g(32);
    const double nu = 0.01;
    const double beta = two_pi * two_pi * nu;
    const SolutionFamily fam = canonical_trig_triple(nu);
    const SpectralVec u0 = to_spectral(initial_field(fam, g));
    const TaylorSeries series = compute_coefficients(u0, {}, nu, 8);

    double factor = 1.0;
    for (int n = 0; n <= 8; ++n) {
        if (n > 0) factor *= -beta / n;
        INFO("order ", n);
        CHECK(mode_relative_error(series.psi[n], u0, factor) < 1e-9);
        SpectralVec copy = series.psi[n];
        CHECK(norms(to_physical(divergence(copy))).linf < 1e-9);
    }

    SUBCASE("series evaluation matches the closed form at small t") {
        const double t = 0.05;
        CHECK(linf_diff(evaluate(series, t), sample_velocity(fam, g, t)) < 1e-9);
    }
    SUBCASE("evaluation at t=0 returns the initial data") {
        CHECK(linf_diff(evaluate(series, 0.0), to_physical(u0)) < 1e-12);
    }
    SUBCASE("pressure coefficient matches the periodic pressure at t=0") {
        const RealField3 p0 = to_physical(series.pressure[0]);
        const RealField3 want = sample_pressure_periodic(fam, g, 0.0);
        CHECK(linf_diff(p0, want) < 1e-9);
        CHECK(std::abs(series.pressure[0].mode(0, 0, 0)) < 1e-13);  // zero-mean convention
    }
}

TEST_CASE("zero initial data stays zero") {
    const Grid3 g(16);
    const TaylorSeries series = compute_coefficients(SpectralVec(g), {}, 0.01, 4);
    for (const SpectralVec& psi : series.psi) {
        SpectralVec copy = psi;
        CHECK(norms(to_physical(copy)).linf == 0.0);
    }
}

TEST_CASE("order zero gives a constant-in-time field") {
    const Grid3 g(16);
    const SpectralVec u0 =
        to_spectral(initial_field(SolutionFamily(canonical_trig_triple(0.01)), g));
    const TaylorSeries series = compute_coefficients(u0, {}, 0.01, 0);
    CHECK(series.psi.size() == 1);
    CHECK(linf_diff(evaluate(series, 5.0), to_physical(u0)) < 1e-12);
}

TEST_CASE("harmonics pick up their own decay rates") {
    const Grid3 g(32);
    FourierSeriesSolution fam = canonical_fourier_series(0.01);
    fam.coeffs = {{1.0, 0.0}, {0.5, 0.0}};
    const double beta = fam.beta();
    const SpectralVec u0 = to_spectral(initial_field(SolutionFamily(fam), g));
    const TaylorSeries series = compute_coefficients(u0, {}, fam.nu, 1);

    for (int harmonic : {1, 2}) {
        const auto base = u0[0].mode(harmonic, harmonic, harmonic);
        const auto got = series.psi[1][0].mode(harmonic, harmonic, harmonic);
        const double rate = beta * harmonic * harmonic;
        CHECK(std::abs(got - rate * base) < 1e-9 * std::abs(base));
    }
}

TEST_CASE("linear dynamics reduce the recursion to the heat factor") {
    // The plane-wave self-advection vanishes, so psi_{n+1} = nu lap psi_n / (n+1).
    const Grid3 g(32);
    const double nu = 0.01;
    const SpectralVec u0 =
        to_spectral(initial_field(SolutionFamily(canonical_plane_wave(nu)), g));
    const TaylorSeries series = compute_coefficients(u0, {}, nu, 4);
    for (int n = 0; n < 4; ++n) {
        const SpectralVec lap = laplacian(series.psi[n]);
        double worst = 0.0;
        for (int c = 0; c < 3; ++c)
            for (std::size_t q = 0; q < lap[c].modes.size(); ++q)
                worst = std::max(worst, std::abs(series.psi[n + 1][c].modes[q] -
                                                 nu * lap[c].modes[q] / (n + 1.0)));
        CHECK(worst < 1e-12);
    }
}

TEST_CASE("non-solenoidal initial data is rejected") {
    const Grid3 g(16);
    const VecField3 grad = sample_vector(g, [](const Vec3& x) {
        return Vec3{two_pi * std::cos(two_pi * x[0]), 0.0, 0.0};
    });
    CHECK_THROWS_AS(compute_coefficients(to_spectral(grad), {}, 0.01, 2), std::invalid_argument);
}

TEST_CASE("recursion accepts general solenoidal data") {
    const Grid3 g(16);
    VecField3 u = testing::random_solenoidal(g, 3, 21);
    // normalize to a tame amplitude so the series is well scaled
    const double peak = norms(u).linf;
    for (int c = 0; c < 3; ++c)
        for (double& v : u[c].values) v /= peak;
    const TaylorSeries series = compute_coefficients(to_spectral(u), {}, 0.05, 6);
    for (const SpectralVec& psi : series.psi) {
        // Band-edge coefficients grow like (nu lap)^n / n!, so the solenoidal
        // defect is measured relative to the coefficient's own magnitude.
        SpectralVec copy = psi;
        const double scale = norms(to_physical(psi)).linf;
        CHECK(norms(to_physical(divergence(copy))).linf < 1e-9 * (1.0 + scale));
    }
    CHECK(linf_diff(evaluate(series, 0.0), u) < 1e-11);
}
