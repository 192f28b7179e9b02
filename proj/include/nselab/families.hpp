#pragma once

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "nselab/grid.hpp"
#include "nselab/time_profile.hpp"

namespace nselab {

/// Trigonometric triple on the unit cube:
///   u_i = e^{-beta t} 2*pi (sin(2*pi(x_k+g)) + cos(2*pi(x_m+g))) - g'(t)
/// with (i,k,m) cycling the three axes and beta = (2*pi)^2 nu. The pressure
/// carries the non-periodic term g''(t) (x_1+x_2+x_3).
struct TrigTripleSolution {
    double nu = 0.01;
    TimeProfile profile;

    double beta() const;
};

/// Single travelling plane wave u_i = b_i e^{beta t} sin(sum_s x_s/alpha_s + g(t)) - g0(t)
/// with sum_j b_j/alpha_j = 0, beta = -nu sum_j alpha_j^-2 and g' = g0 sum_j 1/alpha_j.
/// The profile stores g0; the phase g is recovered from its integral.
struct PlaneWaveSolution {
    Vec3 b{};
    Vec3 alpha{};
    double nu = 0.01;
    TimeProfile g0_profile;

    Vec3 inv_alpha() const;
    double inv_alpha_sum() const;
    double beta() const;
};

/// Superposition of harmonics of one wave direction,
/// u_i = b_i sum_n e^{beta n^2 t} (c_n sin(n z) + d_n cos(n z)), z = sum_j x_j/alpha_j,
/// with zero pressure.
struct FourierSeriesSolution {
    Vec3 b{};
    Vec3 alpha{};
    std::vector<std::array<double, 2>> coeffs;  // (c_n, d_n) for n = 1..N
    double nu = 0.01;

    Vec3 inv_alpha() const;
    double beta() const;
};

/// Two coupled plane waves with pressure cos(z_1) cos(z_2) e^{(beta_1+beta_2) t}.
/// The coupling conditions force the two decay rates to coincide.
struct TwoWaveSolution {
    std::array<Vec3, 2> b{};
    std::array<Vec3, 2> alpha{};
    double nu = 0.01;

    Vec3 inv_alpha(int wave) const;
    double beta(int wave) const;
};

using SolutionFamily =
    std::variant<TrigTripleSolution, PlaneWaveSolution, FourierSeriesSolution, TwoWaveSolution>;

std::string family_name(const SolutionFamily& s);
double family_viscosity(const SolutionFamily& s);

// Pointwise closed-form evaluation. All evaluators throw std::domain_error
// when t is at or past the profile's blow-up time.
Vec3 eval_velocity(const SolutionFamily& s, const Vec3& x, double t);
double eval_pressure(const SolutionFamily& s, const Vec3& x, double t);
Vec3 eval_velocity_time_derivative(const SolutionFamily& s, const Vec3& x, double t);
Mat3 eval_velocity_gradient(const SolutionFamily& s, const Vec3& x, double t);
Vec3 eval_velocity_laplacian(const SolutionFamily& s, const Vec3& x, double t);
Vec3 eval_pressure_gradient(const SolutionFamily& s, const Vec3& x, double t);

/// Coefficient of the non-periodic pressure term (x_1+x_2+x_3).
double pressure_linear_coeff(const SolutionFamily& s, double t);
/// Pressure with the linear term removed; periodic in every axis.
double eval_pressure_periodic(const SolutionFamily& s, const Vec3& x, double t);

std::optional<double> blowup_time(const SolutionFamily& s);

struct ValidationItem {
    std::string name;
    double residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

struct ValidationReport {
    std::vector<ValidationItem> items;
    bool passed = true;
};

/// Checks every parameter constraint of the family; for the two-wave family
/// this includes the two implied identities.
ValidationReport validate_params(const SolutionFamily& s);

/// True when every wave of the family sits on integer wavevectors of the
/// unit cube and fits below the grid's Nyquist band.
bool grid_commensurate(const SolutionFamily& s, const Grid3& grid);

VecField3 sample_velocity(const SolutionFamily& s, const Grid3& grid, double t);
VecField3 sample_velocity_time_derivative(const SolutionFamily& s, const Grid3& grid, double t);
VecField3 sample_pressure_gradient(const SolutionFamily& s, const Grid3& grid, double t);
RealField3 sample_pressure_periodic(const SolutionFamily& s, const Grid3& grid, double t);

/// u(.,0) sampled on the grid. Throws std::invalid_argument for
/// grid-incommensurate parameters.
VecField3 initial_field(const SolutionFamily& s, const Grid3& grid);

// Canonical desk-scale instances.
TrigTripleSolution canonical_trig_triple(double nu = 0.01, TimeProfile profile = {});
PlaneWaveSolution canonical_plane_wave(double nu = 0.01, TimeProfile g0_profile = {});
FourierSeriesSolution canonical_fourier_series(double nu = 0.01);
TwoWaveSolution canonical_two_wave(double nu = 0.01);

}  // namespace nselab
