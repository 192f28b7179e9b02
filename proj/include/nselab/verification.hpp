#pragma once

#include <optional>
#include <span>
#include <vector>

#include "nselab/families.hpp"
#include "nselab/grid.hpp"
#include "nselab/time_profile.hpp"

namespace nselab {

enum class ResidualMethod { pointwise_closed_form, spectral_grid };

struct ResidualReport {
    double time = 0.0;
    Vec3 linf_momentum_comp{};
    double linf_momentum = 0.0;
    double linf_divergence = 0.0;
    std::optional<double> linf_h_equation;
    std::optional<double> linf_lemma3;
    ResidualMethod method = ResidualMethod::spectral_grid;
};

/// External force: identically zero, or the feedback difference of two
/// trajectories f_i = d/dt u_i - d/dt U_i.
class ForceSpec {
  public:
    static ForceSpec zero() { return ForceSpec(); }
    static ForceSpec feedback_difference(SolutionFamily controlled, SolutionFamily reference);

    bool is_zero() const { return !fb_.has_value(); }
    Vec3 eval(const Vec3& x, double t) const;

  private:
    struct Feedback {
        SolutionFamily controlled;
        SolutionFamily reference;
    };
    ForceSpec() = default;
    std::optional<Feedback> fb_;
};

/// Momentum and divergence residuals of the family on a grid: convective and
/// viscous terms from spectral derivatives of the sampled field, du/dt and
/// grad p from closed form. Requires grid-commensurate parameters.
ResidualReport nse_residual(const SolutionFamily& s, const Grid3& grid, double t,
                            const ForceSpec& force = ForceSpec::zero());

/// Same residual evaluated entirely from closed-form derivatives at arbitrary
/// sample points; works for grid-incommensurate parameters.
ResidualReport nse_residual(const SolutionFamily& s, std::span<const Vec3> points, double t,
                            const ForceSpec& force = ForceSpec::zero());

/// Deterministic quasi-random points in the unit cube for pointwise checks.
std::vector<Vec3> residual_sample_points(int count, unsigned seed = 12345);

/// h_{i,k} = du_i/dx_k - du_k/dx_i, evaluated spectrally. Requires i != k.
RealField3 h_field(const VecField3& u, int i, int k);

struct HEquationReport {
    // Residual fields for the cyclic permutations (1,2,3), (2,3,1), (3,1,2).
    std::array<RealField3, 3> residual;
    double linf = 0.0;
};

/// Residual of the vorticity-component evolution equation, with dh/dt taken
/// from the closed-form du/dt and everything else spectral.
HEquationReport h_equation_residual(const SolutionFamily& s, const Grid3& grid, double t);

/// dh_{i,k}/dx_k + dh_{i,m}/dx_m - lap(u_i); vanishes for divergence-free u.
/// Refuses input whose divergence exceeds 1e-8 in the max norm.
RealField3 lemma3_residual(const VecField3& u, int i);
double lemma3_residual_linf(const VecField3& u);

/// Pressure represented as a periodic field plus coeff * (x_1+x_2+x_3).
struct LinearPressure {
    RealField3 periodic;
    double linear_coeff = 0.0;
};

struct GaugeSnapshot {
    VecField3 velocity;
    LinearPressure pressure;
};

/// The solution-to-solution map u -> u(x + g(t)) - g'(t),
/// p -> p(x + g(t)) + g''(t) (x_1+x_2+x_3) for a profile with g(0)=g'(0)=0.
GaugeSnapshot gauge_transform(const VecField3& u, const RealField3& p_periodic,
                              const TimeProfile& profile, double t);

Vec3 feedback_force_at(const SolutionFamily& u_traj, const SolutionFamily& ref_traj, const Vec3& x,
                       double t);
VecField3 feedback_force(const SolutionFamily& u_traj, const SolutionFamily& ref_traj,
                         const Grid3& grid, double t);

}  // namespace nselab
