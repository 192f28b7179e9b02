#include "nselab/verification.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "nselab/spectral.hpp"

namespace nselab {

ForceSpec ForceSpec::feedback_difference(SolutionFamily controlled, SolutionFamily reference) {
    ForceSpec f;
    f.fb_ = Feedback{std::move(controlled), std::move(reference)};
    return f;
}

Vec3 ForceSpec::eval(const Vec3& x, double t) const {
    if (!fb_) return {0.0, 0.0, 0.0};
    const Vec3 du = eval_velocity_time_derivative(fb_->controlled, x, t);
    const Vec3 dU = eval_velocity_time_derivative(fb_->reference, x, t);
    return {du[0] - dU[0], du[1] - dU[1], du[2] - dU[2]};
}

ResidualReport nse_residual(const SolutionFamily& s, const Grid3& grid, double t,
                            const ForceSpec& force) {
    if (!grid_commensurate(s, grid))
        throw std::invalid_argument("nse_residual: family is not grid-commensurate; use points");

    const double nu = family_viscosity(s);
    const VecField3 u = sample_velocity(s, grid, t);
    const SpectralVec U = to_spectral(u);
    const VecField3 dudt = sample_velocity_time_derivative(s, grid, t);
    const VecField3 grad_p = sample_pressure_gradient(s, grid, t);

    ResidualReport rep;
    rep.time = t;
    rep.method = ResidualMethod::spectral_grid;

    for (int i = 0; i < 3; ++i) {
        RealField3 r = dudt[i];
        for (int j = 0; j < 3; ++j) {
            const RealField3 dui_dxj = to_physical(partial_derivative(U[i], j));
            for (std::size_t q = 0; q < r.values.size(); ++q)
                r.values[q] += u[j].values[q] * dui_dxj.values[q];
        }
        const RealField3 lap = to_physical(laplacian(U[i]));
        for (std::size_t q = 0; q < r.values.size(); ++q)
            r.values[q] += -nu * lap.values[q] + grad_p[i].values[q];
        if (!force.is_zero()) {
            const Grid3& g = grid;
            std::size_t q = 0;
            for (int i1 = 0; i1 < g.n; ++i1)
                for (int i2 = 0; i2 < g.n; ++i2)
                    for (int i3 = 0; i3 < g.n; ++i3, ++q)
                        r.values[q] -= force.eval(g.point(i1, i2, i3), t)[i];
        }
        rep.linf_momentum_comp[i] = norms(r).linf;
        rep.linf_momentum = std::max(rep.linf_momentum, rep.linf_momentum_comp[i]);
    }

    rep.linf_divergence = norms(to_physical(divergence(U))).linf;
    return rep;
}

ResidualReport nse_residual(const SolutionFamily& s, std::span<const Vec3> points, double t,
                            const ForceSpec& force) {
    const double nu = family_viscosity(s);
    ResidualReport rep;
    rep.time = t;
    rep.method = ResidualMethod::pointwise_closed_form;

    for (const Vec3& x : points) {
        const Vec3 u = eval_velocity(s, x, t);
        const Vec3 dudt = eval_velocity_time_derivative(s, x, t);
        const Mat3 grad = eval_velocity_gradient(s, x, t);
        const Vec3 lap = eval_velocity_laplacian(s, x, t);
        const Vec3 grad_p = eval_pressure_gradient(s, x, t);
        const Vec3 f = force.eval(x, t);
        double div = 0.0;
        for (int i = 0; i < 3; ++i) {
            double r = dudt[i] - nu * lap[i] + grad_p[i] - f[i];
            for (int j = 0; j < 3; ++j) r += u[j] * grad[i][j];
            rep.linf_momentum_comp[i] = std::max(rep.linf_momentum_comp[i], std::abs(r));
            div += grad[i][i];
        }
        rep.linf_divergence = std::max(rep.linf_divergence, std::abs(div));
    }
    for (int i = 0; i < 3; ++i)
        rep.linf_momentum = std::max(rep.linf_momentum, rep.linf_momentum_comp[i]);
    return rep;
}

std::vector<Vec3> residual_sample_points(int count, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<Vec3> points(count);
    for (auto& p : points) p = {unit(rng), unit(rng), unit(rng)};
    return points;
}

RealField3 h_field(const VecField3& u, int i, int k) {
    if (i == k || i < 0 || k < 0 || i > 2 || k > 2)
        throw std::invalid_argument("h_field: indices must be distinct and in 0..2");
    const SpectralScalar di = partial_derivative(to_spectral(u[i]), k);
    const SpectralScalar dk = partial_derivative(to_spectral(u[k]), i);
    SpectralScalar h(u.grid());
    for (std::size_t q = 0; q < h.modes.size(); ++q) h.modes[q] = di.modes[q] - dk.modes[q];
    return to_physical(h);
}

HEquationReport h_equation_residual(const SolutionFamily& s, const Grid3& grid, double t) {
    if (!grid_commensurate(s, grid))
        throw std::invalid_argument("h_equation_residual: family is not grid-commensurate");

    const double nu = family_viscosity(s);
    const VecField3 u = sample_velocity(s, grid, t);
    const SpectralVec U = to_spectral(u);
    const SpectralVec Udot = to_spectral(sample_velocity_time_derivative(s, grid, t));

    std::array<std::array<RealField3, 3>, 3> dudx;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) dudx[i][j] = to_physical(partial_derivative(U[i], j));

    HEquationReport rep;
    const std::array<std::array<int, 3>, 3> perms = {{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}};
    for (int p = 0; p < 3; ++p) {
        const int i = perms[p][0], k = perms[p][1], m = perms[p][2];

        SpectralScalar h_hat(grid);
        {
            const SpectralScalar a = partial_derivative(U[i], k);
            const SpectralScalar b = partial_derivative(U[k], i);
            for (std::size_t q = 0; q < h_hat.modes.size(); ++q)
                h_hat.modes[q] = a.modes[q] - b.modes[q];
        }
        RealField3 dh_dt(grid);
        {
            const SpectralScalar a = partial_derivative(Udot[i], k);
            const SpectralScalar b = partial_derivative(Udot[k], i);
            SpectralScalar d(grid);
            for (std::size_t q = 0; q < d.modes.size(); ++q) d.modes[q] = a.modes[q] - b.modes[q];
            dh_dt = to_physical(d);
        }

        const RealField3 h = to_physical(h_hat);
        const RealField3 lap_h = to_physical(laplacian(h_hat));

        RealField3 res = dh_dt;
        for (int j = 0; j < 3; ++j) {
            const RealField3 dh_dxj = to_physical(partial_derivative(h_hat, j));
            for (std::size_t q = 0; q < res.values.size(); ++q)
                res.values[q] += u[j].values[q] * dh_dxj.values[q];
        }
        for (std::size_t q = 0; q < res.values.size(); ++q) {
            res.values[q] -= nu * lap_h.values[q];
            res.values[q] -= dudx[m][m].values[q] * h.values[q] -
                             dudx[m][k].values[q] * dudx[i][m].values[q] +
                             dudx[m][i].values[q] * dudx[k][m].values[q];
        }
        rep.linf = std::max(rep.linf, norms(res).linf);
        rep.residual[p] = std::move(res);
    }
    return rep;
}

RealField3 lemma3_residual(const VecField3& u, int i) {
    if (i < 0 || i > 2) throw std::invalid_argument("lemma3_residual: i must be in 0..2");
    const double div_linf = norms(divergence(u)).linf;
    if (div_linf > 1e-8)
        throw std::invalid_argument("lemma3_residual: input is not divergence-free");

    const int k = (i + 1) % 3, m = (i + 2) % 3;
    const SpectralScalar ui = to_spectral(u[i]);
    const SpectralScalar uk = to_spectral(u[k]);
    const SpectralScalar um = to_spectral(u[m]);

    auto h_hat = [](const SpectralScalar& a, const SpectralScalar& b, int da, int db) {
        SpectralScalar out = partial_derivative(a, da);
        const SpectralScalar second = partial_derivative(b, db);
        for (std::size_t q = 0; q < out.modes.size(); ++q) out.modes[q] -= second.modes[q];
        return out;
    };
    const SpectralScalar h_ik = h_hat(ui, uk, k, i);
    const SpectralScalar h_im = h_hat(ui, um, m, i);

    SpectralScalar res = partial_derivative(h_ik, k);
    const SpectralScalar dm = partial_derivative(h_im, m);
    const SpectralScalar lap = laplacian(ui);
    for (std::size_t q = 0; q < res.modes.size(); ++q)
        res.modes[q] += dm.modes[q] - lap.modes[q];
    return to_physical(res);
}

double lemma3_residual_linf(const VecField3& u) {
    double linf = 0.0;
    for (int i = 0; i < 3; ++i) linf = std::max(linf, norms(lemma3_residual(u, i)).linf);
    return linf;
}

GaugeSnapshot gauge_transform(const VecField3& u, const RealField3& p_periodic,
                              const TimeProfile& profile, double t) {
    const ProfileValues pv = profile.eval(t);
    const Vec3 offset = {pv.g, pv.g, pv.g};
    GaugeSnapshot out;
    out.velocity = phase_shift(u, offset);
    for (int c = 0; c < 3; ++c)
        for (double& v : out.velocity[c].values) v -= pv.dg;
    out.pressure.periodic = phase_shift(p_periodic, offset);
    out.pressure.linear_coeff = pv.d2g;
    return out;
}

Vec3 feedback_force_at(const SolutionFamily& u_traj, const SolutionFamily& ref_traj, const Vec3& x,
                       double t) {
    const Vec3 du = eval_velocity_time_derivative(u_traj, x, t);
    const Vec3 dU = eval_velocity_time_derivative(ref_traj, x, t);
    return {du[0] - dU[0], du[1] - dU[1], du[2] - dU[2]};
}

VecField3 feedback_force(const SolutionFamily& u_traj, const SolutionFamily& ref_traj,
                         const Grid3& grid, double t) {
    return sample_vector(grid,
                         [&](const Vec3& x) { return feedback_force_at(u_traj, ref_traj, x, t); });
}

}  // namespace nselab
