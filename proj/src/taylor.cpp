#include "nselab/taylor.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace nselab {

namespace {

// In exact arithmetic every psi_n lives on the set of wavevectors reachable
// as sums of the initial support. Off that set the heat term would only
// amplify transform noise (a factor nu (2 pi k)^2 per order is factorially
// explosive at the band edge), so v_n is masked to the reachable set. For
// broadband data the set saturates and the mask degenerates to the 2/3 band.
struct SupportSet {
    bool full = false;  // whole dealias band
    std::vector<char> mask;
    std::vector<std::size_t> indices;
};

SupportSet full_support() {
    SupportSet s;
    s.full = true;
    return s;
}

SupportSet measure_support(const SpectralVec& f, double rel_threshold = 1e-13) {
    const Grid3& grid = f.grid();
    double peak = 0.0;
    for (int c = 0; c < 3; ++c)
        for (const auto& m : f[c].modes) peak = std::max(peak, std::abs(m));
    SupportSet s;
    s.mask.assign(grid.size(), 0);
    if (peak == 0.0) return s;
    const double cut = rel_threshold * peak;
    for (std::size_t q = 0; q < grid.size(); ++q) {
        for (int c = 0; c < 3; ++c)
            if (std::abs(f[c].modes[q]) > cut) {
                s.mask[q] = 1;
                s.indices.push_back(q);
                break;
            }
    }
    return s;
}

SupportSet minkowski_sum(const SupportSet& a, const SupportSet& b, const Grid3& grid) {
    constexpr std::size_t pair_budget = 4'000'000;
    if (a.full || b.full || a.indices.size() * b.indices.size() > pair_budget)
        return full_support();

    const int n = grid.n;
    const int band = n / 3;
    SupportSet s;
    s.mask.assign(grid.size(), 0);
    auto decode = [n](std::size_t q, int k[3]) {
        k[2] = wavenumber(static_cast<int>(q % n), n);
        k[1] = wavenumber(static_cast<int>((q / n) % n), n);
        k[0] = wavenumber(static_cast<int>(q / (static_cast<std::size_t>(n) * n)), n);
    };
    for (std::size_t qa : a.indices) {
        int ka[3];
        decode(qa, ka);
        for (std::size_t qb : b.indices) {
            int kb[3];
            decode(qb, kb);
            const int k0 = ka[0] + kb[0], k1 = ka[1] + kb[1], k2 = ka[2] + kb[2];
            if (std::abs(k0) > band || std::abs(k1) > band || std::abs(k2) > band) continue;
            const std::size_t q = grid.index(k0 >= 0 ? k0 : k0 + n, k1 >= 0 ? k1 : k1 + n,
                                             k2 >= 0 ? k2 : k2 + n);
            if (!s.mask[q]) {
                s.mask[q] = 1;
                s.indices.push_back(q);
            }
        }
    }
    return s;
}

void unite_into(SupportSet& target, const SupportSet& other) {
    if (target.full) return;
    if (other.full) {
        target = full_support();
        return;
    }
    if (target.mask.empty()) target.mask.assign(other.mask.size(), 0);
    for (std::size_t q : other.indices)
        if (!target.mask[q]) {
            target.mask[q] = 1;
            target.indices.push_back(q);
        }
}

void apply_support(SpectralVec& f, const SupportSet& s) {
    if (s.full) return;
    for (int c = 0; c < 3; ++c)
        for (std::size_t q = 0; q < f[c].modes.size(); ++q)
            if (s.mask.empty() || !s.mask[q]) f[c].modes[q] = 0.0;
}

}  // namespace

SpectralVec nonlinear_convolution(std::span<const SpectralVec> psi,
                                  std::span<const SpectralVec> force_series, int n) {
    if (n < 0 || static_cast<std::size_t>(n) >= psi.size())
        throw std::invalid_argument("nonlinear_convolution: coefficients 0..n required");
    const Grid3 grid = psi[0].grid();

    VecField3 acc(grid);
    for (int m = 0; m <= n; ++m) {
        const VecField3 a = to_physical(psi[m]);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                const RealField3 db = to_physical(partial_derivative(psi[n - m][i], j));
                for (std::size_t q = 0; q < acc[i].values.size(); ++q)
                    acc[i].values[q] += a[j].values[q] * db.values[q];
            }
    }

    SpectralVec v = to_spectral(acc);
    dealias_two_thirds(v);
    if (static_cast<std::size_t>(n) < force_series.size())
        for (int i = 0; i < 3; ++i)
            for (std::size_t q = 0; q < v[i].modes.size(); ++q)
                v[i].modes[q] -= force_series[n][i].modes[q];
    return v;
}

TaylorSeries compute_coefficients(const SpectralVec& u0,
                                  std::span<const SpectralVec> force_series, double nu,
                                  int order) {
    if (order < 0) throw std::invalid_argument("compute_coefficients: order must be >= 0");
    {
        SpectralVec u0_copy = u0;
        const double div_linf = norms(to_physical(divergence(u0_copy))).linf;
        if (div_linf > 1e-10)
            throw std::invalid_argument("compute_coefficients: u0 is not divergence-free");
    }

    const Grid3 grid = u0.grid();
    TaylorSeries series;
    series.order = order;
    series.nu = nu;
    series.psi.reserve(order + 1);
    series.psi.push_back(u0);

    std::vector<SupportSet> supports;
    supports.push_back(measure_support(u0));
    // psi_0 (and every later coefficient) is clipped to its support so the
    // heat term cannot feed on sub-threshold transform junk; this perturbs
    // the stored initial data by at most 1e-13 relative.
    apply_support(series.psi[0], supports[0]);

    auto modes_linf = [](const SpectralVec& f) {
        double peak = 0.0;
        for (int c = 0; c < 3; ++c)
            for (const auto& m : f[c].modes) peak = std::max(peak, std::abs(m));
        return peak;
    };

    for (int n = 0; n < order; ++n) {
        SpectralVec v = nonlinear_convolution(series.psi, force_series, n);
        SupportSet v_support;
        for (int m = 0; m <= n; ++m)
            unite_into(v_support, minkowski_sum(supports[m], supports[n - m], grid));
        if (static_cast<std::size_t>(n) < force_series.size())
            unite_into(v_support, measure_support(force_series[n]));
        apply_support(v, v_support);

        // Split v_n; the removed gradient part defines the pressure via
        // grad p_n = -(v_n - solenoidal(v_n)), keeping the series consistent
        // with the momentum equation's +grad p term.
        const double v_peak = modes_linf(v);
        SpectralScalar pot = leray_project_potential(v);
        for (auto& m : pot.modes) m = -m;
        series.pressure.push_back(std::move(pot));

        // When the nonlinear term is an exact gradient its solenoidal part
        // survives only as transform noise; carried forward, the advection
        // linearization would amplify that noise by ~|u| 2 pi |k| / n per
        // order. Clamp it to the zero it represents.
        const bool solenoidal_is_noise = modes_linf(v) <= 1e-12 * v_peak;
        if (solenoidal_is_noise)
            for (int c = 0; c < 3; ++c)
                for (auto& m : v[c].modes) m = 0.0;

        SpectralVec next = laplacian(series.psi[n]);
        const double inv = 1.0 / (n + 1.0);
        for (int i = 0; i < 3; ++i)
            for (std::size_t q = 0; q < next[i].modes.size(); ++q)
                next[i].modes[q] = (nu * next[i].modes[q] - v[i].modes[q]) * inv;
        // The heat term amplifies any divergence residual of psi_n by
        // nu (2 pi k)^2 / (n+1); re-project so the invariant holds at
        // every order rather than only at the first.
        leray_project(next);
        SupportSet next_support = supports[n];
        if (!solenoidal_is_noise) unite_into(next_support, v_support);
        apply_support(next, next_support);
        series.psi.push_back(std::move(next));
        supports.push_back(std::move(next_support));
    }
    return series;
}

VecField3 evaluate(const TaylorSeries& series, double t) {
    SpectralVec acc = series.psi.back();
    for (int n = static_cast<int>(series.psi.size()) - 2; n >= 0; --n)
        for (int i = 0; i < 3; ++i)
            for (std::size_t q = 0; q < acc[i].modes.size(); ++q)
                acc[i].modes[q] = acc[i].modes[q] * t + series.psi[n][i].modes[q];
    return to_physical(acc);
}

}  // namespace nselab
