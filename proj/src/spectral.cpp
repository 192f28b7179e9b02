#include "nselab/spectral.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace nselab {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

// FFTW planning is not thread-safe; executing a cached plan on fresh arrays
// is. Plans are created unaligned so they run on plain vector storage.
class PlanCache {
  public:
    static PlanCache& instance() {
        static PlanCache cache;
        return cache;
    }

    fftw_plan forward(int n) { return get(n).first; }
    fftw_plan backward(int n) { return get(n).second; }

  private:
    std::pair<fftw_plan, fftw_plan> get(int n) {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = plans_.find(n);
        if (it != plans_.end()) return it->second;
        std::vector<std::complex<double>> a(static_cast<std::size_t>(n) * n * n);
        std::vector<std::complex<double>> b(a.size());
        auto* ap = reinterpret_cast<fftw_complex*>(a.data());
        auto* bp = reinterpret_cast<fftw_complex*>(b.data());
        unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
        fftw_plan fwd = fftw_plan_dft_3d(n, n, n, ap, bp, FFTW_FORWARD, flags);
        fftw_plan bwd = fftw_plan_dft_3d(n, n, n, ap, bp, FFTW_BACKWARD, flags);
        if (!fwd || !bwd) throw std::runtime_error("fftw plan creation failed");
        auto pair = std::make_pair(fwd, bwd);
        plans_[n] = pair;
        return pair;
    }

    std::mutex mu_;
    std::map<int, std::pair<fftw_plan, fftw_plan>> plans_;
};

void execute(fftw_plan plan, std::vector<std::complex<double>>& in,
             std::vector<std::complex<double>>& out) {
    fftw_execute_dft(plan, reinterpret_cast<fftw_complex*>(in.data()),
                     reinterpret_cast<fftw_complex*>(out.data()));
}

}  // namespace

std::complex<double> SpectralScalar::mode(int k1, int k2, int k3) const {
    const int n = grid.n;
    auto slot = [n](int k) { return k >= 0 ? k : k + n; };
    return modes[grid.index(slot(k1), slot(k2), slot(k3))];
}

SpectralScalar to_spectral(const RealField3& f) {
    const int n = f.grid.n;
    for (double v : f.values)
        if (!std::isfinite(v)) throw std::invalid_argument("to_spectral: non-finite input");
    std::vector<std::complex<double>> in(f.values.begin(), f.values.end());
    SpectralScalar out(f.grid);
    execute(PlanCache::instance().forward(n), in, out.modes);
    const double scale = 1.0 / static_cast<double>(f.grid.size());
    for (auto& m : out.modes) m *= scale;
    return out;
}

RealField3 to_physical(const SpectralScalar& F) {
    std::vector<std::complex<double>> in = F.modes;
    std::vector<std::complex<double>> out(in.size());
    execute(PlanCache::instance().backward(F.grid.n), in, out);
    RealField3 f(F.grid);
    for (std::size_t i = 0; i < out.size(); ++i) f.values[i] = out[i].real();
    return f;
}

SpectralVec to_spectral(const VecField3& u) {
    SpectralVec out;
    for (int c = 0; c < 3; ++c) out.comp[c] = to_spectral(u[c]);
    return out;
}

VecField3 to_physical(const SpectralVec& U) {
    return VecField3(to_physical(U[0]), to_physical(U[1]), to_physical(U[2]));
}

SpectralScalar partial_derivative(const SpectralScalar& F, int axis) {
    if (axis < 0 || axis > 2) throw std::invalid_argument("partial_derivative: axis out of range");
    const int n = F.grid.n;
    SpectralScalar out(F.grid);
    std::size_t idx = 0;
    for (int m1 = 0; m1 < n; ++m1)
        for (int m2 = 0; m2 < n; ++m2)
            for (int m3 = 0; m3 < n; ++m3, ++idx) {
                const int m = axis == 0 ? m1 : axis == 1 ? m2 : m3;
                if (m == n / 2) continue;  // Nyquist-safe
                const double k = wavenumber(m, n);
                out.modes[idx] = F.modes[idx] * std::complex<double>(0.0, two_pi * k);
            }
    return out;
}

SpectralScalar laplacian(const SpectralScalar& F) {
    const int n = F.grid.n;
    SpectralScalar out(F.grid);
    std::size_t idx = 0;
    for (int m1 = 0; m1 < n; ++m1) {
        const double k1 = wavenumber(m1, n);
        for (int m2 = 0; m2 < n; ++m2) {
            const double k2 = wavenumber(m2, n);
            for (int m3 = 0; m3 < n; ++m3, ++idx) {
                const double k3 = wavenumber(m3, n);
                out.modes[idx] = F.modes[idx] * (-two_pi * two_pi * (k1 * k1 + k2 * k2 + k3 * k3));
            }
        }
    }
    return out;
}

SpectralVec laplacian(const SpectralVec& U) {
    SpectralVec out;
    for (int c = 0; c < 3; ++c) out.comp[c] = laplacian(U[c]);
    return out;
}

SpectralScalar divergence(const SpectralVec& U) {
    SpectralScalar out(U.grid());
    for (int c = 0; c < 3; ++c) {
        SpectralScalar d = partial_derivative(U[c], c);
        for (std::size_t i = 0; i < out.modes.size(); ++i) out.modes[i] += d.modes[i];
    }
    return out;
}

RealField3 divergence(const VecField3& u) { return to_physical(divergence(to_spectral(u))); }

namespace {

// Wavevector as seen by the derivative convention: Nyquist slots act as k=0.
inline double effective_wavenumber(int m, int n) {
    return m == n / 2 ? 0.0 : static_cast<double>(wavenumber(m, n));
}

}  // namespace

void leray_project(SpectralVec& U) {
    const int n = U.grid().n;
    std::size_t idx = 0;
    for (int m1 = 0; m1 < n; ++m1) {
        const double k1 = effective_wavenumber(m1, n);
        for (int m2 = 0; m2 < n; ++m2) {
            const double k2 = effective_wavenumber(m2, n);
            for (int m3 = 0; m3 < n; ++m3, ++idx) {
                const double k3 = effective_wavenumber(m3, n);
                const double k_sq = k1 * k1 + k2 * k2 + k3 * k3;
                if (k_sq == 0.0) continue;  // mean flow stays
                const std::complex<double> k_dot_u =
                    k1 * U[0].modes[idx] + k2 * U[1].modes[idx] + k3 * U[2].modes[idx];
                const std::complex<double> d = k_dot_u / k_sq;
                U[0].modes[idx] -= k1 * d;
                U[1].modes[idx] -= k2 * d;
                U[2].modes[idx] -= k3 * d;
            }
        }
    }
}

SpectralScalar leray_project_potential(SpectralVec& U) {
    const int n = U.grid().n;
    SpectralScalar pot(U.grid());
    std::size_t idx = 0;
    for (int m1 = 0; m1 < n; ++m1) {
        const double k1 = effective_wavenumber(m1, n);
        for (int m2 = 0; m2 < n; ++m2) {
            const double k2 = effective_wavenumber(m2, n);
            for (int m3 = 0; m3 < n; ++m3, ++idx) {
                const double k3 = effective_wavenumber(m3, n);
                const double k_sq = k1 * k1 + k2 * k2 + k3 * k3;
                if (k_sq == 0.0) continue;
                const std::complex<double> k_dot_u =
                    k1 * U[0].modes[idx] + k2 * U[1].modes[idx] + k3 * U[2].modes[idx];
                const std::complex<double> d = k_dot_u / k_sq;
                U[0].modes[idx] -= k1 * d;
                U[1].modes[idx] -= k2 * d;
                U[2].modes[idx] -= k3 * d;
                // grad = i*2*pi*k * pot per mode
                pot.modes[idx] = d / std::complex<double>(0.0, two_pi);
            }
        }
    }
    return pot;
}

LeraySplit leray_split(const VecField3& u) {
    SpectralVec sol = to_spectral(u);
    const SpectralVec full = sol;
    const SpectralScalar pot = leray_project_potential(sol);
    SpectralVec grad(u.grid());
    for (int c = 0; c < 3; ++c)
        for (std::size_t q = 0; q < grad[c].modes.size(); ++q)
            grad[c].modes[q] = full[c].modes[q] - sol[c].modes[q];
    return LeraySplit{to_physical(sol), to_physical(grad), to_physical(pot)};
}

SpectralScalar phase_shift(const SpectralScalar& F, const Vec3& offset) {
    const int n = F.grid.n;
    SpectralScalar out(F.grid);
    std::size_t idx = 0;
    for (int m1 = 0; m1 < n; ++m1) {
        const double k1 = wavenumber(m1, n);
        for (int m2 = 0; m2 < n; ++m2) {
            const double k2 = wavenumber(m2, n);
            for (int m3 = 0; m3 < n; ++m3, ++idx) {
                const double k3 = wavenumber(m3, n);
                const double phase = two_pi * (k1 * offset[0] + k2 * offset[1] + k3 * offset[2]);
                out.modes[idx] = F.modes[idx] * std::polar(1.0, phase);
            }
        }
    }
    return out;
}

RealField3 phase_shift(const RealField3& f, const Vec3& offset) {
    return to_physical(phase_shift(to_spectral(f), offset));
}

VecField3 phase_shift(const VecField3& u, const Vec3& offset) {
    return VecField3(phase_shift(u[0], offset), phase_shift(u[1], offset),
                     phase_shift(u[2], offset));
}

void dealias_two_thirds(SpectralScalar& F) {
    const int n = F.grid.n;
    const int k_max = n / 3;
    std::size_t idx = 0;
    for (int m1 = 0; m1 < n; ++m1) {
        const int k1 = std::abs(wavenumber(m1, n));
        for (int m2 = 0; m2 < n; ++m2) {
            const int k2 = std::abs(wavenumber(m2, n));
            for (int m3 = 0; m3 < n; ++m3, ++idx) {
                const int k3 = std::abs(wavenumber(m3, n));
                if (k1 > k_max || k2 > k_max || k3 > k_max) F.modes[idx] = 0.0;
            }
        }
    }
}

void dealias_two_thirds(SpectralVec& U) {
    for (int c = 0; c < 3; ++c) dealias_two_thirds(U[c]);
}

double mean_square(const SpectralVec& U) {
    double sum = 0.0;
    for (int c = 0; c < 3; ++c)
        for (const auto& m : U[c].modes) sum += std::norm(m);
    return sum;
}

}  // namespace nselab
