#pragma once

#include <complex>
#include <vector>

#include "nselab/grid.hpp"

namespace nselab {

/// Fourier modes of a real scalar field. Storage follows FFT order: the
/// entry at (m1,m2,m3) holds wavevector k_a = m_a for m_a < n/2 and
/// k_a = m_a - n otherwise, so k ranges over [-n/2, n/2)^3. The field is
/// f(x) = sum_k modes[k] exp(2*pi*i k.x) on the unit cube.
struct SpectralScalar {
    Grid3 grid;
    std::vector<std::complex<double>> modes;

    SpectralScalar() = default;
    explicit SpectralScalar(const Grid3& g) : grid(g), modes(g.size()) {}

    std::complex<double>& at(int m1, int m2, int m3) { return modes[grid.index(m1, m2, m3)]; }
    const std::complex<double>& at(int m1, int m2, int m3) const {
        return modes[grid.index(m1, m2, m3)];
    }
    /// Mode lookup by signed wavevector components in [-n/2, n/2).
    std::complex<double> mode(int k1, int k2, int k3) const;
};

struct SpectralVec {
    std::array<SpectralScalar, 3> comp;

    SpectralVec() = default;
    explicit SpectralVec(const Grid3& g) : comp{SpectralScalar(g), SpectralScalar(g), SpectralScalar(g)} {}

    const Grid3& grid() const { return comp[0].grid; }
    SpectralScalar& operator[](int i) { return comp[i]; }
    const SpectralScalar& operator[](int i) const { return comp[i]; }
};

/// Signed wavenumber for FFT storage slot m on an n-point axis.
inline int wavenumber(int m, int n) { return m < n / 2 ? m : m - n; }

SpectralScalar to_spectral(const RealField3& f);
RealField3 to_physical(const SpectralScalar& F);
SpectralVec to_spectral(const VecField3& u);
VecField3 to_physical(const SpectralVec& U);

/// d/dx_axis in Fourier space: mode k -> i*2*pi*k_axis * mode. The Nyquist
/// slot k = -n/2 is zeroed so derivatives of real fields stay real.
SpectralScalar partial_derivative(const SpectralScalar& F, int axis);
SpectralScalar laplacian(const SpectralScalar& F);
SpectralVec laplacian(const SpectralVec& U);

SpectralScalar divergence(const SpectralVec& U);
RealField3 divergence(const VecField3& u);

struct LeraySplit {
    VecField3 solenoidal;
    VecField3 gradient_part;
    RealField3 potential;  // gradient_part = grad(potential); zero-mean
};

/// Helmholtz/Leray decomposition. The k=0 mode goes to the solenoidal part
/// (a spatial constant is divergence-free); axes sitting on the Nyquist slot
/// are treated as zero wavenumber, matching the derivative convention.
LeraySplit leray_split(const VecField3& u);
/// In-place projection onto the divergence-free subspace.
void leray_project(SpectralVec& U);
/// Same projection, returning the zero-mean potential of the removed
/// gradient part.
SpectralScalar leray_project_potential(SpectralVec& U);

/// x -> u(x + offset) via per-mode phase factors; exact for band-limited fields.
SpectralScalar phase_shift(const SpectralScalar& F, const Vec3& offset);
RealField3 phase_shift(const RealField3& f, const Vec3& offset);
VecField3 phase_shift(const VecField3& u, const Vec3& offset);

/// Zero every mode with |k_axis| > floor(n/3) on some axis (2/3 rule).
void dealias_two_thirds(SpectralScalar& F);
void dealias_two_thirds(SpectralVec& U);

/// Parseval sum over all modes and components; equals the mean of |u|^2.
double mean_square(const SpectralVec& U);

}  // namespace nselab
