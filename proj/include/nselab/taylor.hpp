#pragma once

#include <span>
#include <vector>

#include "nselab/grid.hpp"
#include "nselab/spectral.hpp"

namespace nselab {

/// Time power series u(x,t) = sum_n psi_n(x) t^n with divergence-free
/// coefficients and the periodic pressure potentials p_n of each order.
struct TaylorSeries {
    int order = 0;                         // N; psi holds N+1 coefficients
    std::vector<SpectralVec> psi;
    std::vector<SpectralScalar> pressure;  // p_n with grad p_n = -(gradient part of v_n)
    double nu = 0.0;
};

/// v_n = sum_{m=0}^{n} (psi_m . grad) psi_{n-m} - f_n, with the products
/// formed in physical space and dealiased by the 2/3 rule.
SpectralVec nonlinear_convolution(std::span<const SpectralVec> psi,
                                  std::span<const SpectralVec> force_series, int n);

/// Recursion psi_{n+1} = (nu lap psi_n - solenoidal(v_n)) / (n+1), the mean
/// mode of v_n staying on the solenoidal side. Rejects non-solenoidal u0.
TaylorSeries compute_coefficients(const SpectralVec& u0,
                                  std::span<const SpectralVec> force_series, double nu, int order);

/// Horner evaluation of the partial sum at time t.
VecField3 evaluate(const TaylorSeries& series, double t);

}  // namespace nselab
