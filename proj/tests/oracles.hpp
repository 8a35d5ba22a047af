#pragma once

#include <functional>

#include "bdsim/spectral/spectral_field.hpp"

namespace bdsim::testing {

/// O(N^4) direct convolution over integer frequencies: h(k) = sum f(p) g(k-p)
/// for every retained mode of the native grid. Independent of the FFT
/// product path it checks.
spectral::SpectralField direct_convolution(const spectral::SpectralField& f,
                                           const spectral::SpectralField& g);

/// Trapezoidal quadrature of a closed-form integrand over the torus [0, L)^2
/// on an M x M sample grid (exact for trigonometric polynomials of degree
/// below M).
double quadrature_2d(const std::function<double(double, double)>& f, double period,
                     int samples);

/// Random mean-zero Hermitian field, band-limited to the dealias mask.
spectral::SpectralField random_field(spectral::GridPtr grid, std::uint64_t seed,
                                     int band_hi = 0, double decay = 1.0);

}  // namespace bdsim::testing
