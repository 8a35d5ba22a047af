#pragma once

#include <initializer_list>
#include <utility>

#include "bdsim/spectral/spectral_field.hpp"

namespace bdsim::spectral {

enum class DealiasMode { masked, padded };

/// Lambda^alpha f: multiplier |k|^alpha, k = 0 annihilated for alpha != 0.
/// Negative alpha requires a mean-zero field.
SpectralField apply_fractional_laplacian(const SpectralField& f, double alpha);

/// d/dx_axis, axis in {1, 2}: multiplier i*k_axis.
SpectralField derivative(const SpectralField& f, int axis);

/// u = (d2, -d1) Lambda^{-2} omega. Divergence-free by construction:
/// i k1 u1hat + i k2 u2hat = 0 holds exactly in coefficients.
std::pair<SpectralField, SpectralField> biot_savart(const SpectralField& omega);

/// Pointwise product f*g. `padded` evaluates on the 3N/2 grid and truncates
/// (alias-free for mask-retained inputs); `masked` applies the two-thirds
/// mask to the inputs and multiplies on the native grid.
SpectralField dealiased_product(const SpectralField& f, const SpectralField& g,
                                DealiasMode mode);

/// u1 d1(f) + u2 d2(f).
SpectralField advection(const SpectralField& u1, const SpectralField& u2,
                        const SpectralField& f, DealiasMode mode);

/// Integral over the torus of the pointwise product of all fields, evaluated
/// on the 2N quadrature grid: exact whenever the summed bandwidth of the
/// factors stays below 2N (e.g. up to four mask-retained factors).
double integrate_product(std::initializer_list<const SpectralField*> fields);

/// L2 inner product (f | g) = L^2 sum_k fhat conj(ghat), real part.
double inner_product(const SpectralField& f, const SpectralField& g);

/// Collocation samples of f on the 2N quadrature grid.
RealVec oversampled_samples(const SpectralField& f);

}  // namespace bdsim::spectral
