#pragma once

#include "bdsim/spectral/spectral_field.hpp"

namespace bdsim::energy {

struct FunctionalValue {
  double value = 0.0;
  /// Set when the tail of theta beyond the dealias mask carries more than
  /// 1e-8 of its Hdot^{s+1} mass, i.e. the order-(s+1) derivative is no
  /// longer resolved.
  bool resolution_flagged = false;
};

/// I1 = integral of d2(u2) * (d2^{s+1} theta)^2 dx, u2 recovered from omega.
FunctionalValue functional_I1(const spectral::SpectralField& omega,
                              const spectral::SpectralField& theta, int s);

/// Integrand of frakK(T): integral of u2 * d2^2(theta) * (d2^{s+1} theta)^2 dx.
FunctionalValue functional_K_integrand(const spectral::SpectralField& omega,
                                       const spectral::SpectralField& theta, int s);

}  // namespace bdsim::energy
