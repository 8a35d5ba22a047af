#include "bdsim/energy/functionals.hpp"

#include "bdsim/spectral/operators.hpp"

namespace bdsim::energy {

using spectral::SpectralField;

namespace {

SpectralField repeated_d2(const SpectralField& f, int count) {
  SpectralField out = f;
  for (int i = 0; i < count; ++i) out = spectral::derivative(out, 2);
  return out;
}

bool tail_flagged(const SpectralField& theta, int order) {
  const auto& grid = theta.grid();
  const auto& mask = grid.dealias_mask();
  double kept = 0.0, tail = 0.0;
  for (std::size_t i = 1; i < theta.size(); ++i) {
    const double w = std::pow(grid.k_sq()[i], order);  // |k|^{2*order}
    const double mass = w * std::norm(theta.coeffs()[i]);
    if (mask[i]) {
      kept += mass;
    } else {
      tail += mass;
    }
  }
  const double total = kept + tail;
  return total > 0.0 && tail > 1e-8 * total;
}

SpectralField velocity_u2(const SpectralField& omega) {
  return spectral::biot_savart(omega).second;
}

}  // namespace

FunctionalValue functional_I1(const SpectralField& omega, const SpectralField& theta,
                              int s) {
  const SpectralField d2u2 = spectral::derivative(velocity_u2(omega), 2);
  const SpectralField g = repeated_d2(theta, s + 1);
  FunctionalValue out;
  out.value = spectral::integrate_product({&d2u2, &g, &g});
  out.resolution_flagged = tail_flagged(theta, s + 1);
  return out;
}

FunctionalValue functional_K_integrand(const SpectralField& omega,
                                       const SpectralField& theta, int s) {
  const SpectralField u2 = velocity_u2(omega);
  const SpectralField d2sq = repeated_d2(theta, 2);
  const SpectralField g = repeated_d2(theta, s + 1);
  FunctionalValue out;
  out.value = spectral::integrate_product({&u2, &d2sq, &g, &g});
  out.resolution_flagged = tail_flagged(theta, s + 1);
  return out;
}

}  // namespace bdsim::energy
