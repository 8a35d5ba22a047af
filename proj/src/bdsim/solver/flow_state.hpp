#pragma once

#include "bdsim/spectral/spectral_field.hpp"

namespace bdsim::solver {

/// The unknowns (omega_hat, theta_hat): both real (Hermitian) mean-zero
/// fields on one grid.
struct FlowState {
  spectral::SpectralField omega;
  spectral::SpectralField theta;
  double time = 0.0;

  FlowState() = default;
  explicit FlowState(spectral::GridPtr grid)
      : omega(grid), theta(std::move(grid)) {}

  const spectral::FourierGrid& grid() const { return omega.grid(); }
  bool all_finite() const { return omega.all_finite() && theta.all_finite(); }
};

}  // namespace bdsim::solver
