#pragma once

#include "bdsim/solver/config.hpp"
#include "bdsim/solver/flow_state.hpp"

namespace bdsim::solver {

/// Deterministic in the seed. Output is mean-zero, Hermitian, band-limited
/// to the dealias mask, and scaled so that the discrete
/// A(0) = ||omega||_{bbH^s}^2 + ||theta||_{calH^{s+1}}^2 equals amplitude^2.
FlowState generate_initial(const InitialDataSpec& spec, spectral::GridPtr grid,
                           int sobolev_s);

}  // namespace bdsim::solver
