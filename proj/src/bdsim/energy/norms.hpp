#pragma once

#include "bdsim/spectral/spectral_field.hpp"

namespace bdsim::energy {

enum class NormVariant { full, partial_x1 };

struct NormSpec {
  double order = 0.0;
  bool homogeneous = true;
  NormVariant variant = NormVariant::full;
};

/// Parseval evaluation. Homogeneous: L * sqrt(sum |k|^{2 order} |fhat|^2)
/// (mean mode annihilated unless order == 0); inhomogeneous (order > 0):
/// ||f||_{L2} + ||Lambda^order f||_{L2}. The partial_x1 variant measures
/// the same norm of d1(f), i.e. inserts a |k1|^2 weight.
double sobolev_norm(const spectral::SpectralField& f, const NormSpec& spec);

/// calH = Hdot^{-1} intersect Hdot^s, bbH = Hdot^{-2} intersect Hdot^s;
/// intersection norm taken as the root sum of squares of the two seminorms.
enum class CompositeSpace { calH, bbH };

double space_norm(const spectral::SpectralField& f, CompositeSpace space, int s);

/// sum_k |fhat(k)|, an upper bound for the sup norm of f.
double linf_proxy(const spectral::SpectralField& f);

/// Max |f| over the collocation samples (a lower bound for the true sup).
double grid_max(const spectral::SpectralField& f);

/// L4 norm by quadrature on the oversampled grid.
double grid_l4(const spectral::SpectralField& f);

}  // namespace bdsim::energy
