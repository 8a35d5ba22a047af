#include "bdsim/energy/norms.hpp"

#include <cmath>

#include "bdsim/kernels/mode_kernels.hpp"
#include "bdsim/spectral/operators.hpp"

namespace bdsim::energy {

using spectral::SpectralField;

namespace {

double homogeneous_norm(const SpectralField& f, double order, NormVariant variant) {
  const auto& grid = f.grid();
  RealVec w(grid.size());
  const double half = 0.5 * order;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const double ksq = grid.k_sq()[i];
    double weight;
    if (ksq == 0.0) {
      weight = order == 0.0 ? 1.0 : 0.0;
    } else {
      weight = order == 0.0 ? 1.0 : std::pow(ksq, half);
    }
    if (variant == NormVariant::partial_x1) {
      weight *= grid.k1()[i] * grid.k1()[i];
    }
    w[i] = weight;
  }
  const double sum =
      kernels::active_kernels().weighted_norm_sq(f.coeffs().data(), w.data(), f.size());
  return grid.period() * std::sqrt(sum);
}

}  // namespace

double sobolev_norm(const SpectralField& f, const NormSpec& spec) {
  if (spec.homogeneous) {
    if (spec.order < 0.0 && !f.is_mean_zero()) {
      throw InvalidInput("negative homogeneous order on a non-mean-zero field");
    }
    return homogeneous_norm(f, spec.order, spec.variant);
  }
  if (!(spec.order > 0.0)) {
    throw InvalidInput("inhomogeneous Sobolev norm requires positive order");
  }
  return homogeneous_norm(f, 0.0, spec.variant) +
         homogeneous_norm(f, spec.order, spec.variant);
}

double space_norm(const SpectralField& f, CompositeSpace space, int s) {
  if (!f.is_mean_zero()) {
    throw InvalidInput("composite space norm requires a mean-zero field");
  }
  const double neg = homogeneous_norm(f, space == CompositeSpace::calH ? -1.0 : -2.0,
                                      NormVariant::full);
  const double high = homogeneous_norm(f, static_cast<double>(s), NormVariant::full);
  return std::sqrt(neg * neg + high * high);
}

double linf_proxy(const spectral::SpectralField& f) {
  return kernels::active_kernels().abs_sum(f.coeffs().data(), f.size());
}

double grid_max(const spectral::SpectralField& f) {
  const RealVec samples = spectral::to_physical(f);
  double worst = 0.0;
  for (double v : samples) worst = std::max(worst, std::abs(v));
  return worst;
}

double grid_l4(const spectral::SpectralField& f) {
  const RealVec samples = spectral::oversampled_samples(f);
  double sum = 0.0;
  for (double v : samples) {
    const double sq = v * v;
    sum += sq * sq;
  }
  const double l = f.grid().period();
  return std::pow(sum * l * l / static_cast<double>(samples.size()), 0.25);
}

}  // namespace bdsim::energy
