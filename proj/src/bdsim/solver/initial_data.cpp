#include "bdsim/solver/initial_data.hpp"

#include <cmath>
#include <random>

#include "bdsim/energy/norms.hpp"
#include "bdsim/io/snapshot.hpp"
#include "bdsim/semigroup/eigen_system.hpp"

namespace bdsim::solver {

namespace {

bool region_admits(RegionFilter filter, int m1, int m2) {
  if (filter == RegionFilter::all) return true;
  const semigroup::ModeRegion r = semigroup::classify(m1, m2);
  switch (filter) {
    case RegionFilter::d1: return r == semigroup::ModeRegion::D1;
    case RegionFilter::d2: return r == semigroup::ModeRegion::D2;
    case RegionFilter::d3: return r == semigroup::ModeRegion::D3;
    default: return true;
  }
}

double discrete_a0(const FlowState& state, int s) {
  const double w = energy::space_norm(state.omega, energy::CompositeSpace::bbH, s);
  const double t = energy::space_norm(state.theta, energy::CompositeSpace::calH, s + 1);
  return w * w + t * t;
}

void scale_state(FlowState& state, double factor) {
  for (Complex& c : state.omega.coeffs()) c *= factor;
  for (Complex& c : state.theta.coeffs()) c *= factor;
}

FlowState single_mode_state(const InitialDataSpec& spec, spectral::GridPtr grid) {
  const int m1 = spec.band_lo;
  const int m2 = spec.band_hi;
  if (m1 == 0 && m2 == 0) throw InvalidInput("single_mode: mode must be nonzero");
  const int n = grid->n();
  if (3 * std::abs(m1) > n || 3 * std::abs(m2) > n) {
    throw InvalidInput("single_mode: mode outside the dealias mask");
  }
  FlowState state(std::move(grid));
  state.theta.mode(m1, m2) = Complex{0.5, 0.0};
  state.theta.mode(-m1, -m2) = Complex{0.5, 0.0};
  return state;  // theta = cos(m.x * 2pi/L), omega = 0
}

FlowState random_band_state(const InitialDataSpec& spec, spectral::GridPtr grid) {
  if (spec.band_lo > spec.band_hi || spec.band_hi < 1) {
    throw InvalidInput("random_band: empty band");
  }
  const int n = grid->n();
  if (3 * spec.band_hi > n) {
    throw InvalidInput("random_band: band extends beyond the dealias mask");
  }
  FlowState state(std::move(grid));
  std::mt19937_64 rng(spec.seed);
  std::normal_distribution<double> normal(0.0, 1.0);

  // Half lattice in a fixed order; conjugate partners mirror each draw.
  std::size_t populated = 0;
  for (int m1 = 0; m1 <= spec.band_hi; ++m1) {
    const int m2_begin = m1 == 0 ? 1 : -spec.band_hi;
    for (int m2 = m2_begin; m2 <= spec.band_hi; ++m2) {
      const double mag = std::hypot(m1, m2);
      if (mag < spec.band_lo || mag > spec.band_hi) continue;
      if (!region_admits(spec.region, m1, m2)) continue;
      const double damp = std::exp(-spec.spectral_decay * mag);
      const Complex w{damp * normal(rng), damp * normal(rng)};
      const Complex t{damp * normal(rng), damp * normal(rng)};
      state.omega.mode(m1, m2) = w;
      state.omega.mode(-m1, -m2) = std::conj(w);
      state.theta.mode(m1, m2) = t;
      state.theta.mode(-m1, -m2) = std::conj(t);
      ++populated;
    }
  }
  if (populated == 0) throw InvalidInput("random_band: band contains no modes");
  return state;
}

FlowState file_state(const InitialDataSpec& spec, spectral::GridPtr grid) {
  io::Snapshot snap = io::read_snapshot(spec.file);
  if (snap.fields.size() != 2) {
    throw InvalidInput("snapshot must hold exactly two fields (omega, theta)");
  }
  if (snap.grid->n() != grid->n() || snap.grid->period() != grid->period()) {
    throw InvalidInput("snapshot grid does not match the configured grid");
  }
  FlowState state(std::move(grid));
  std::copy(snap.fields[0].coeffs().begin(), snap.fields[0].coeffs().end(),
            state.omega.coeffs().begin());
  std::copy(snap.fields[1].coeffs().begin(), snap.fields[1].coeffs().end(),
            state.theta.coeffs().begin());
  state.omega.project_mean_zero();
  state.theta.project_mean_zero();
  state.omega.symmetrize();
  state.theta.symmetrize();
  return state;
}

}  // namespace

FlowState generate_initial(const InitialDataSpec& spec, spectral::GridPtr grid,
                           int sobolev_s) {
  if (spec.amplitude < 0.0) throw InvalidInput("amplitude must be nonnegative");

  FlowState state;
  switch (spec.kind) {
    case InitKind::single_mode: state = single_mode_state(spec, std::move(grid)); break;
    case InitKind::random_band: state = random_band_state(spec, std::move(grid)); break;
    case InitKind::file: state = file_state(spec, std::move(grid)); break;
  }
  state.omega.apply_dealias_mask();
  state.theta.apply_dealias_mask();
  state.time = 0.0;

  if (spec.kind == InitKind::file) return state;

  if (spec.amplitude == 0.0) {
    scale_state(state, 0.0);
    return state;
  }
  const double a0 = discrete_a0(state, sobolev_s);
  if (!(a0 > 0.0)) throw InvalidInput("generated data has zero norm");
  scale_state(state, spec.amplitude / std::sqrt(a0));
  return state;
}

}  // namespace bdsim::solver
