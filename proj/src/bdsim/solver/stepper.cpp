#include "bdsim/solver/stepper.hpp"

#include <algorithm>

#include "bdsim/energy/norms.hpp"
#include "bdsim/kernels/mode_kernels.hpp"
#include "bdsim/semigroup/propagator.hpp"

namespace bdsim::solver {

using spectral::SpectralField;

PropagatorTable::PropagatorTable(const spectral::FourierGrid& grid, double dt,
                                 double nu, double eta)
    : dt_(dt) {
  const std::size_t sz = grid.size();
  m1_.assign(sz, 0.0);
  m2i_.assign(sz, 0.0);
  m3i_.assign(sz, 0.0);
  m4_.assign(sz, 0.0);
  for (std::size_t i = 1; i < sz; ++i) {
    const auto p =
        semigroup::propagator_damped(-grid.k1()[i], grid.k2()[i], dt, nu, eta);
    m1_[i] = p.m1.real();
    m2i_[i] = p.m2.imag();
    m3i_[i] = p.m3.imag();
    m4_[i] = p.m4.real();
  }
}

void PropagatorTable::apply(SpectralField& omega, SpectralField& theta) const {
  kernels::active_kernels().propagator_apply(omega.coeffs().data(), theta.coeffs().data(),
                                             m1_.data(), m2i_.data(), m3i_.data(),
                                             m4_.data(), omega.size());
}

Stepper::Stepper(spectral::GridPtr grid, const SolverConfig& config)
    : grid_(std::move(grid)), config_(config) {}

void Stepper::nonlinear_rhs(const SpectralField& omega, const SpectralField& theta,
                            SpectralField& g, SpectralField& h) const {
  if (config_.linear_only) {
    g = SpectralField(grid_);
    h = SpectralField(grid_);
    return;
  }
  const auto [u1, u2] = spectral::biot_savart(omega);
  g = spectral::advection(u1, u2, omega, config_.dealias);
  h = spectral::advection(u1, u2, theta, config_.dealias);
  for (Complex& c : g.coeffs()) c = -c;
  for (Complex& c : h.coeffs()) c = -c;
  g.apply_dealias_mask();
  h.apply_dealias_mask();
  g.project_mean_zero();
  h.project_mean_zero();
}

double Stepper::cfl_dt(const FlowState& state) const {
  const auto [u1, u2] = spectral::biot_savart(state.omega);
  const double umax = std::max(energy::linf_proxy(u1), energy::linf_proxy(u2));
  return config_.cfl * state.grid().dx() / std::max(1.0, umax);
}

void Stepper::ensure_tables(double dt) {
  if (full_.built() && full_.dt() == dt) return;
  full_ = PropagatorTable(*grid_, dt, config_.nu, config_.eta);
  if (config_.integrator == Integrator::ifrk4) {
    half_ = PropagatorTable(*grid_, 0.5 * dt, config_.nu, config_.eta);
  }
}

void Stepper::step(FlowState& state, double dt) {
  if (!(dt > 0.0)) throw InvalidInput("step: dt must be positive");
  ensure_tables(dt);
  const auto& kt = kernels::active_kernels();
  const std::size_t n = state.omega.size();

  SpectralField k1w(grid_), k1t(grid_);
  nonlinear_rhs(state.omega, state.theta, k1w, k1t);

  if (config_.integrator == Integrator::ifrk2) {
    // Lawson-Heun: y1 = E(y + dt k1), y+ = E y + dt/2 (E k1 + N(y1))
    SpectralField aw = state.omega, at = state.theta;
    kt.add_scaled(aw.coeffs().data(), k1w.coeffs().data(), dt, n);
    kt.add_scaled(at.coeffs().data(), k1t.coeffs().data(), dt, n);
    full_.apply(aw, at);

    SpectralField k2w(grid_), k2t(grid_);
    nonlinear_rhs(aw, at, k2w, k2t);

    full_.apply(state.omega, state.theta);
    full_.apply(k1w, k1t);
    kt.add_scaled(state.omega.coeffs().data(), k1w.coeffs().data(), 0.5 * dt, n);
    kt.add_scaled(state.theta.coeffs().data(), k1t.coeffs().data(), 0.5 * dt, n);
    kt.add_scaled(state.omega.coeffs().data(), k2w.coeffs().data(), 0.5 * dt, n);
    kt.add_scaled(state.theta.coeffs().data(), k2t.coeffs().data(), 0.5 * dt, n);
  } else {
    // Lawson RK4 with half-step propagator at the internal stages.
    SpectralField aw = state.omega, at = state.theta;
    kt.add_scaled(aw.coeffs().data(), k1w.coeffs().data(), 0.5 * dt, n);
    kt.add_scaled(at.coeffs().data(), k1t.coeffs().data(), 0.5 * dt, n);
    half_.apply(aw, at);
    SpectralField k2w(grid_), k2t(grid_);
    nonlinear_rhs(aw, at, k2w, k2t);

    SpectralField bw = state.omega, bt = state.theta;
    half_.apply(bw, bt);
    SpectralField cw = bw, ct = bt;  // E_half y, reused for stage 4
    kt.add_scaled(bw.coeffs().data(), k2w.coeffs().data(), 0.5 * dt, n);
    kt.add_scaled(bt.coeffs().data(), k2t.coeffs().data(), 0.5 * dt, n);
    SpectralField k3w(grid_), k3t(grid_);
    nonlinear_rhs(bw, bt, k3w, k3t);

    SpectralField ek3w = k3w, ek3t = k3t;
    half_.apply(ek3w, ek3t);
    half_.apply(cw, ct);  // now E_full y
    SpectralField dw = cw, dtheta = ct;
    kt.add_scaled(dw.coeffs().data(), ek3w.coeffs().data(), dt, n);
    kt.add_scaled(dtheta.coeffs().data(), ek3t.coeffs().data(), dt, n);
    SpectralField k4w(grid_), k4t(grid_);
    nonlinear_rhs(dw, dtheta, k4w, k4t);

    // y+ = E y + dt/6 (E k1 + 2 E_half k2 + 2 E_half k3 + k4)
    full_.apply(k1w, k1t);
    half_.apply(k2w, k2t);
    state.omega = cw;
    state.theta = ct;
    const double w1 = dt / 6.0, w2 = dt / 3.0;
    kt.add_scaled(state.omega.coeffs().data(), k1w.coeffs().data(), w1, n);
    kt.add_scaled(state.theta.coeffs().data(), k1t.coeffs().data(), w1, n);
    kt.add_scaled(state.omega.coeffs().data(), k2w.coeffs().data(), w2, n);
    kt.add_scaled(state.theta.coeffs().data(), k2t.coeffs().data(), w2, n);
    kt.add_scaled(state.omega.coeffs().data(), ek3w.coeffs().data(), w2, n);
    kt.add_scaled(state.theta.coeffs().data(), ek3t.coeffs().data(), w2, n);
    kt.add_scaled(state.omega.coeffs().data(), k4w.coeffs().data(), w1, n);
    kt.add_scaled(state.theta.coeffs().data(), k4t.coeffs().data(), w1, n);
  }

  state.omega.project_mean_zero();
  state.theta.project_mean_zero();
  state.time += dt;
}

}  // namespace bdsim::solver
