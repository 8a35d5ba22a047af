#pragma once

#include "bdsim/solver/config.hpp"
#include "bdsim/solver/flow_state.hpp"

namespace bdsim::solver {

/// Per-mode e^{dt A} entries tabulated over the grid for the series-
/// coefficient dynamics d/dt (omega, theta) = A (omega, theta) + (G, H),
/// A(k) = [[-nu, i k1], [i k1/|k|^2, -eta]]; built from the closed-form
/// propagator evaluated at (-k1, k2), which maps the transform orientation
/// of the closed forms onto series coefficients. The k = 0 row is zero
/// (mean modes are projected out).
class PropagatorTable {
public:
  PropagatorTable() = default;
  PropagatorTable(const spectral::FourierGrid& grid, double dt, double nu, double eta);

  void apply(spectral::SpectralField& omega, spectral::SpectralField& theta) const;
  double dt() const { return dt_; }
  bool built() const { return !m1_.empty(); }

  // per-mode entries (m1, m4 real; m2, m3 imaginary parts)
  const RealVec& m1() const { return m1_; }
  const RealVec& m2_imag() const { return m2i_; }
  const RealVec& m3_imag() const { return m3i_; }
  const RealVec& m4() const { return m4_; }

private:
  double dt_ = -1.0;
  RealVec m1_, m2i_, m3i_, m4_;
};

/// Integrating-factor Runge-Kutta stepper (Lawson form): the exact per-mode
/// semigroup advances the linear part, classical RK weights integrate the
/// advection terms. IFRK4 uses e^{dt A} and e^{dt A / 2} tables, IFRK2 only
/// e^{dt A}.
class Stepper {
public:
  Stepper(spectral::GridPtr grid, const SolverConfig& config);

  void step(FlowState& state, double dt);

  /// G = -u.grad(omega), H = -u.grad(theta); masked, mean-zero, Hermitian.
  void nonlinear_rhs(const spectral::SpectralField& omega,
                     const spectral::SpectralField& theta,
                     spectral::SpectralField& g, spectral::SpectralField& h) const;

  /// cfl * dx / max(1, ||u||_inf-proxy) from the current state.
  double cfl_dt(const FlowState& state) const;

  const SolverConfig& config() const { return config_; }

private:
  void ensure_tables(double dt);

  spectral::GridPtr grid_;
  SolverConfig config_;
  PropagatorTable full_, half_;
};

}  // namespace bdsim::solver
