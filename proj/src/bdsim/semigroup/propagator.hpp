#pragma once

#include "bdsim/common.hpp"
#include "bdsim/semigroup/eigen_system.hpp"

namespace bdsim::semigroup {

/// Entries of the per-mode solution operator e^{tA} acting on (omega_hat,
/// theta_hat): omega(t) = m1*omega0 + m2*theta0, theta(t) = m3*omega0 +
/// m4*theta0. m1 and m4 are real, m2 and m3 purely imaginary, and
/// m3 = m2/|xi|^2 for the undamped-temperature system.
struct PropagatorMatrix {
  Complex m1, m2, m3, m4;
};

/// Closed-form e^{tA} for A = [[-1, -i*xi1], [-i*xi1/|xi|^2, 0]].
///
/// Evaluated through the gap functions cosh(ht), t*sinhc(ht) (cos/sinc in
/// the complex-pair regime), which stay well conditioned through the
/// degenerate set |xi| = 2|xi1| where the textbook forms divide by the
/// vanishing eigenvalue gap; at the double eigenvalue the limits are
/// m1 = e^{-t/2}(1 - t/2), m2 = -i*xi1*t*e^{-t/2}, m4 = e^{-t/2}(1 + t/2).
PropagatorMatrix propagator(double xi1, double xi2, double t);

/// Same operator for A = [[-nu, -i*xi1], [-i*xi1/|xi|^2, -eta]], i.e. with
/// general velocity damping nu and optional temperature damping eta.
PropagatorMatrix propagator_damped(double xi1, double xi2, double t, double nu,
                                   double eta);

/// Independent oracle: scaling-and-squaring matrix exponential of the same
/// A*t, sharing no code with the closed forms above.
PropagatorMatrix propagator_oracle(double xi1, double xi2, double t);
PropagatorMatrix propagator_oracle_damped(double xi1, double xi2, double t,
                                          double nu, double eta);

/// Region-wise decay envelopes with constant 1 (the fitted constants are
/// measured by certify_envelopes):
///   D1: (e^{-t/2} + r e^{-rt}, |xi1| (e^{-t} + e^{-rt})), r = xi1^2/|xi|^2
///   D2: (e^{-t/18}, |xi1| e^{-t/18})
///   D3: (e^{-t/4},  |xi1| e^{-t/4})
struct DecayEnvelope {
  double m1, m2;
};

DecayEnvelope decay_envelope(double xi1, double xi2, double t);

}  // namespace bdsim::semigroup
