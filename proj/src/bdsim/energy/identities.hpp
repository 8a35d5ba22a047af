#pragma once

#include <string>
#include <vector>

#include "bdsim/spectral/spectral_field.hpp"

namespace bdsim::energy {

struct IdentityResult {
  std::string name;
  double residual = 0.0;
  double scale = 0.0;
  bool pass(double tol = 1e-10) const { return residual <= tol * scale; }
};

/// The cancellation identities used by the a priori estimates, evaluated
/// with padded (alias-free) products:
///   transport_theta_l2     (u.grad theta | theta) = 0
///   transport_omega_hneg1  (u.grad omega | omega)_{Hdot^-1} = 0
///   coupling_hs            (d1 theta | omega)_{Hdot^s}
///                            + (d1 Lambda^-2 omega | theta)_{Hdot^{s+1}} = 0
///   transport_pair_d1      (u.grad omega | d1 theta) + (u.grad d1 theta | omega) = 0
///   transport_lambda_s     (u.grad Lambda^s omega | Lambda^s omega) = 0
///   coupling_hneg          (d1 theta | omega)_{Hdot^-2}
///                            + (d1 Lambda^-2 omega | theta)_{Hdot^-1} = 0
/// Each result reports |LHS| and a Hoelder-style magnitude scale; the
/// pass criterion is residual <= 1e-10 * scale.
std::vector<IdentityResult> cancellation_suite(const spectral::SpectralField& omega,
                                               const spectral::SpectralField& theta,
                                               int s);

/// Product-rule identity for u2 d2(theta) in frequency space: the transform
/// of u2 d2(theta) equals the xi1-weighted transform of Lambda^-2 omega
/// d2(theta) plus the transform of Lambda^-2 omega d1 d2(theta). Residual is
/// the max coefficient defect over mask-retained modes, scale the max
/// coefficient magnitude of u2 d2(theta).
IdentityResult fourier_identity_tech1(const spectral::SpectralField& omega,
                                      const spectral::SpectralField& theta);

/// Product and commutator estimates, p = 2 specialization. Reports the two
/// sides; the constants are unquantified, so only ratios are meaningful.
///   kp:  ||Lambda^s(fg)||_2 vs ||f||_inf ||Lambda^s g||_2 + ||g||_inf ||Lambda^s f||_2
///   kpv: ||Lambda^s(fg) - f Lambda^s g||_2 vs
///        ||grad f||_inf ||Lambda^{s-1} g||_2 + ||Lambda^s f||_4 ||g||_4
struct CommutatorProbe {
  double kp_lhs = 0.0;
  double kp_rhs = 0.0;
  double kpv_lhs = 0.0;
  double kpv_rhs = 0.0;
};

CommutatorProbe commutator_probe(const spectral::SpectralField& f,
                                 const spectral::SpectralField& g, double s);

}  // namespace bdsim::energy
