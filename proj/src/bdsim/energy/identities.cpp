#include "bdsim/energy/identities.hpp"

#include <cmath>

#include "bdsim/energy/norms.hpp"
#include "bdsim/spectral/operators.hpp"

namespace bdsim::energy {

using spectral::DealiasMode;
using spectral::SpectralField;

namespace {

/// (a | b)_{Hdot^order} = L^2 sum |k|^{2 order} Re(ahat conj(bhat)).
double weighted_pairing(const SpectralField& a, const SpectralField& b, double order) {
  const auto& grid = a.grid();
  const auto ac = a.coeffs();
  const auto bc = b.coeffs();
  double sum = 0.0;
  for (std::size_t i = 0; i < ac.size(); ++i) {
    const double ksq = grid.k_sq()[i];
    if (ksq == 0.0) {
      if (order == 0.0) sum += ac[i].real() * bc[i].real() + ac[i].imag() * bc[i].imag();
      continue;
    }
    const double w = order == 0.0 ? 1.0 : std::pow(ksq, order);
    sum += w * (ac[i].real() * bc[i].real() + ac[i].imag() * bc[i].imag());
  }
  const double l = grid.period();
  return sum * l * l;
}

double l2(const SpectralField& f) { return sobolev_norm(f, {0.0, true}); }
double grad_l2(const SpectralField& f) { return sobolev_norm(f, {1.0, true}); }

}  // namespace

std::vector<IdentityResult> cancellation_suite(const SpectralField& omega,
                                               const SpectralField& theta, int s) {
  std::vector<IdentityResult> out;
  const auto [u1, u2] = spectral::biot_savart(omega);
  const double uproxy = std::max(linf_proxy(u1), linf_proxy(u2));
  const SpectralField d1theta = spectral::derivative(theta, 1);

  {
    const SpectralField t = spectral::advection(u1, u2, theta, DealiasMode::padded);
    out.push_back({"transport_theta_l2", std::abs(spectral::inner_product(t, theta)),
                   uproxy * grad_l2(theta) * l2(theta)});
  }
  {
    SpectralField t = spectral::advection(u1, u2, omega, DealiasMode::padded);
    t.project_mean_zero();
    out.push_back({"transport_omega_hneg1", std::abs(weighted_pairing(t, omega, -1.0)),
                   uproxy * grad_l2(omega) * sobolev_norm(omega, {-2.0, true})});
  }
  {
    const SpectralField d1lm2 =
        spectral::derivative(spectral::apply_fractional_laplacian(omega, -2.0), 1);
    const double t1 = weighted_pairing(d1theta, omega, static_cast<double>(s));
    const double t2 = weighted_pairing(d1lm2, theta, static_cast<double>(s + 1));
    out.push_back({"coupling_hs", std::abs(t1 + t2), std::abs(t1) + std::abs(t2)});
  }
  {
    const SpectralField t1 = spectral::advection(u1, u2, omega, DealiasMode::padded);
    const SpectralField t2 = spectral::advection(u1, u2, d1theta, DealiasMode::padded);
    const double r = spectral::inner_product(t1, d1theta) + spectral::inner_product(t2, omega);
    out.push_back({"transport_pair_d1", std::abs(r),
                   uproxy * (grad_l2(omega) * l2(d1theta) + grad_l2(d1theta) * l2(omega))});
  }
  {
    const SpectralField ls =
        spectral::apply_fractional_laplacian(omega, static_cast<double>(s));
    const SpectralField t = spectral::advection(u1, u2, ls, DealiasMode::padded);
    out.push_back({"transport_lambda_s", std::abs(spectral::inner_product(t, ls)),
                   uproxy * grad_l2(ls) * l2(ls)});
  }
  {
    const SpectralField d1lm2 =
        spectral::derivative(spectral::apply_fractional_laplacian(omega, -2.0), 1);
    const double t1 = weighted_pairing(d1theta, omega, -2.0);
    const double t2 = weighted_pairing(d1lm2, theta, -1.0);
    out.push_back({"coupling_hneg", std::abs(t1 + t2), std::abs(t1) + std::abs(t2)});
  }
  return out;
}

IdentityResult fourier_identity_tech1(const SpectralField& omega,
                                      const SpectralField& theta) {
  const SpectralField u2 = spectral::biot_savart(omega).second;
  const SpectralField lm2 = spectral::apply_fractional_laplacian(omega, -2.0);
  const SpectralField d2theta = spectral::derivative(theta, 2);
  const SpectralField d1d2theta = spectral::derivative(d2theta, 1);

  const SpectralField p = spectral::dealiased_product(u2, d2theta, DealiasMode::padded);
  const SpectralField q = spectral::dealiased_product(lm2, d2theta, DealiasMode::padded);
  const SpectralField r = spectral::dealiased_product(lm2, d1d2theta, DealiasMode::padded);

  const auto& grid = p.grid();
  const auto& mask = grid.dealias_mask();
  double residual = 0.0;
  double scale = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!mask[i]) continue;
    const Complex defect =
        p.coeffs()[i] + Complex{0.0, grid.k1()[i]} * q.coeffs()[i] - r.coeffs()[i];
    residual = std::max(residual, std::abs(defect));
    scale = std::max(scale, std::abs(p.coeffs()[i]));
  }
  return {"fourier_tech1", residual, scale};
}

CommutatorProbe commutator_probe(const SpectralField& f, const SpectralField& g,
                                 double s) {
  if (!(s > 0.0)) throw InvalidInput("commutator_probe: s must be positive");
  CommutatorProbe probe;

  const SpectralField fg = spectral::dealiased_product(f, g, DealiasMode::padded);
  probe.kp_lhs = sobolev_norm(fg, {s, true});
  probe.kp_rhs = grid_max(f) * sobolev_norm(g, {s, true}) +
                 grid_max(g) * sobolev_norm(f, {s, true});

  const SpectralField lg = spectral::apply_fractional_laplacian(g, s);
  const SpectralField flg = spectral::dealiased_product(f, lg, DealiasMode::padded);
  SpectralField comm = spectral::apply_fractional_laplacian(fg, s);
  for (std::size_t i = 0; i < comm.size(); ++i) comm.coeffs()[i] -= flg.coeffs()[i];
  probe.kpv_lhs = l2(comm);

  const SpectralField d1f = spectral::derivative(f, 1);
  const SpectralField d2f = spectral::derivative(f, 2);
  const RealVec s1 = spectral::to_physical(d1f);
  const RealVec s2 = spectral::to_physical(d2f);
  double gradmax = 0.0;
  for (std::size_t i = 0; i < s1.size(); ++i) {
    gradmax = std::max(gradmax, std::hypot(s1[i], s2[i]));
  }
  probe.kpv_rhs = gradmax * sobolev_norm(g, {s - 1.0, true}) +
                  grid_l4(spectral::apply_fractional_laplacian(f, s)) * grid_l4(g);
  return probe;
}

}  // namespace bdsim::energy
