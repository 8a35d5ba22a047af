#include "bdsim/energy/ledger.hpp"

#include <cmath>

#include "bdsim/energy/functionals.hpp"
#include "bdsim/energy/norms.hpp"
#include "bdsim/spectral/operators.hpp"

namespace bdsim::energy {

FunctionalLedger::FunctionalLedger(int sobolev_s, double e2_index)
    : s_(sobolev_s), e2_index_(e2_index) {}

void FunctionalLedger::append(double time, const spectral::SpectralField& omega,
                              const spectral::SpectralField& theta) {
  const double sd = static_cast<double>(s_);

  const double omega_calhs = space_norm(omega, CompositeSpace::calH, s_);
  const double omega_bbhs = space_norm(omega, CompositeSpace::bbH, s_);
  const double theta_hs1 = sobolev_norm(theta, {sd + 1.0, false});
  const double theta_calhs1 = space_norm(theta, CompositeSpace::calH, s_ + 1);

  const spectral::SpectralField d1theta = spectral::derivative(theta, 1);
  const double d1theta_hs = sobolev_norm(d1theta, {sd, false});
  const double d1theta_bbhs = space_norm(d1theta, CompositeSpace::bbH, s_);

  LedgerRow row;
  row.time = time;
  row.E = omega_calhs * omega_calhs + theta_hs1 * theta_hs1;
  const double a_inst = omega_bbhs * omega_bbhs + theta_calhs1 * theta_calhs1;

  Integrands now;
  now.e1 = omega_calhs * omega_calhs + d1theta_hs * d1theta_hs;
  now.a1 = omega_bbhs * omega_bbhs + d1theta_bbhs * d1theta_bbhs;
  const double lam = sobolev_norm(omega, {e2_index_, true});
  now.e2 = lam * lam;

  const spectral::SpectralField u2 = spectral::biot_savart(omega).second;
  row.u2_linf_proxy = linf_proxy(u2);
  now.u2_43 = std::pow(row.u2_linf_proxy, 4.0 / 3.0);

  const FunctionalValue i1 = functional_I1(omega, theta, s_);
  const FunctionalValue k = functional_K_integrand(omega, theta, s_);
  row.I1 = i1.value;
  row.K_integrand = k.value;
  now.k = k.value;
  row.resolution_flagged = i1.resolution_flagged || k.resolution_flagged;

  row.omega_hneg2 = sobolev_norm(omega, {-2.0, true});
  row.theta_hneg1 = sobolev_norm(theta, {-1.0, true});

  if (have_prev_) {
    const double h = 0.5 * (time - prev_time_);
    e1_run_ += h * (prev_.e1 + now.e1);
    e2_run_ += h * (prev_.e2 + now.e2);
    a1_run_ += h * (prev_.a1 + now.a1);
    u2_43_run_ += h * (prev_.u2_43 + now.u2_43);
    k_run_signed_ += h * (prev_.k + now.k);
  }
  prev_ = now;
  prev_time_ = time;
  have_prev_ = true;

  e_sup_ = std::max(e_sup_, row.E);
  a_sup_ = std::max(a_sup_, a_inst);

  row.E1_run = e1_run_;
  row.E2_run = e2_run_;
  row.A1_run = a1_run_;
  row.u2_linf43_run = u2_43_run_;
  row.K_abs_run = std::abs(k_run_signed_);
  row.A_sup = a_sup_;

  const double es = e_sup_;
  row.M_T = std::sqrt(es) * (es + e1_run_ + std::pow(es, 1.5) + es * e1_run_);
  const double root_e1 = std::sqrt(e1_run_);
  const double root_e2 = std::sqrt(e2_run_);
  row.frakM_T = std::sqrt(es) + e1_run_ + (root_e1 + root_e2) * root_e1 +
                (root_e1 + root_e2) * std::pow(es, 0.25) * std::pow(e1_run_, 0.25);

  rows_.push_back(row);
}

void FunctionalLedger::mark_failure(double time) {
  failed_ = true;
  failure_time_ = time;
}

bool FunctionalLedger::any_resolution_flagged() const {
  for (const LedgerRow& r : rows_) {
    if (r.resolution_flagged) return true;
  }
  return false;
}

}  // namespace bdsim::energy
