#pragma once

#include <vector>

#include "bdsim/spectral/spectral_field.hpp"

namespace bdsim::energy {

/// One diagnostics sample. E is the instantaneous value of the Lyapunov
/// quantity ||omega||_{calH^s}^2 + ||theta||_{H^{s+1}}^2; *_run columns are
/// trapezoidal time integrals on the diagnostics stride; A_sup is the
/// running sup of ||omega||_{bbH^s}^2 + ||theta||_{calH^{s+1}}^2. M_T and
/// frakM_T are the derived summary combinations (running-sup E, constant 1).
struct LedgerRow {
  double time = 0.0;
  double E = 0.0;
  double E1_run = 0.0;
  double E2_run = 0.0;
  double A_sup = 0.0;
  double A1_run = 0.0;
  double I1 = 0.0;
  double K_integrand = 0.0;
  double K_abs_run = 0.0;
  double u2_linf_proxy = 0.0;
  double u2_linf43_run = 0.0;
  double omega_hneg2 = 0.0;
  double theta_hneg1 = 0.0;
  double M_T = 0.0;
  double frakM_T = 0.0;
  bool resolution_flagged = false;
};

class FunctionalLedger {
public:
  explicit FunctionalLedger(int sobolev_s = 5, double e2_index = -2.0);

  void append(double time, const spectral::SpectralField& omega,
              const spectral::SpectralField& theta);

  const std::vector<LedgerRow>& rows() const { return rows_; }
  bool empty() const { return rows_.empty(); }
  const LedgerRow& back() const { return rows_.back(); }

  void mark_failure(double time);
  bool failed() const { return failed_; }
  double failure_time() const { return failure_time_; }
  bool any_resolution_flagged() const;

  int sobolev_s() const { return s_; }
  double e2_index() const { return e2_index_; }

private:
  struct Integrands {
    double e1 = 0.0, e2 = 0.0, a1 = 0.0, k = 0.0, u2_43 = 0.0;
  };

  int s_;
  double e2_index_;
  std::vector<LedgerRow> rows_;
  double e_sup_ = 0.0;
  double a_sup_ = 0.0;
  double e1_run_ = 0.0, e2_run_ = 0.0, a1_run_ = 0.0, u2_43_run_ = 0.0;
  double k_run_signed_ = 0.0;
  bool have_prev_ = false;
  double prev_time_ = 0.0;
  Integrands prev_;
  bool failed_ = false;
  double failure_time_ = 0.0;
};

}  // namespace bdsim::energy
