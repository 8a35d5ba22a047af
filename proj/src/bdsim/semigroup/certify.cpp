#include "bdsim/semigroup/certify.hpp"

#include <algorithm>
#include <cmath>

namespace bdsim::semigroup {

EnvelopeCertificate certify_envelopes(int lattice_bound,
                                      std::span<const double> t_samples) {
  if (lattice_bound <= 0) throw InvalidInput("certify_envelopes: empty lattice");
  if (t_samples.empty()) throw InvalidInput("certify_envelopes: no time samples");
  for (double t : t_samples) {
    if (!(t > 0.0)) throw InvalidInput("certify_envelopes: t samples must be positive");
  }

  EnvelopeCertificate cert;
  for (int m1 = -lattice_bound; m1 <= lattice_bound; ++m1) {
    for (int m2 = -lattice_bound; m2 <= lattice_bound; ++m2) {
      if (m1 == 0 && m2 == 0) continue;
      const double xi1 = m1;
      const double xi2 = m2;
      RegionFit& fit = cert.for_region(classify(xi1, xi2));
      for (double t : t_samples) {
        const PropagatorMatrix p = propagator(xi1, xi2, t);
        const DecayEnvelope env = decay_envelope(xi1, xi2, t);
        fit.c_m1 = std::max(fit.c_m1, std::abs(p.m1) / env.m1);
        if (env.m2 > 0.0) {
          fit.c_m2 = std::max(fit.c_m2, std::abs(p.m2) / env.m2);
        }
        ++fit.samples;
      }
    }
  }
  return cert;
}

KernelDecaySeries tabulate_kernel_decay(int lattice_bound,
                                        std::span<const double> t_samples) {
  if (lattice_bound <= 0) throw InvalidInput("tabulate_kernel_decay: empty lattice");
  KernelDecaySeries out;
  out.t.assign(t_samples.begin(), t_samples.end());
  out.sup_m1_weighted.assign(t_samples.size(), 0.0);
  out.sup_m2_weighted.assign(t_samples.size(), 0.0);
  // the weighted kernels depend on (|m1|, |m2|) only
  for (int m1 = 0; m1 <= lattice_bound; ++m1) {
    for (int m2 = 0; m2 <= lattice_bound; ++m2) {
      if (m1 == 0 && m2 == 0) continue;
      const double xi1 = m1;
      const double xi2 = m2;
      const double knorm = std::hypot(xi1, xi2);
      for (std::size_t i = 0; i < out.t.size(); ++i) {
        const PropagatorMatrix p = propagator(xi1, xi2, out.t[i]);
        out.sup_m1_weighted[i] =
            std::max(out.sup_m1_weighted[i], xi1 / knorm * std::abs(p.m1));
        out.sup_m2_weighted[i] =
            std::max(out.sup_m2_weighted[i], xi1 / (knorm * knorm) * std::abs(p.m2));
      }
    }
  }
  return out;
}

double fit_loglog_slope(std::span<const double> t, std::span<const double> v) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::size_t n = 0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (!(t[i] > 0.0) || !(v[i] > 0.0)) continue;
    const double x = std::log(t[i]);
    const double y = std::log(v[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++n;
  }
  if (n < 2) throw InvalidInput("fit_loglog_slope: need at least two positive samples");
  const double denom = n * sxx - sx * sx;
  return (n * sxy - sx * sy) / denom;
}

std::vector<double> log_spaced(double lo, double hi, int count) {
  std::vector<double> out;
  out.reserve(count);
  if (count == 1) {
    out.push_back(lo);
    return out;
  }
  const double ratio = std::log(hi / lo) / (count - 1);
  for (int i = 0; i < count; ++i) out.push_back(lo * std::exp(ratio * i));
  return out;
}

}  // namespace bdsim::semigroup
