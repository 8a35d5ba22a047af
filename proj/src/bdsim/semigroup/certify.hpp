#pragma once

#include <span>
#include <vector>

#include "bdsim/semigroup/propagator.hpp"

namespace bdsim::semigroup {

/// Largest observed |entry| / envelope ratio over a sample set, per region.
struct RegionFit {
  double c_m1 = 0.0;
  double c_m2 = 0.0;
  std::size_t samples = 0;
};

struct EnvelopeCertificate {
  RegionFit d1, d2, d3;

  RegionFit& for_region(ModeRegion r) {
    return r == ModeRegion::D1 ? d1 : (r == ModeRegion::D2 ? d2 : d3);
  }
  const RegionFit& for_region(ModeRegion r) const {
    return const_cast<EnvelopeCertificate*>(this)->for_region(r);
  }
};

/// Fits the envelope constants over the integer lattice |m1|,|m2| <= bound
/// (excluding 0) crossed with t_samples. The claim under test is that the
/// fits are finite and stable as the sample set grows.
EnvelopeCertificate certify_envelopes(int lattice_bound,
                                      std::span<const double> t_samples);

/// Lattice sups of the weighted kernels: sup (|xi1|/|xi|) |M1(t)| and
/// sup (|xi1|/|xi|^2) |M2(t)|, whose large-t decay is algebraic (t^{-3/2}
/// and t^{-1} respectively).
struct KernelDecaySeries {
  std::vector<double> t;
  std::vector<double> sup_m1_weighted;
  std::vector<double> sup_m2_weighted;
};

KernelDecaySeries tabulate_kernel_decay(int lattice_bound,
                                        std::span<const double> t_samples);

/// Least-squares slope of log(v) against log(t), skipping nonpositive values.
double fit_loglog_slope(std::span<const double> t, std::span<const double> v);

std::vector<double> log_spaced(double lo, double hi, int count);

}  // namespace bdsim::semigroup
