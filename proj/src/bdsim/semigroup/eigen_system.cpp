#include "bdsim/semigroup/eigen_system.hpp"

#include <cmath>

namespace bdsim::semigroup {

EigenPair eigenvalues(double xi1, double xi2) {
  const double ksq = xi1 * xi1 + xi2 * xi2;
  if (ksq == 0.0) throw InvalidInput("eigenvalues: xi must be nonzero");
  const double disc = xi2 * xi2 - 3.0 * xi1 * xi1;

  EigenPair out;
  out.discriminant = disc;
  if (std::abs(disc) < kDegenerateThreshold * ksq) {
    out.regime = EigenRegime::degenerate;
  } else {
    out.regime = disc > 0.0 ? EigenRegime::real_pair : EigenRegime::complex_pair;
  }

  const double knorm = std::sqrt(ksq);
  if (disc >= 0.0) {
    const double gap = std::sqrt(disc) / knorm;
    out.lambda_plus = Complex{0.5 * (-1.0 + gap), 0.0};
    out.lambda_minus = Complex{0.5 * (-1.0 - gap), 0.0};
  } else {
    const double gap = std::sqrt(-disc) / knorm;
    out.lambda_plus = Complex{-0.5, 0.5 * gap};
    out.lambda_minus = Complex{-0.5, -0.5 * gap};
  }
  return out;
}

ModeRegion classify(double xi1, double xi2) {
  const double x1sq = xi1 * xi1;
  const double x2sq = xi2 * xi2;
  if (x1sq + x2sq == 0.0) throw InvalidInput("classify: xi must be nonzero");
  if (x2sq >= 8.0 * x1sq) return ModeRegion::D1;   // |xi| >= 3|xi1|
  if (x2sq >= 3.0 * x1sq) return ModeRegion::D2;   // |xi| >= 2|xi1|
  return ModeRegion::D3;
}

const char* region_name(ModeRegion r) {
  switch (r) {
    case ModeRegion::D1: return "D1";
    case ModeRegion::D2: return "D2";
    default: return "D3";
  }
}

}  // namespace bdsim::semigroup
