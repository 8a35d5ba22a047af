#pragma once

#include "bdsim/common.hpp"

namespace bdsim::semigroup {

// Per-mode linear system matrix
//   A = [[-1, -i*xi1], [-i*xi1/|xi|^2, 0]],
// trace -1, determinant xi1^2/|xi|^2, characteristic roots
//   lambda_pm = (-1 +- sqrt(|xi|^2 - 4 xi1^2) / |xi|) / 2,
// real for |xi| >= 2|xi1| and a conjugate pair otherwise.

enum class EigenRegime { real_pair, complex_pair, degenerate };

struct EigenPair {
  Complex lambda_plus;
  Complex lambda_minus;
  double discriminant;  // |xi|^2 - 4 xi1^2, evaluated as xi2^2 - 3 xi1^2
  EigenRegime regime;
};

/// Relative-discriminant threshold below which the closed-form propagator
/// entries would divide by a vanishing eigenvalue gap.
inline constexpr double kDegenerateThreshold = 1e-6;

EigenPair eigenvalues(double xi1, double xi2);

/// Frequency regions controlling the anisotropic decay rates:
/// D1: |xi| >= 3|xi1|;  D2: 2|xi1| <= |xi| < 3|xi1|;  D3: |xi| < 2|xi1|.
enum class ModeRegion { D1, D2, D3 };

ModeRegion classify(double xi1, double xi2);

const char* region_name(ModeRegion r);

}  // namespace bdsim::semigroup
