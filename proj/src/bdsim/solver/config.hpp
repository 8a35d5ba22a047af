#pragma once

#include <cstdint>
#include <string>

#include "bdsim/common.hpp"
#include "bdsim/spectral/operators.hpp"

namespace bdsim::solver {

enum class Integrator { ifrk2, ifrk4 };

struct SolverConfig {
  int grid_n = 64;
  double grid_l = kTwoPi;
  double dt = 0.0;   // fixed step when > 0
  double cfl = 0.0;  // adaptive step when > 0; exactly one of dt/cfl is set
  double t_end = 1.0;
  double nu = 1.0;
  double eta = 0.0;
  int sobolev_s = 5;
  Integrator integrator = Integrator::ifrk4;
  spectral::DealiasMode dealias = spectral::DealiasMode::masked;
  int diagnostics_stride = 1;
  bool linear_only = false;
  double e2_index = -2.0;

  void validate() const {
    if (grid_n < 8 || grid_n % 2 != 0) throw InvalidInput("grid_n must be even and >= 8");
    if (!(grid_l > 0.0)) throw InvalidInput("grid_l must be positive");
    const bool fixed = dt > 0.0;
    const bool adaptive = cfl > 0.0;
    if (fixed == adaptive) throw InvalidInput("exactly one of dt and cfl must be set");
    if (adaptive && cfl > 1.0) throw InvalidInput("cfl must lie in (0, 1]");
    if (t_end < 0.0) throw InvalidInput("t_end must be nonnegative");
    if (!(nu > 0.0)) throw InvalidInput("nu must be positive");
    if (eta < 0.0) throw InvalidInput("eta must be nonnegative");
    if (sobolev_s < 5) throw InvalidInput("sobolev_s must be >= 5");
    if (diagnostics_stride < 1) throw InvalidInput("diagnostics_stride must be >= 1");
  }
};

enum class InitKind { single_mode, random_band, file };

/// Spectral-region filter for decay studies (keeps only modes whose
/// frequency lies in the given region).
enum class RegionFilter { all, d1, d2, d3 };

struct InitialDataSpec {
  InitKind kind = InitKind::random_band;
  double amplitude = 1e-3;  // generated data satisfies A(0) = amplitude^2
  std::uint64_t seed = 0;
  // random_band: modes with band_lo <= |m| <= band_hi;
  // single_mode: the integer mode (band_lo, band_hi) itself.
  int band_lo = 1;
  int band_hi = 8;
  double spectral_decay = 1.0;  // coefficients damped by e^{-decay |m|}
  std::string file;             // kind == file
  RegionFilter region = RegionFilter::all;
};

}  // namespace bdsim::solver
