#pragma once

#include <cstddef>

#include "bdsim/common.hpp"

struct fftw_plan_s;

namespace bdsim::spectral {

/// Out-of-place complex 2D DFT of size n x n (FFTW backend, FFTW_ESTIMATE
/// so plan selection is deterministic run-to-run). Unnormalized: forward
/// applies e^{-ik.x}, backward e^{+ik.x}; callers divide by n^2 where needed.
/// Plan creation is serialized internally; execution on distinct buffers is
/// thread-safe.
class Dft2d {
public:
  explicit Dft2d(int n);
  ~Dft2d();
  Dft2d(const Dft2d&) = delete;
  Dft2d& operator=(const Dft2d&) = delete;

  int n() const { return n_; }
  std::size_t size() const { return static_cast<std::size_t>(n_) * n_; }

  void forward(const Complex* in, Complex* out) const;
  void backward(const Complex* in, Complex* out) const;

private:
  int n_;
  fftw_plan_s* fwd_;
  fftw_plan_s* bwd_;
};

}  // namespace bdsim::spectral
