#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "bdsim/common.hpp"
#include "bdsim/spectral/fft.hpp"

namespace bdsim::spectral {

/// Periodic N x N lattice on the torus [0, L)^2.
///
/// Modes are stored in FFT order along each axis: index j maps to the signed
/// integer frequency m = j for j < N/2 and m = j - N otherwise, with
/// wavenumber k = (2*pi/L) * m. The Nyquist rows (m = -N/2) are excluded from
/// the dealias mask and kept identically zero by every producer, so fields
/// effectively live on |m| <= N/2 - 1.
///
/// Immutable after construction and shareable across threads.
class FourierGrid {
public:
  FourierGrid(int modes_per_axis, double period = kTwoPi);

  int n() const { return n_; }
  double period() const { return period_; }
  std::size_t size() const { return static_cast<std::size_t>(n_) * n_; }
  int padded_size() const { return padded_; }
  int quadrature_size() const { return 2 * n_; }
  double dx() const { return period_ / n_; }

  /// Signed integer frequency for lattice index j in [0, N).
  int freq(int j) const { return freq_[j]; }
  double wavenumber(int j) const { return k_of_[j]; }

  std::size_t index(int j1, int j2) const {
    return static_cast<std::size_t>(j1) * n_ + j2;
  }
  /// Lattice index of -m given the index of m.
  int mirror(int j) const { return j == 0 ? 0 : n_ - j; }

  // Per-mode tables over the flat row-major layout.
  const RealVec& k1() const { return k1_; }
  const RealVec& k2() const { return k2_; }
  const RealVec& k_sq() const { return ksq_; }
  const std::vector<std::uint8_t>& dealias_mask() const { return mask_; }
  bool masked(int j1, int j2) const { return mask_[index(j1, j2)] != 0; }

  const Dft2d& dft() const { return *dft_n_; }
  const Dft2d& dft_padded() const { return *dft_pad_; }
  const Dft2d& dft_quadrature() const { return *dft_quad_; }

private:
  int n_;
  double period_;
  int padded_;
  std::vector<int> freq_;
  std::vector<double> k_of_;
  RealVec k1_, k2_, ksq_;
  std::vector<std::uint8_t> mask_;
  std::unique_ptr<Dft2d> dft_n_, dft_pad_, dft_quad_;
};

using GridPtr = std::shared_ptr<const FourierGrid>;

GridPtr make_grid(int modes_per_axis, double period = kTwoPi);

}  // namespace bdsim::spectral
