#include "bdsim/spectral/fourier_grid.hpp"

#include <cstdlib>

namespace bdsim::spectral {

FourierGrid::FourierGrid(int modes_per_axis, double period)
    : n_(modes_per_axis), period_(period) {
  if (n_ < 8 || n_ % 2 != 0) {
    throw InvalidInput("grid size must be even and >= 8");
  }
  if (!(period_ > 0.0)) {
    throw InvalidInput("grid period must be positive");
  }
  padded_ = 3 * n_ / 2;

  freq_.resize(n_);
  k_of_.resize(n_);
  for (int j = 0; j < n_; ++j) {
    freq_[j] = j < n_ / 2 ? j : j - n_;
    k_of_[j] = kTwoPi / period_ * freq_[j];
  }

  const std::size_t sz = size();
  k1_.resize(sz);
  k2_.resize(sz);
  ksq_.resize(sz);
  mask_.resize(sz);
  for (int j1 = 0; j1 < n_; ++j1) {
    for (int j2 = 0; j2 < n_; ++j2) {
      const std::size_t idx = index(j1, j2);
      k1_[idx] = k_of_[j1];
      k2_[idx] = k_of_[j2];
      ksq_[idx] = k_of_[j1] * k_of_[j1] + k_of_[j2] * k_of_[j2];
      // two-thirds rule: keep |m| <= N/3 on both axes
      mask_[idx] = (3 * std::abs(freq_[j1]) <= n_ && 3 * std::abs(freq_[j2]) <= n_) ? 1 : 0;
    }
  }

  dft_n_ = std::make_unique<Dft2d>(n_);
  dft_pad_ = std::make_unique<Dft2d>(padded_);
  dft_quad_ = std::make_unique<Dft2d>(2 * n_);
}

GridPtr make_grid(int modes_per_axis, double period) {
  return std::make_shared<const FourierGrid>(modes_per_axis, period);
}

}  // namespace bdsim::spectral
