#pragma once

#include <span>

#include "bdsim/common.hpp"
#include "bdsim/spectral/fourier_grid.hpp"

namespace bdsim::spectral {

/// Fourier coefficients of one scalar field on a FourierGrid, normalized as
/// series coefficients: f(x) = sum_k fhat(k) e^{i k.x}, so Parseval reads
/// ||f||_{L2}^2 = L^2 sum_k |fhat(k)|^2.
class SpectralField {
public:
  SpectralField() = default;
  explicit SpectralField(GridPtr grid);

  const FourierGrid& grid() const { return *grid_; }
  const GridPtr& grid_ptr() const { return grid_; }
  bool has_grid() const { return static_cast<bool>(grid_); }

  Complex& at(int j1, int j2) { return coeffs_[grid_->index(j1, j2)]; }
  const Complex& at(int j1, int j2) const { return coeffs_[grid_->index(j1, j2)]; }
  /// Coefficient at signed frequency (m1, m2).
  Complex& mode(int m1, int m2);
  const Complex& mode(int m1, int m2) const;

  std::span<Complex> coeffs() { return coeffs_; }
  std::span<const Complex> coeffs() const { return coeffs_; }
  std::size_t size() const { return coeffs_.size(); }

  bool is_real() const { return is_real_; }
  bool is_mean_zero() const { return coeffs_.empty() || coeffs_[0] == Complex{0.0, 0.0}; }
  void set_real(bool v) { is_real_ = v; }

  /// fhat(0) <- 0.
  void project_mean_zero() { coeffs_[0] = Complex{0.0, 0.0}; }
  /// fhat(k) <- (fhat(k) + conj(fhat(-k))) / 2; makes Hermitian symmetry exact.
  void symmetrize();
  /// Zero all modes outside the two-thirds dealias mask (Nyquist included).
  void apply_dealias_mask();
  /// Max |fhat(k) - conj(fhat(-k))| over the lattice.
  double hermitian_defect() const;
  double max_abs() const;
  bool all_finite() const;

private:
  GridPtr grid_;
  ComplexVec coeffs_;
  bool is_real_ = true;
};

/// Collocation samples (row-major, value at x = (j1, j2) * L / N).
RealVec to_physical(const SpectralField& f);
SpectralField from_physical(GridPtr grid, std::span<const double> samples);

}  // namespace bdsim::spectral
