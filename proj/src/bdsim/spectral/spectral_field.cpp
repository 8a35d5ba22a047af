#include "bdsim/spectral/spectral_field.hpp"

#include <algorithm>
#include <cmath>

namespace bdsim::spectral {

SpectralField::SpectralField(GridPtr grid) : grid_(std::move(grid)) {
  coeffs_.assign(grid_->size(), Complex{0.0, 0.0});
}

Complex& SpectralField::mode(int m1, int m2) {
  const int n = grid_->n();
  const int j1 = m1 >= 0 ? m1 : m1 + n;
  const int j2 = m2 >= 0 ? m2 : m2 + n;
  return coeffs_[grid_->index(j1, j2)];
}

const Complex& SpectralField::mode(int m1, int m2) const {
  return const_cast<SpectralField*>(this)->mode(m1, m2);
}

void SpectralField::symmetrize() {
  const int n = grid_->n();
  for (int j1 = 0; j1 < n; ++j1) {
    const int i1 = grid_->mirror(j1);
    for (int j2 = 0; j2 < n; ++j2) {
      const int i2 = grid_->mirror(j2);
      if (grid_->index(j1, j2) > grid_->index(i1, i2)) continue;
      const Complex a = coeffs_[grid_->index(j1, j2)];
      const Complex b = coeffs_[grid_->index(i1, i2)];
      const Complex avg = 0.5 * (a + std::conj(b));
      coeffs_[grid_->index(j1, j2)] = avg;
      coeffs_[grid_->index(i1, i2)] = std::conj(avg);
    }
  }
  is_real_ = true;
}

void SpectralField::apply_dealias_mask() {
  const auto& mask = grid_->dealias_mask();
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (!mask[i]) coeffs_[i] = Complex{0.0, 0.0};
  }
}

double SpectralField::hermitian_defect() const {
  const int n = grid_->n();
  double worst = 0.0;
  for (int j1 = 0; j1 < n; ++j1) {
    const int i1 = grid_->mirror(j1);
    for (int j2 = 0; j2 < n; ++j2) {
      const int i2 = grid_->mirror(j2);
      const Complex diff =
          coeffs_[grid_->index(j1, j2)] - std::conj(coeffs_[grid_->index(i1, i2)]);
      worst = std::max(worst, std::abs(diff));
    }
  }
  return worst;
}

double SpectralField::max_abs() const {
  double worst = 0.0;
  for (const Complex& c : coeffs_) worst = std::max(worst, std::abs(c));
  return worst;
}

bool SpectralField::all_finite() const {
  for (const Complex& c : coeffs_) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) return false;
  }
  return true;
}

RealVec to_physical(const SpectralField& f) {
  const auto& grid = f.grid();
  ComplexVec out(grid.size());
  grid.dft().backward(f.coeffs().data(), out.data());
  RealVec samples(grid.size());
  for (std::size_t i = 0; i < out.size(); ++i) samples[i] = out[i].real();
  return samples;
}

SpectralField from_physical(GridPtr grid, std::span<const double> samples) {
  if (samples.size() != grid->size()) {
    throw InvalidInput("sample count does not match grid");
  }
  ComplexVec in(grid->size());
  for (std::size_t i = 0; i < in.size(); ++i) in[i] = Complex{samples[i], 0.0};
  SpectralField f(std::move(grid));
  f.grid().dft().forward(in.data(), f.coeffs().data());
  const double scale = 1.0 / static_cast<double>(f.size());
  for (Complex& c : f.coeffs()) c *= scale;
  f.symmetrize();
  return f;
}

}  // namespace bdsim::spectral
