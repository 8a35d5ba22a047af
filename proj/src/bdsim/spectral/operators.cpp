#include "bdsim/spectral/operators.hpp"

#include <cmath>
#include <vector>

#include "bdsim/kernels/mode_kernels.hpp"

namespace bdsim::spectral {

namespace {

void require_same_grid(const SpectralField& a, const SpectralField& b) {
  if (&a.grid() != &b.grid()) throw InvalidInput("fields live on different grids");
}

/// Zero-pad N-grid coefficients into an M-grid array (M > N), FFT ordering.
void embed(const SpectralField& f, int m, ComplexVec& out) {
  const auto& grid = f.grid();
  const int n = grid.n();
  out.assign(static_cast<std::size_t>(m) * m, Complex{0.0, 0.0});
  for (int j1 = 0; j1 < n; ++j1) {
    const int m1 = grid.freq(j1);
    if (2 * std::abs(m1) == n) continue;  // Nyquist row stays zero
    const int p1 = m1 >= 0 ? m1 : m1 + m;
    for (int j2 = 0; j2 < n; ++j2) {
      const int m2 = grid.freq(j2);
      if (2 * std::abs(m2) == n) continue;
      const int p2 = m2 >= 0 ? m2 : m2 + m;
      out[static_cast<std::size_t>(p1) * m + p2] = f.at(j1, j2);
    }
  }
}

/// Truncate M-grid coefficients back to the native grid (Nyquist rows zero).
void extract(const ComplexVec& in, int m, SpectralField& f) {
  const auto& grid = f.grid();
  const int n = grid.n();
  for (int j1 = 0; j1 < n; ++j1) {
    const int m1 = grid.freq(j1);
    for (int j2 = 0; j2 < n; ++j2) {
      const int m2 = grid.freq(j2);
      if (2 * std::abs(m1) == n || 2 * std::abs(m2) == n) {
        f.at(j1, j2) = Complex{0.0, 0.0};
        continue;
      }
      const int p1 = m1 >= 0 ? m1 : m1 + m;
      const int p2 = m2 >= 0 ? m2 : m2 + m;
      f.at(j1, j2) = in[static_cast<std::size_t>(p1) * m + p2];
    }
  }
}

/// Collocation samples (real parts) of f on the size-m transform.
RealVec sample_on(const SpectralField& f, const Dft2d& dft) {
  ComplexVec spec;
  if (dft.n() == f.grid().n()) {
    spec.assign(f.coeffs().begin(), f.coeffs().end());
  } else {
    embed(f, dft.n(), spec);
  }
  ComplexVec phys(spec.size());
  dft.backward(spec.data(), phys.data());
  RealVec samples(spec.size());
  for (std::size_t i = 0; i < phys.size(); ++i) samples[i] = phys[i].real();
  return samples;
}

SpectralField analyze_product(GridPtr grid, const RealVec& samples, const Dft2d& dft) {
  ComplexVec in(samples.size());
  for (std::size_t i = 0; i < in.size(); ++i) in[i] = Complex{samples[i], 0.0};
  ComplexVec spec(samples.size());
  dft.forward(in.data(), spec.data());
  const double scale = 1.0 / static_cast<double>(samples.size());
  for (Complex& c : spec) c *= scale;
  SpectralField out(std::move(grid));
  if (dft.n() == out.grid().n()) {
    std::copy(spec.begin(), spec.end(), out.coeffs().begin());
  } else {
    extract(spec, dft.n(), out);
  }
  out.symmetrize();
  return out;
}

SpectralField apply_real_multiplier(const SpectralField& f, const RealVec& w) {
  SpectralField out = f;
  kernels::active_kernels().scale_real(out.coeffs().data(), w.data(), out.size());
  return out;
}

SpectralField apply_imag_multiplier(const SpectralField& f, const RealVec& w) {
  SpectralField out = f;
  kernels::active_kernels().scale_imag(out.coeffs().data(), w.data(), out.size());
  return out;
}

}  // namespace

SpectralField apply_fractional_laplacian(const SpectralField& f, double alpha) {
  if (alpha < 0.0 && !f.is_mean_zero()) {
    throw InvalidInput("negative-order multiplier on a non-mean-zero field");
  }
  if (alpha == 0.0) return f;
  const auto& grid = f.grid();
  RealVec w(grid.size());
  const double half = 0.5 * alpha;
  w[0] = 0.0;
  for (std::size_t i = 1; i < w.size(); ++i) w[i] = std::pow(grid.k_sq()[i], half);
  return apply_real_multiplier(f, w);
}

SpectralField derivative(const SpectralField& f, int axis) {
  if (axis != 1 && axis != 2) throw InvalidInput("axis must be 1 or 2");
  return apply_imag_multiplier(f, axis == 1 ? f.grid().k1() : f.grid().k2());
}

std::pair<SpectralField, SpectralField> biot_savart(const SpectralField& omega) {
  if (!omega.is_mean_zero()) throw InvalidInput("biot_savart requires mean-zero vorticity");
  if (!omega.is_real()) throw InvalidInput("biot_savart requires a real field");
  const auto& grid = omega.grid();

  // Stream function psi = omega / |k|^2 with the low mantissa bits cleared
  // (Dekker split), so that the per-axis wavenumber products below are exact
  // and k1*u1hat + k2*u2hat cancels bitwise in either evaluation order.
  int qbits = 1;
  while ((1 << qbits) < grid.n() / 2) ++qbits;
  const double split = static_cast<double>((1 << qbits) + 1);
  auto chop = [split](double x) {
    const double c = split * x;
    return c - (c - x);
  };

  SpectralField psi = omega;
  psi.coeffs()[0] = Complex{0.0, 0.0};
  for (std::size_t i = 1; i < psi.size(); ++i) {
    const Complex v = psi.coeffs()[i] / grid.k_sq()[i];
    psi.coeffs()[i] = Complex{chop(v.real()), chop(v.imag())};
  }
  RealVec w2neg(grid.size());
  for (std::size_t i = 0; i < w2neg.size(); ++i) w2neg[i] = -grid.k1()[i];
  return {apply_imag_multiplier(psi, grid.k2()), apply_imag_multiplier(psi, w2neg)};
}

SpectralField dealiased_product(const SpectralField& f, const SpectralField& g,
                                DealiasMode mode) {
  require_same_grid(f, g);
  const auto& grid = f.grid();
  const auto& kt = kernels::active_kernels();
  if (mode == DealiasMode::padded) {
    const Dft2d& dft = grid.dft_padded();
    RealVec a = sample_on(f, dft);
    const RealVec b = sample_on(g, dft);
    kt.mul_real(a.data(), a.data(), b.data(), a.size());
    return analyze_product(f.grid_ptr(), a, dft);
  }
  SpectralField fm = f;
  SpectralField gm = g;
  fm.apply_dealias_mask();
  gm.apply_dealias_mask();
  const Dft2d& dft = grid.dft();
  RealVec a = sample_on(fm, dft);
  const RealVec b = sample_on(gm, dft);
  kt.mul_real(a.data(), a.data(), b.data(), a.size());
  return analyze_product(f.grid_ptr(), a, dft);
}

SpectralField advection(const SpectralField& u1, const SpectralField& u2,
                        const SpectralField& f, DealiasMode mode) {
  require_same_grid(u1, f);
  require_same_grid(u2, f);
  SpectralField out = dealiased_product(u1, derivative(f, 1), mode);
  const SpectralField second = dealiased_product(u2, derivative(f, 2), mode);
  kernels::active_kernels().add_scaled(out.coeffs().data(), second.coeffs().data(), 1.0,
                                       out.size());
  return out;
}

double integrate_product(std::initializer_list<const SpectralField*> fields) {
  if (fields.size() == 0) throw InvalidInput("integrate_product needs at least one field");
  const SpectralField* first = *fields.begin();
  const auto& grid = first->grid();
  const Dft2d& dft = grid.dft_quadrature();
  const auto& kt = kernels::active_kernels();
  RealVec acc;
  bool started = false;
  for (const SpectralField* f : fields) {
    require_same_grid(*first, *f);
    if (!started) {
      acc = sample_on(*f, dft);
      started = true;
    } else {
      const RealVec b = sample_on(*f, dft);
      kt.mul_real(acc.data(), acc.data(), b.data(), acc.size());
    }
  }
  double sum = 0.0;
  for (double v : acc) sum += v;
  const double l = grid.period();
  return sum * (l * l) / static_cast<double>(acc.size());
}

RealVec oversampled_samples(const SpectralField& f) {
  return sample_on(f, f.grid().dft_quadrature());
}

double inner_product(const SpectralField& f, const SpectralField& g) {
  require_same_grid(f, g);
  double sum = 0.0;
  const auto fc = f.coeffs();
  const auto gc = g.coeffs();
  for (std::size_t i = 0; i < fc.size(); ++i) {
    sum += fc[i].real() * gc[i].real() + fc[i].imag() * gc[i].imag();
  }
  const double l = f.grid().period();
  return sum * l * l;
}

}  // namespace bdsim::spectral
