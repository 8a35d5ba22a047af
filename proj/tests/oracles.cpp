#include "oracles.hpp"

#include <cmath>
#include <random>

namespace bdsim::testing {

using spectral::SpectralField;

SpectralField direct_convolution(const SpectralField& f, const SpectralField& g) {
  const auto& grid = f.grid();
  const int half = grid.n() / 2 - 1;
  SpectralField h(f.grid_ptr());
  for (int k1 = -half; k1 <= half; ++k1) {
    for (int k2 = -half; k2 <= half; ++k2) {
      Complex sum{0.0, 0.0};
      for (int p1 = -half; p1 <= half; ++p1) {
        const int q1 = k1 - p1;
        if (q1 < -half || q1 > half) continue;
        for (int p2 = -half; p2 <= half; ++p2) {
          const int q2 = k2 - p2;
          if (q2 < -half || q2 > half) continue;
          sum += f.mode(p1, p2) * g.mode(q1, q2);
        }
      }
      h.mode(k1, k2) = sum;
    }
  }
  return h;
}

double quadrature_2d(const std::function<double(double, double)>& f, double period,
                     int samples) {
  const double h = period / samples;
  double sum = 0.0;
  for (int i = 0; i < samples; ++i) {
    for (int j = 0; j < samples; ++j) {
      sum += f(i * h, j * h);
    }
  }
  return sum * h * h;
}

SpectralField random_field(spectral::GridPtr grid, std::uint64_t seed, int band_hi,
                           double decay) {
  const int n = grid->n();
  if (band_hi == 0) band_hi = n / 3;
  SpectralField f(std::move(grid));
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  for (int m1 = 0; m1 <= band_hi; ++m1) {
    const int m2_begin = m1 == 0 ? 1 : -band_hi;
    for (int m2 = m2_begin; m2 <= band_hi; ++m2) {
      const double mag = std::hypot(m1, m2);
      if (mag > band_hi) continue;
      if (3 * std::abs(m1) > n || 3 * std::abs(m2) > n) continue;
      const double damp = std::exp(-decay * mag);
      const Complex z{damp * normal(rng), damp * normal(rng)};
      f.mode(m1, m2) = z;
      f.mode(-m1, -m2) = std::conj(z);
    }
  }
  return f;
}

}  // namespace bdsim::testing
