#include "bdsim/semigroup/matrix_exp.hpp"

#include <cmath>

namespace bdsim::semigroup {

Complex2x2 multiply(const Complex2x2& a, const Complex2x2& b) {
  return Complex2x2{
      a.a11 * b.a11 + a.a12 * b.a21, a.a11 * b.a12 + a.a12 * b.a22,
      a.a21 * b.a11 + a.a22 * b.a21, a.a21 * b.a12 + a.a22 * b.a22,
  };
}

double inf_norm(const Complex2x2& m) {
  const double r1 = std::abs(m.a11) + std::abs(m.a12);
  const double r2 = std::abs(m.a21) + std::abs(m.a22);
  return std::max(r1, r2);
}

Complex2x2 expm(const Complex2x2& m) {
  const double norm = inf_norm(m);
  int squarings = 0;
  if (norm > 0.5) {
    squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
  }
  const double scale = std::ldexp(1.0, -squarings);
  const Complex2x2 x{m.a11 * scale, m.a12 * scale, m.a21 * scale, m.a22 * scale};

  const Complex2x2 identity{1.0, 0.0, 0.0, 1.0};
  Complex2x2 sum = identity;
  Complex2x2 term = identity;
  for (int j = 1; j <= 14; ++j) {
    term = multiply(term, x);
    const double inv = 1.0 / j;
    term.a11 *= inv;
    term.a12 *= inv;
    term.a21 *= inv;
    term.a22 *= inv;
    sum.a11 += term.a11;
    sum.a12 += term.a12;
    sum.a21 += term.a21;
    sum.a22 += term.a22;
  }
  for (int j = 0; j < squarings; ++j) sum = multiply(sum, sum);
  return sum;
}

}  // namespace bdsim::semigroup
