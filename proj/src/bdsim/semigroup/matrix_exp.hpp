#pragma once

#include "bdsim/common.hpp"

namespace bdsim::semigroup {

struct Complex2x2 {
  Complex a11, a12, a21, a22;
};

Complex2x2 multiply(const Complex2x2& a, const Complex2x2& b);

/// Max row sum (infinity) norm.
double inf_norm(const Complex2x2& m);

/// exp(M) by scaling-and-squaring on a truncated Taylor series. The matrix
/// is scaled so its norm is <= 1/2; with 14 series terms the truncation
/// remainder is below 2 * (1/2)^15 / 15! < 1e-16 in the scaled norm.
/// Deliberately shares nothing with the eigen-decomposition route.
Complex2x2 expm(const Complex2x2& m);

}  // namespace bdsim::semigroup
