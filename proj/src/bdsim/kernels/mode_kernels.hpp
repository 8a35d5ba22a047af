#pragma once

#include <complex>
#include <cstddef>
#include <string_view>

namespace bdsim::kernels {

// Data-parallel inner loops over Fourier modes. Every operation has a scalar
// reference implementation and, on x86-64, an AVX2 variant selected at
// runtime. The scalar code mirrors the SIMD lane structure (four partial
// accumulators for norm reductions, two for magnitude sums, identical
// combine order), so the two paths produce bit-identical results; the
// equivalence tests assert exact equality.
//
// Complex arrays are interleaved (re, im) doubles; weight arrays hold one
// double per complex element.
struct KernelTable {
  const char* name;

  // c[i] *= w[i]
  void (*scale_real)(std::complex<double>* c, const double* w, std::size_t n);
  // c[i] *= i * w[i]
  void (*scale_imag)(std::complex<double>* c, const double* w, std::size_t n);
  // dst[i] = a[i] * b[i]
  void (*mul_real)(double* dst, const double* a, const double* b, std::size_t n);
  // dst[i] += s * src[i]
  void (*add_scaled)(std::complex<double>* dst, const std::complex<double>* src,
                     double s, std::size_t n);
  // Per-mode 2x2 update of the pair (w, t):
  //   w[i] <- m1[i]*w[i] + i*m2i[i]*t[i]
  //   t[i] <- i*m3i[i]*w[i] + m4[i]*t[i]
  // (diagonal entries real, off-diagonal entries purely imaginary).
  void (*propagator_apply)(std::complex<double>* w, std::complex<double>* t,
                           const double* m1, const double* m2i,
                           const double* m3i, const double* m4, std::size_t n);
  // sum_i w[i] * |c[i]|^2
  double (*weighted_norm_sq)(const std::complex<double>* c, const double* w,
                             std::size_t n);
  // sum_i |c[i]|
  double (*abs_sum)(const std::complex<double>* c, std::size_t n);
};

const KernelTable& scalar_kernels();
bool avx2_available();
const KernelTable& avx2_kernels();  // only valid to call if avx2_available()

/// Active table: resolved once from BDSIM_KERNELS (scalar|avx2|auto) or the
/// CPU capabilities; select_kernels() overrides it explicitly.
const KernelTable& active_kernels();
void select_kernels(std::string_view name);

}  // namespace bdsim::kernels
