#include "bdsim/kernels/mode_kernels.hpp"

#include <stdexcept>

#if defined(__x86_64__) || defined(__i386__)

#include <immintrin.h>

namespace bdsim::kernels {

namespace {

#define BDSIM_AVX2 __attribute__((target("avx2")))

// [p[0], p[0], p[1], p[1]] — one weight per complex element, duplicated.
BDSIM_AVX2 inline __m256d dup_pairs(const double* p) {
  return _mm256_permute4x64_pd(_mm256_castpd128_pd256(_mm_loadu_pd(p)), 0x50);
}

BDSIM_AVX2 inline __m256d imag_sign(__m256d v) {
  // [-v0, v1, -v2, v3]
  const __m256d sign = _mm256_castsi256_pd(_mm256_set_epi64x(
      0, 0x8000000000000000LL, 0, 0x8000000000000000LL));
  return _mm256_xor_pd(v, sign);
}

BDSIM_AVX2 void scale_real_avx2(std::complex<double>* c, const double* w, std::size_t n) {
  double* d = reinterpret_cast<double*>(c);
  const std::size_t pairs = n / 2;
  for (std::size_t p = 0; p < pairs; ++p) {
    const std::size_t i = 2 * p;
    __m256d v = _mm256_loadu_pd(d + 2 * i);
    _mm256_storeu_pd(d + 2 * i, _mm256_mul_pd(v, dup_pairs(w + i)));
  }
  if (n % 2) {
    const std::size_t i = n - 1;
    d[2 * i] *= w[i];
    d[2 * i + 1] *= w[i];
  }
}

BDSIM_AVX2 void scale_imag_avx2(std::complex<double>* c, const double* w, std::size_t n) {
  double* d = reinterpret_cast<double*>(c);
  const std::size_t pairs = n / 2;
  for (std::size_t p = 0; p < pairs; ++p) {
    const std::size_t i = 2 * p;
    __m256d v = _mm256_loadu_pd(d + 2 * i);
    __m256d swapped = _mm256_permute_pd(v, 0x5);  // [im0, re0, im1, re1]
    _mm256_storeu_pd(d + 2 * i, _mm256_mul_pd(swapped, imag_sign(dup_pairs(w + i))));
  }
  if (n % 2) {
    const std::size_t i = n - 1;
    const double re = d[2 * i], im = d[2 * i + 1];
    d[2 * i] = -w[i] * im;
    d[2 * i + 1] = w[i] * re;
  }
}

BDSIM_AVX2 void mul_real_avx2(double* dst, const double* a, const double* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(dst + i, _mm256_mul_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
  }
  for (; i < n; ++i) dst[i] = a[i] * b[i];
}

BDSIM_AVX2 void add_scaled_avx2(std::complex<double>* dst, const std::complex<double>* src,
                                double s, std::size_t n) {
  double* d = reinterpret_cast<double*>(dst);
  const double* q = reinterpret_cast<const double*>(src);
  const __m256d sv = _mm256_set1_pd(s);
  std::size_t i = 0;
  for (; i + 4 <= 2 * n; i += 4) {
    __m256d acc = _mm256_add_pd(_mm256_loadu_pd(d + i),
                                _mm256_mul_pd(sv, _mm256_loadu_pd(q + i)));
    _mm256_storeu_pd(d + i, acc);
  }
  for (; i < 2 * n; ++i) d[i] += s * q[i];
}

BDSIM_AVX2 void propagator_apply_avx2(std::complex<double>* w, std::complex<double>* t,
                                      const double* m1, const double* m2i,
                                      const double* m3i, const double* m4, std::size_t n) {
  double* dw = reinterpret_cast<double*>(w);
  double* dt = reinterpret_cast<double*>(t);
  const std::size_t pairs = n / 2;
  for (std::size_t p = 0; p < pairs; ++p) {
    const std::size_t i = 2 * p;
    __m256d vw = _mm256_loadu_pd(dw + 2 * i);
    __m256d vt = _mm256_loadu_pd(dt + 2 * i);
    __m256d vw_sw = _mm256_permute_pd(vw, 0x5);
    __m256d vt_sw = _mm256_permute_pd(vt, 0x5);
    __m256d m1d = dup_pairs(m1 + i);
    __m256d m4d = dup_pairs(m4 + i);
    __m256d m2s = imag_sign(dup_pairs(m2i + i));
    __m256d m3s = imag_sign(dup_pairs(m3i + i));
    __m256d nw = _mm256_add_pd(_mm256_mul_pd(m1d, vw), _mm256_mul_pd(m2s, vt_sw));
    __m256d nt = _mm256_add_pd(_mm256_mul_pd(m4d, vt), _mm256_mul_pd(m3s, vw_sw));
    _mm256_storeu_pd(dw + 2 * i, nw);
    _mm256_storeu_pd(dt + 2 * i, nt);
  }
  if (n % 2) {
    const std::size_t i = n - 1;
    const double wre = dw[2 * i], wim = dw[2 * i + 1];
    const double tre = dt[2 * i], tim = dt[2 * i + 1];
    dw[2 * i] = m1[i] * wre - m2i[i] * tim;
    dw[2 * i + 1] = m1[i] * wim + m2i[i] * tre;
    dt[2 * i] = m4[i] * tre - m3i[i] * wim;
    dt[2 * i + 1] = m4[i] * tim + m3i[i] * wre;
  }
}

BDSIM_AVX2 double weighted_norm_sq_avx2(const std::complex<double>* c, const double* w,
                                        std::size_t n) {
  const double* d = reinterpret_cast<const double*>(c);
  __m256d vacc = _mm256_setzero_pd();
  const std::size_t pairs = n / 2;
  for (std::size_t p = 0; p < pairs; ++p) {
    const std::size_t i = 2 * p;
    __m256d v = _mm256_loadu_pd(d + 2 * i);
    vacc = _mm256_add_pd(vacc, _mm256_mul_pd(_mm256_mul_pd(v, v), dup_pairs(w + i)));
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, vacc);
  double acc0 = lanes[0], acc1 = lanes[1], acc2 = lanes[2], acc3 = lanes[3];
  if (n % 2) {
    const std::size_t i = n - 1;
    acc0 += w[i] * (d[2 * i] * d[2 * i]);
    acc1 += w[i] * (d[2 * i + 1] * d[2 * i + 1]);
  }
  return (acc0 + acc1) + (acc2 + acc3);
}

BDSIM_AVX2 double abs_sum_avx2(const std::complex<double>* c, std::size_t n) {
  const double* d = reinterpret_cast<const double*>(c);
  __m256d vacc = _mm256_setzero_pd();
  const std::size_t pairs = n / 2;
  for (std::size_t p = 0; p < pairs; ++p) {
    const std::size_t i = 2 * p;
    __m256d v = _mm256_loadu_pd(d + 2 * i);
    __m256d sq = _mm256_mul_pd(v, v);
    __m256d mag = _mm256_sqrt_pd(_mm256_hadd_pd(sq, sq));
    vacc = _mm256_add_pd(vacc, mag);  // lanes 1,3 duplicate lanes 0,2
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, vacc);
  double acc0 = lanes[0], acc1 = lanes[2];
  if (n % 2) {
    const std::size_t i = n - 1;
    acc0 += __builtin_sqrt(d[2 * i] * d[2 * i] + d[2 * i + 1] * d[2 * i + 1]);
  }
  return acc0 + acc1;
}

const KernelTable kAvx2Table = {
    "avx2",
    scale_real_avx2,
    scale_imag_avx2,
    mul_real_avx2,
    add_scaled_avx2,
    propagator_apply_avx2,
    weighted_norm_sq_avx2,
    abs_sum_avx2,
};

}  // namespace

bool avx2_available() { return __builtin_cpu_supports("avx2"); }

const KernelTable& avx2_kernels() { return kAvx2Table; }

}  // namespace bdsim::kernels

#else  // non-x86: scalar only

namespace bdsim::kernels {

bool avx2_available() { return false; }

const KernelTable& avx2_kernels() {
  throw std::runtime_error("AVX2 kernels not built for this architecture");
}

}  // namespace bdsim::kernels

#endif
