#include "bdsim/kernels/mode_kernels.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace bdsim::kernels {

namespace {

void scale_real_scalar(std::complex<double>* c, const double* w, std::size_t n) {
  double* d = reinterpret_cast<double*>(c);
  for (std::size_t i = 0; i < n; ++i) {
    d[2 * i] *= w[i];
    d[2 * i + 1] *= w[i];
  }
}

void scale_imag_scalar(std::complex<double>* c, const double* w, std::size_t n) {
  double* d = reinterpret_cast<double*>(c);
  for (std::size_t i = 0; i < n; ++i) {
    const double re = d[2 * i];
    const double im = d[2 * i + 1];
    d[2 * i] = -w[i] * im;
    d[2 * i + 1] = w[i] * re;
  }
}

void mul_real_scalar(double* dst, const double* a, const double* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = a[i] * b[i];
}

void add_scaled_scalar(std::complex<double>* dst, const std::complex<double>* src,
                       double s, std::size_t n) {
  double* d = reinterpret_cast<double*>(dst);
  const double* q = reinterpret_cast<const double*>(src);
  for (std::size_t i = 0; i < 2 * n; ++i) d[i] += s * q[i];
}

void propagator_apply_scalar(std::complex<double>* w, std::complex<double>* t,
                             const double* m1, const double* m2i,
                             const double* m3i, const double* m4, std::size_t n) {
  double* dw = reinterpret_cast<double*>(w);
  double* dt = reinterpret_cast<double*>(t);
  for (std::size_t i = 0; i < n; ++i) {
    const double wre = dw[2 * i], wim = dw[2 * i + 1];
    const double tre = dt[2 * i], tim = dt[2 * i + 1];
    dw[2 * i] = m1[i] * wre - m2i[i] * tim;
    dw[2 * i + 1] = m1[i] * wim + m2i[i] * tre;
    dt[2 * i] = m4[i] * tre - m3i[i] * wim;
    dt[2 * i + 1] = m4[i] * tim + m3i[i] * wre;
  }
}

// Four partial sums striding over pairs of complex elements, mirroring the
// AVX2 lane layout [w*re0^2, w*im0^2, w*re1^2, w*im1^2].
double weighted_norm_sq_scalar(const std::complex<double>* c, const double* w,
                               std::size_t n) {
  const double* d = reinterpret_cast<const double*>(c);
  double acc0 = 0.0, acc1 = 0.0, acc2 = 0.0, acc3 = 0.0;
  const std::size_t pairs = n / 2;
  for (std::size_t p = 0; p < pairs; ++p) {
    const std::size_t i = 2 * p;
    acc0 += w[i] * (d[2 * i] * d[2 * i]);
    acc1 += w[i] * (d[2 * i + 1] * d[2 * i + 1]);
    acc2 += w[i + 1] * (d[2 * i + 2] * d[2 * i + 2]);
    acc3 += w[i + 1] * (d[2 * i + 3] * d[2 * i + 3]);
  }
  if (n % 2) {
    const std::size_t i = n - 1;
    acc0 += w[i] * (d[2 * i] * d[2 * i]);
    acc1 += w[i] * (d[2 * i + 1] * d[2 * i + 1]);
  }
  return (acc0 + acc1) + (acc2 + acc3);
}

// Two partial sums over even/odd complex elements; |c| computed as
// sqrt(re*re + im*im) in that association order.
double abs_sum_scalar(const std::complex<double>* c, std::size_t n) {
  const double* d = reinterpret_cast<const double*>(c);
  double acc0 = 0.0, acc1 = 0.0;
  const std::size_t pairs = n / 2;
  for (std::size_t p = 0; p < pairs; ++p) {
    const std::size_t i = 2 * p;
    acc0 += std::sqrt(d[2 * i] * d[2 * i] + d[2 * i + 1] * d[2 * i + 1]);
    acc1 += std::sqrt(d[2 * i + 2] * d[2 * i + 2] + d[2 * i + 3] * d[2 * i + 3]);
  }
  if (n % 2) {
    const std::size_t i = n - 1;
    acc0 += std::sqrt(d[2 * i] * d[2 * i] + d[2 * i + 1] * d[2 * i + 1]);
  }
  return acc0 + acc1;
}

const KernelTable kScalarTable = {
    "scalar",
    scale_real_scalar,
    scale_imag_scalar,
    mul_real_scalar,
    add_scaled_scalar,
    propagator_apply_scalar,
    weighted_norm_sq_scalar,
    abs_sum_scalar,
};

std::atomic<const KernelTable*> g_active{nullptr};

const KernelTable* resolve_default() {
  if (const char* env = std::getenv("BDSIM_KERNELS")) {
    const std::string v(env);
    if (v == "scalar") return &scalar_kernels();
    if (v == "avx2" && avx2_available()) return &avx2_kernels();
    // "auto" and anything unrecognized fall through to detection
  }
  return avx2_available() ? &avx2_kernels() : &scalar_kernels();
}

}  // namespace

const KernelTable& scalar_kernels() { return kScalarTable; }

const KernelTable& active_kernels() {
  const KernelTable* t = g_active.load(std::memory_order_acquire);
  if (!t) {
    t = resolve_default();
    g_active.store(t, std::memory_order_release);
  }
  return *t;
}

void select_kernels(std::string_view name) {
  if (name == "scalar") {
    g_active.store(&scalar_kernels(), std::memory_order_release);
  } else if (name == "avx2") {
    if (!avx2_available()) throw std::runtime_error("AVX2 not available on this CPU");
    g_active.store(&avx2_kernels(), std::memory_order_release);
  } else if (name == "auto") {
    g_active.store(resolve_default(), std::memory_order_release);
  } else {
    throw std::runtime_error("unknown kernel set: " + std::string(name));
  }
}

}  // namespace bdsim::kernels
