#include "bdsim/spectral/fft.hpp"

#include <fftw3.h>

#include <mutex>

namespace bdsim::spectral {

namespace {
// FFTW planning mutates global state; execution does not.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}
}  // namespace

Dft2d::Dft2d(int n) : n_(n) {
  ComplexVec scratch_in(size()), scratch_out(size());
  auto* in = reinterpret_cast<fftw_complex*>(scratch_in.data());
  auto* out = reinterpret_cast<fftw_complex*>(scratch_out.data());
  std::lock_guard<std::mutex> lock(planner_mutex());
  fwd_ = fftw_plan_dft_2d(n_, n_, in, out, FFTW_FORWARD, FFTW_ESTIMATE);
  bwd_ = fftw_plan_dft_2d(n_, n_, in, out, FFTW_BACKWARD, FFTW_ESTIMATE);
}

Dft2d::~Dft2d() {
  std::lock_guard<std::mutex> lock(planner_mutex());
  fftw_destroy_plan(fwd_);
  fftw_destroy_plan(bwd_);
}

void Dft2d::forward(const Complex* in, Complex* out) const {
  fftw_execute_dft(fwd_, reinterpret_cast<fftw_complex*>(const_cast<Complex*>(in)),
                   reinterpret_cast<fftw_complex*>(out));
}

void Dft2d::backward(const Complex* in, Complex* out) const {
  fftw_execute_dft(bwd_, reinterpret_cast<fftw_complex*>(const_cast<Complex*>(in)),
                   reinterpret_cast<fftw_complex*>(out));
}

}  // namespace bdsim::spectral
