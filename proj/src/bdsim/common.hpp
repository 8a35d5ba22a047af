#pragma once

#include <complex>
#include <cstddef>
#include <new>
#include <stdexcept>
#include <string>
#include <vector>

namespace bdsim {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kTwoPi = 2.0 * kPi;

using Complex = std::complex<double>;

/// Thrown on rejected inputs (precondition violations of the public API).
class InvalidInput : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown on malformed configuration files or CLI arguments.
class ConfigError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// 64-byte aligned allocator so mode arrays are safe for both FFTW
/// new-array execution and aligned SIMD loads.
template <class T>
struct AlignedAllocator {
  using value_type = T;
  static constexpr std::size_t alignment = 64;

  AlignedAllocator() noexcept = default;
  template <class U>
  AlignedAllocator(const AlignedAllocator<U>&) noexcept {}

  T* allocate(std::size_t n) {
    return static_cast<T*>(::operator new(n * sizeof(T), std::align_val_t{alignment}));
  }
  void deallocate(T* p, std::size_t) noexcept {
    ::operator delete(p, std::align_val_t{alignment});
  }
  bool operator==(const AlignedAllocator&) const noexcept { return true; }
  bool operator!=(const AlignedAllocator&) const noexcept { return false; }
};

using ComplexVec = std::vector<Complex, AlignedAllocator<Complex>>;
using RealVec = std::vector<double, AlignedAllocator<double>>;

}  // namespace bdsim
