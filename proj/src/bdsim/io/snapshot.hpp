#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bdsim/spectral/spectral_field.hpp"

namespace bdsim::io {

// BDSF field snapshot: 32-byte little-endian header
//   magic "BDSF" | version u32 | N u32 | L f64 | field-count u32 | flags u32
//   | reserved u32
// followed by row-major complex-interleaved f64 coefficients per field.
inline constexpr std::uint32_t kSnapshotVersion = 1;
inline constexpr std::uint32_t kFlagRealFields = 1u << 0;
inline constexpr std::uint32_t kFlagMeanZero = 1u << 1;

struct Snapshot {
  spectral::GridPtr grid;
  std::vector<spectral::SpectralField> fields;
  std::uint32_t flags = 0;
};

void write_snapshot(const std::string& path,
                    std::initializer_list<const spectral::SpectralField*> fields,
                    std::uint32_t flags);

Snapshot read_snapshot(const std::string& path);

}  // namespace bdsim::io
