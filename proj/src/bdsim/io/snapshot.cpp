#include "bdsim/io/snapshot.hpp"

#include <bit>
#include <cstring>
#include <fstream>

namespace bdsim::io {

static_assert(std::endian::native == std::endian::little,
              "BDSF I/O assumes a little-endian host");

namespace {

// Fixed 32-byte layout; the f64 sits at offset 12, so the header is packed
// manually rather than through a struct.
constexpr std::size_t kHeaderSize = 32;

struct Header {
  std::uint32_t version;
  std::uint32_t n;
  double period;
  std::uint32_t field_count;
  std::uint32_t flags;
};

void pack_header(const Header& h, char* buf) {
  std::memcpy(buf, "BDSF", 4);
  std::memcpy(buf + 4, &h.version, 4);
  std::memcpy(buf + 8, &h.n, 4);
  std::memcpy(buf + 12, &h.period, 8);
  std::memcpy(buf + 20, &h.field_count, 4);
  std::memcpy(buf + 24, &h.flags, 4);
  std::memset(buf + 28, 0, 4);
}

bool unpack_header(const char* buf, Header& h) {
  if (std::memcmp(buf, "BDSF", 4) != 0) return false;
  std::memcpy(&h.version, buf + 4, 4);
  std::memcpy(&h.n, buf + 8, 4);
  std::memcpy(&h.period, buf + 12, 8);
  std::memcpy(&h.field_count, buf + 20, 4);
  std::memcpy(&h.flags, buf + 24, 4);
  return true;
}

}  // namespace

void write_snapshot(const std::string& path,
                    std::initializer_list<const spectral::SpectralField*> fields,
                    std::uint32_t flags) {
  if (fields.size() == 0) throw InvalidInput("snapshot needs at least one field");
  const spectral::SpectralField* first = *fields.begin();
  for (const auto* f : fields) {
    if (&f->grid() != &first->grid()) throw InvalidInput("snapshot fields on different grids");
  }

  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw std::runtime_error("cannot open for writing: " + path);

  Header h{};
  h.version = kSnapshotVersion;
  h.n = static_cast<std::uint32_t>(first->grid().n());
  h.period = first->grid().period();
  h.field_count = static_cast<std::uint32_t>(fields.size());
  h.flags = flags;
  char buf[kHeaderSize];
  pack_header(h, buf);
  os.write(buf, kHeaderSize);
  for (const auto* f : fields) {
    os.write(reinterpret_cast<const char*>(f->coeffs().data()),
             static_cast<std::streamsize>(f->size() * sizeof(Complex)));
  }
  if (!os) throw std::runtime_error("short write: " + path);
}

Snapshot read_snapshot(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("cannot open snapshot: " + path);

  char buf[kHeaderSize];
  is.read(buf, kHeaderSize);
  Header h{};
  if (!is || !unpack_header(buf, h)) {
    throw std::runtime_error("not a BDSF snapshot: " + path);
  }
  if (h.version != kSnapshotVersion) {
    throw std::runtime_error("unsupported BDSF version in " + path);
  }

  Snapshot snap;
  snap.grid = spectral::make_grid(static_cast<int>(h.n), h.period);
  snap.flags = h.flags;
  snap.fields.reserve(h.field_count);
  for (std::uint32_t i = 0; i < h.field_count; ++i) {
    spectral::SpectralField f(snap.grid);
    is.read(reinterpret_cast<char*>(f.coeffs().data()),
            static_cast<std::streamsize>(f.size() * sizeof(Complex)));
    if (!is) throw std::runtime_error("truncated BDSF snapshot: " + path);
    snap.fields.push_back(std::move(f));
  }
  return snap;
}

}  // namespace bdsim::io
