#include "vtx/snapshot.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <iterator>
#include <limits>
#include <string>

namespace vtx {
namespace {

constexpr char kMagic[8] = {'V', 'T', 'X', 'F', 'L', 'D', '0', '1'};
// Guards against absurd headers before any allocation (~8 GB payload).
constexpr std::uint64_t kMaxSamples = std::uint64_t{1} << 30;

std::uint8_t* put_u32(std::uint8_t* p, std::uint32_t v) {
  for (int b = 0; b < 4; ++b) *p++ = static_cast<std::uint8_t>(v >> (8 * b));
  return p;
}

std::uint8_t* put_f64(std::uint8_t* p, double v) {
  const auto bits = std::bit_cast<std::uint64_t>(v);
  for (int b = 0; b < 8; ++b) *p++ = static_cast<std::uint8_t>(bits >> (8 * b));
  return p;
}

std::uint32_t get_u32(const std::uint8_t* p) {
  std::uint32_t v = 0;
  for (int b = 0; b < 4; ++b) v |= static_cast<std::uint32_t>(p[b]) << (8 * b);
  return v;
}

double get_f64(const std::uint8_t* p) {
  std::uint64_t v = 0;
  for (int b = 0; b < 8; ++b) v |= static_cast<std::uint64_t>(p[b]) << (8 * b);
  return std::bit_cast<double>(v);
}

}  // namespace

std::size_t snapshot_size(const Grid2D& grid) {
  return kSnapshotHeaderBytes + static_cast<std::size_t>(grid.nx()) * static_cast<std::size_t>(grid.rows()) * 8;
}

std::vector<std::uint8_t> encode_snapshot(const Field2D& field, double time, FieldId id) {
  const Grid2D& g = field.grid();
  if (g.y_boundary() != YBoundary::free_slip) throw std::invalid_argument("snapshots store free-slip fields only");
  std::vector<std::uint8_t> out(snapshot_size(g), 0);
  std::uint8_t* p = std::copy(std::begin(kMagic), std::end(kMagic), out.data());
  p = put_u32(p, static_cast<std::uint32_t>(g.nx()));
  p = put_u32(p, static_cast<std::uint32_t>(g.ny()));
  p = put_f64(p, g.lx());
  p = put_f64(p, g.ly());
  p = put_f64(p, time);
  *p = static_cast<std::uint8_t>(id);
  p = out.data() + kSnapshotHeaderBytes;  // reserved bytes stay zero
  for (int j = 0; j < g.rows(); ++j) {
    const double* r = field.row(j);
    for (int i = 0; i < g.nx(); ++i) p = put_f64(p, r[i]);
  }
  return out;
}

Snapshot decode_snapshot(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < kSnapshotHeaderBytes) {
    throw FormatError(FormatErrorKind::truncated, "snapshot shorter than its " +
                                                      std::to_string(kSnapshotHeaderBytes) + "-byte header");
  }
  if (std::memcmp(bytes.data(), kMagic, sizeof kMagic) != 0) {
    throw FormatError(FormatErrorKind::bad_magic, "snapshot magic is not VTXFLD01");
  }
  SnapshotHeader h;
  h.nx = get_u32(bytes.data() + 8);
  h.ny = get_u32(bytes.data() + 12);
  h.lx = get_f64(bytes.data() + 16);
  h.ly = get_f64(bytes.data() + 24);
  h.time = get_f64(bytes.data() + 32);
  const std::uint8_t id = bytes[40];
  if (id > 1) throw FormatError(FormatErrorKind::bad_field_id, "unknown field id " + std::to_string(id));
  h.field = static_cast<FieldId>(id);

  const std::uint64_t samples = std::uint64_t{h.nx} * (std::uint64_t{h.ny} + 1);
  if (h.nx < static_cast<std::uint32_t>(Grid2D::kMinPoints) || h.ny < static_cast<std::uint32_t>(Grid2D::kMinPoints) ||
      h.nx > static_cast<std::uint32_t>(std::numeric_limits<int>::max() / 2) ||
      h.ny > static_cast<std::uint32_t>(std::numeric_limits<int>::max() / 2) || samples > kMaxSamples ||
      !(h.lx > 0.0) || !(h.ly > 0.0) || !std::isfinite(h.lx) || !std::isfinite(h.ly)) {
    throw FormatError(FormatErrorKind::bad_dimensions, "snapshot dimensions out of range");
  }
  const std::uint64_t expected = kSnapshotHeaderBytes + samples * 8;
  if (bytes.size() < expected) {
    throw FormatError(FormatErrorKind::truncated, "snapshot payload truncated: " + std::to_string(bytes.size()) +
                                                      " of " + std::to_string(expected) + " bytes");
  }
  if (bytes.size() > expected) throw FormatError(FormatErrorKind::trailing_bytes, "snapshot has trailing bytes");

  Grid2D grid(static_cast<int>(h.nx), static_cast<int>(h.ny), h.lx, h.ly);
  Field2D field(grid);
  const std::uint8_t* p = bytes.data() + kSnapshotHeaderBytes;
  for (int j = 0; j < grid.rows(); ++j) {
    double* r = field.row(j);
    for (int i = 0; i < grid.nx(); ++i, p += 8) r[i] = get_f64(p);
  }
  field.apply_boundary();
  return Snapshot{h, std::move(field)};
}

void write_snapshot(const std::filesystem::path& path, const Field2D& field, double time, FieldId id) {
  const auto bytes = encode_snapshot(field, time, id);
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw IoError("cannot open " + path.string() + " for writing");
  os.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!os) throw IoError("failed writing " + path.string());
}

Snapshot read_snapshot(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw IoError("cannot open " + path.string());
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(is)), std::istreambuf_iterator<char>());
  if (is.bad()) throw IoError("failed reading " + path.string());
  return decode_snapshot(bytes);
}

}  // namespace vtx
