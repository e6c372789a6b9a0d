#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <stdexcept>
#include <vector>

#include "vtx/grid.hpp"

// Binary field snapshot, little-endian throughout:
//   offset  0  char[8]  "VTXFLD01"
//   offset  8  u32      nx
//   offset 12  u32      ny (intervals; the payload has ny+1 rows)
//   offset 16  f64      lx
//   offset 24  f64      ly
//   offset 32  f64      time
//   offset 40  u8       field id (0 = xi, 1 = eta)
//   offset 41  u8[7]    reserved, zero
//   offset 48  f64[nx * (ny+1)] interior samples, x fastest

namespace vtx {

enum class FieldId : std::uint8_t { xi = 0, eta = 1 };

struct SnapshotHeader {
  std::uint32_t nx = 0;
  std::uint32_t ny = 0;
  double lx = 0.0;
  double ly = 0.0;
  double time = 0.0;
  FieldId field = FieldId::xi;
};

inline constexpr std::size_t kSnapshotHeaderBytes = 48;

enum class FormatErrorKind { bad_magic, truncated, bad_dimensions, bad_field_id, trailing_bytes };

class FormatError : public std::runtime_error {
 public:
  FormatError(FormatErrorKind kind, const std::string& message) : std::runtime_error(message), kind_(kind) {}
  FormatErrorKind kind() const { return kind_; }

 private:
  FormatErrorKind kind_;
};

/// File-system failure while reading or writing run outputs.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Snapshot {
  SnapshotHeader header;
  Field2D field;
};

std::size_t snapshot_size(const Grid2D& grid);

/// Interior samples of a free-slip field, x fastest.
std::vector<std::uint8_t> encode_snapshot(const Field2D& field, double time, FieldId id);
/// Validates magic, dimensions and length; ghosts of the result are applied.
Snapshot decode_snapshot(std::span<const std::uint8_t> bytes);

void write_snapshot(const std::filesystem::path& path, const Field2D& field, double time, FieldId id);
Snapshot read_snapshot(const std::filesystem::path& path);

}  // namespace vtx
