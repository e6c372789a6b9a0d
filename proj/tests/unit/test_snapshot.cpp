#include <cmath>
#include <cstring>
#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "vtx/snapshot.hpp"

using namespace vtx;

namespace {

Field2D patterned(const Grid2D& g) {
  Field2D f(g);
  for (int j = 0; j < g.rows(); ++j)
    for (int i = 0; i < g.nx(); ++i) f(i, j) = std::sin(0.3 * i) * (j + 1) - 0.125 * j;
  f.apply_boundary();
  return f;
}

FormatErrorKind kind_of(std::span<const std::uint8_t> bytes) {
  try {
    decode_snapshot(bytes);
  } catch (const FormatError& e) {
    return e.kind();
  }
  FAIL("expected FormatError");
  return FormatErrorKind::bad_magic;
}

}  // namespace

TEST_CASE("size of a snapshot on the default grid") {
  CHECK(snapshot_size(default_grid()) == 161648);
  CHECK(161648 == kSnapshotHeaderBytes + 200 * 101 * 8);
}

TEST_CASE("encode and decode are inverse") {
  const Grid2D g(16, 8, 4.0, 2.0);
  const Field2D f = patterned(g);
  const auto bytes = encode_snapshot(f, 1.25, FieldId::eta);
  REQUIRE(bytes.size() == snapshot_size(g));
  CHECK(std::memcmp(bytes.data(), "VTXFLD01", 8) == 0);
  const Snapshot s = decode_snapshot(bytes);
  CHECK(s.header.nx == 16);
  CHECK(s.header.ny == 8);
  CHECK(s.header.lx == 4.0);
  CHECK(s.header.ly == 2.0);
  CHECK(s.header.time == 1.25);
  CHECK(s.header.field == FieldId::eta);
  for (int j = 0; j < g.rows(); ++j)
    for (int i = 0; i < g.nx(); ++i) CHECK(s.field(i, j) == f(i, j));
  // Ghosts are restored.
  CHECK(s.field(-1, 3) == f(-1, 3));
  CHECK(s.field(4, -1) == f(4, -1));
  CHECK(encode_snapshot(s.field, 1.25, FieldId::eta) == bytes);
}

TEST_CASE("malformed inputs") {
  const Grid2D g(8, 8, 1.0, 1.0);
  const auto good = encode_snapshot(patterned(g), 0.0, FieldId::xi);

  auto bad = good;
  bad[0] = 'X';
  CHECK(kind_of(bad) == FormatErrorKind::bad_magic);

  auto cut = good;
  cut.pop_back();
  CHECK(kind_of(cut) == FormatErrorKind::truncated);
  CHECK(kind_of(std::span(good).first(20)) == FormatErrorKind::truncated);

  auto longer = good;
  longer.push_back(0);
  CHECK(kind_of(longer) == FormatErrorKind::trailing_bytes);

  auto id = good;
  id[40] = 7;
  CHECK(kind_of(id) == FormatErrorKind::bad_field_id);

  auto dims = good;
  dims[8] = 0;  // nx = 0
  CHECK(kind_of(dims) == FormatErrorKind::bad_dimensions);
}

TEST_CASE("files") {
  const auto dir = std::filesystem::temp_directory_path() / "vtx_snapshot_test";
  std::filesystem::create_directories(dir);
  const Grid2D g(12, 10, 3.0, 2.0);
  const Field2D f = patterned(g);
  write_snapshot(dir / "a.vtx", f, 2.0, FieldId::xi);
  CHECK(std::filesystem::file_size(dir / "a.vtx") == snapshot_size(g));
  const Snapshot s = read_snapshot(dir / "a.vtx");
  CHECK(s.header.time == 2.0);
  CHECK(s.field(5, 5) == f(5, 5));
  CHECK_THROWS_AS(read_snapshot(dir / "missing.vtx"), IoError);
  CHECK_THROWS_AS(write_snapshot(dir / "no" / "such" / "dir.vtx", f, 0.0, FieldId::xi), IoError);
  std::filesystem::remove_all(dir);
}
