#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace vtx {

/// Boundary treatment along y. The production domain has free-slip walls;
/// the doubly periodic torus exists for discrete-invariant checks.
enum class YBoundary { free_slip, periodic };

/// Rectangular domain [-lx, lx] x [-ly, ly], periodic in x.
///
/// x is cell-sampled: nx columns at x(i) = -lx + i*hx, no duplicated seam.
/// With free-slip walls y carries ny+1 rows including both walls; on the
/// periodic torus it carries ny rows.
class Grid2D {
 public:
  static constexpr int kGhost = 2;
  static constexpr int kMinPoints = 8;

  Grid2D(int nx, int ny, double lx, double ly,
         YBoundary y_boundary = YBoundary::free_slip);

  int nx() const { return nx_; }
  int ny() const { return ny_; }
  double lx() const { return lx_; }
  double ly() const { return ly_; }
  double hx() const { return hx_; }
  double hy() const { return hy_; }
  YBoundary y_boundary() const { return y_boundary_; }

  /// Number of stored sample rows in y.
  int rows() const { return y_boundary_ == YBoundary::free_slip ? ny_ + 1 : ny_; }
  /// Row pitch of the padded storage.
  int stride() const { return nx_ + 2 * kGhost; }
  std::size_t padded_size() const {
    return static_cast<std::size_t>(stride()) * static_cast<std::size_t>(rows() + 2 * kGhost);
  }

  double x(int i) const { return -lx_ + i * hx_; }
  double y(int j) const { return -ly_ + j * hy_; }

  /// Row index nearest to the given y (clamped to the stored rows).
  int nearest_row(double y) const;

  bool operator==(const Grid2D&) const = default;

 private:
  int nx_;
  int ny_;
  double lx_;
  double ly_;
  double hx_;
  double hy_;
  YBoundary y_boundary_;
};

/// Validated constructor for the free-slip production grid.
Grid2D make_grid(int nx, int ny, double lx, double ly);

/// 200 x 100 points on [-20, 20] x [-10, 10], h = 0.2.
Grid2D default_grid();

/// Scalar samples on a Grid2D with two ghost layers on every side.
/// Storage is row-major with x fastest.
class Field2D {
 public:
  explicit Field2D(const Grid2D& grid, double fill = 0.0);

  const Grid2D& grid() const { return grid_; }

  /// i in [-2, nx+1], j in [-2, rows+1].
  double& operator()(int i, int j) { return data_[offset(i, j)]; }
  double operator()(int i, int j) const { return data_[offset(i, j)]; }

  /// Pointer to column 0 of row j; valid for offsets [-2, nx+1].
  double* row(int j) { return data_.data() + offset(0, j); }
  const double* row(int j) const { return data_.data() + offset(0, j); }

  std::span<double> storage() { return data_; }
  std::span<const double> storage() const { return data_; }

  /// Fills ghost layers: periodic wrap in x, even reflection about the
  /// wall rows in y (or periodic wrap on the torus).
  void apply_boundary();

  /// Sets interior samples from f(x, y), then refreshes ghosts.
  template <class F>
  void assign(F&& f) {
    for (int j = 0; j < grid_.rows(); ++j) {
      double* r = row(j);
      const double yv = grid_.y(j);
      for (int i = 0; i < grid_.nx(); ++i) r[i] = f(grid_.x(i), yv);
    }
    apply_boundary();
  }

  /// First non-finite interior sample in scan order (j, then i).
  std::optional<std::pair<int, int>> first_non_finite() const;
  bool all_finite() const { return !first_non_finite().has_value(); }

  Field2D& operator+=(const Field2D& other);
  Field2D& operator*=(double a);

  /// Interior samples only, row-major with x fastest.
  std::vector<double> interior() const;

  bool operator==(const Field2D&) const = default;

 private:
  std::size_t offset(int i, int j) const {
    return static_cast<std::size_t>(j + Grid2D::kGhost) * static_cast<std::size_t>(grid_.stride()) +
           static_cast<std::size_t>(i + Grid2D::kGhost);
  }

  Grid2D grid_;
  std::vector<double> data_;
};

/// amplitude * exp(-(x-x0)^2 - (y-y0)^2), boundary applied.
Field2D sample_gaussian(const Grid2D& grid, double amplitude, double x0, double y0);

/// Shortest signed periodic displacement x - x0 on a domain of length 2*lx.
double periodic_dx(double x, double x0, double lx);

}  // namespace vtx
