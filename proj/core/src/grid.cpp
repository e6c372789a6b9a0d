#include "vtx/grid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace vtx {

Grid2D::Grid2D(int nx, int ny, double lx, double ly, YBoundary y_boundary)
    : nx_(nx), ny_(ny), lx_(lx), ly_(ly), hx_(0.0), hy_(0.0), y_boundary_(y_boundary) {
  if (nx <= 0 || ny <= 0) {
    throw std::invalid_argument("grid point counts must be positive (nx=" + std::to_string(nx) +
                                ", ny=" + std::to_string(ny) + ")");
  }
  if (nx < kMinPoints || ny < kMinPoints) {
    throw std::invalid_argument("grid needs at least " + std::to_string(kMinPoints) +
                                " points per axis for the 5-point stencils");
  }
  if (!(lx > 0.0) || !(ly > 0.0) || !std::isfinite(lx) || !std::isfinite(ly)) {
    throw std::invalid_argument("domain half-widths must be positive and finite");
  }
  hx_ = 2.0 * lx / nx;
  hy_ = 2.0 * ly / ny;
}

int Grid2D::nearest_row(double y) const {
  const long j = std::lround((y + ly_) / hy_);
  return static_cast<int>(std::clamp<long>(j, 0, rows() - 1));
}

Grid2D make_grid(int nx, int ny, double lx, double ly) { return Grid2D(nx, ny, lx, ly); }

Grid2D default_grid() { return Grid2D(200, 100, 20.0, 10.0); }

Field2D::Field2D(const Grid2D& grid, double fill) : grid_(grid), data_(grid.padded_size(), fill) {}

void Field2D::apply_boundary() {
  const int nx = grid_.nx();
  const int rows = grid_.rows();
  for (int j = 0; j < rows; ++j) {
    double* r = row(j);
    r[-2] = r[nx - 2];
    r[-1] = r[nx - 1];
    r[nx] = r[0];
    r[nx + 1] = r[1];
  }
  const int stride = grid_.stride();
  auto copy_row = [&](int dst, int src) {
    std::copy_n(row(src) - Grid2D::kGhost, stride, row(dst) - Grid2D::kGhost);
  };
  if (grid_.y_boundary() == YBoundary::free_slip) {
    // Even reflection about the wall rows 0 and ny.
    const int top = rows - 1;
    for (int k = 1; k <= Grid2D::kGhost; ++k) {
      copy_row(-k, k);
      copy_row(top + k, top - k);
    }
  } else {
    for (int k = 1; k <= Grid2D::kGhost; ++k) {
      copy_row(-k, rows - k);
      copy_row(rows - 1 + k, k - 1);
    }
  }
}

std::optional<std::pair<int, int>> Field2D::first_non_finite() const {
  for (int j = 0; j < grid_.rows(); ++j) {
    const double* r = row(j);
    for (int i = 0; i < grid_.nx(); ++i) {
      if (!std::isfinite(r[i])) return std::make_pair(i, j);
    }
  }
  return std::nullopt;
}

Field2D& Field2D::operator+=(const Field2D& other) {
  if (!(other.grid_ == grid_)) throw std::invalid_argument("field grids differ");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
  return *this;
}

Field2D& Field2D::operator*=(double a) {
  for (double& v : data_) v *= a;
  return *this;
}

std::vector<double> Field2D::interior() const {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(grid_.nx()) * static_cast<std::size_t>(grid_.rows()));
  for (int j = 0; j < grid_.rows(); ++j) {
    const double* r = row(j);
    out.insert(out.end(), r, r + grid_.nx());
  }
  return out;
}

Field2D sample_gaussian(const Grid2D& grid, double amplitude, double x0, double y0) {
  Field2D f(grid);
  f.assign([&](double x, double y) {
    const double dx = x - x0;
    const double dy = y - y0;
    return amplitude * std::exp(-dx * dx - dy * dy);
  });
  return f;
}

double periodic_dx(double x, double x0, double lx) {
  const double period = 2.0 * lx;
  double d = x - x0;
  d -= period * std::round(d / period);
  return d;
}

}  // namespace vtx
