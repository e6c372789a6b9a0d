#include "vtx/diagnostics.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "vtx/entropy.hpp"
#include "vtx/stencil.hpp"

namespace vtx {
namespace {

// Sum over interior samples of w_j * hx * g(i, j).
template <class G>
double integrate(const Grid2D& grid, G&& g) {
  double total = 0.0;
  for (int j = 0; j < grid.rows(); ++j) {
    double row = 0.0;
    for (int i = 0; i < grid.nx(); ++i) row += g(i, j);
    total += row * row_weight(grid, j);
  }
  return total * grid.hx();
}

// Integral over x of g(i, j) on wall row j.
template <class G>
double line_integral(const Grid2D& grid, int j, G&& g) {
  double total = 0.0;
  for (int i = 0; i < grid.nx(); ++i) total += g(i, j);
  return total * grid.hx();
}

void require_walls(const Grid2D& grid) {
  if (grid.y_boundary() != YBoundary::free_slip) {
    throw std::invalid_argument("surface terms need free-slip walls");
  }
}

}  // namespace

Peak peak(const Field2D& xi) {
  const Grid2D& g = xi.grid();
  Peak p;
  p.value = -std::numeric_limits<double>::infinity();
  int bi = 0, bj = 0;
  for (int j = 0; j < g.rows(); ++j) {
    const double* r = xi.row(j);
    for (int i = 0; i < g.nx(); ++i) {
      if (r[i] > p.value) {
        p.value = r[i];
        bi = i;
        bj = j;
      }
    }
  }
  p.x = g.x(bi);
  p.y = g.y(bj);
  const double* r1 = xi.row(g.nearest_row(1.0));
  p.value_at_y1 = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < g.nx(); ++i) p.value_at_y1 = std::max(p.value_at_y1, r1[i]);
  return p;
}

double row_weight(const Grid2D& grid, int j) {
  if (grid.y_boundary() == YBoundary::free_slip && (j == 0 || j == grid.rows() - 1)) return 0.5 * grid.hy();
  return grid.hy();
}

double mass(const Field2D& xi) {
  return integrate(xi.grid(), [&](int i, int j) { return xi(i, j); });
}

double p_tilde(const Field2D& xi) {
  return integrate(xi.grid(), [&](int i, int j) { return 0.5 * xi(i, j) * xi(i, j); });
}

double energy_zk(const Field2D& xi) {
  const Field2D gx = dx(xi);
  const Field2D gy = dy(xi);
  return integrate(xi.grid(), [&](int i, int j) {
    const double v = xi(i, j);
    return 0.5 * (gx(i, j) * gx(i, j) + gy(i, j) * gy(i, j)) - v * v * v / 6.0;
  });
}

std::array<double, 2> momentum_I(const Field2D& xi, double time) {
  const Grid2D& g = xi.grid();
  const double ix = integrate(g, [&](int i, int j) { return g.x(i) * xi(i, j); });
  const double iy = integrate(g, [&](int i, int j) { return g.y(j) * xi(i, j); });
  return {ix - time * p_tilde(xi), iy};
}

double boundary_flux_M(const Field2D& xi, const ShearFlow& /*shear*/) {
  const Grid2D& g = xi.grid();
  require_walls(g);
  // eta_x = xi_x and lap(eta) + f1 = lap(xi). The discrete laplacian of xi
  // at the wall is the one the evolution sees, so the ramp is not removed.
  const Field2D ex = dx(xi);
  const Field2D lap = laplacian(xi);
  auto wall = [&](int j) { return line_integral(g, j, [&](int i, int jj) { return lap(i, jj) * ex(i, jj); }); };
  return 2.0 * (wall(g.rows() - 1) - wall(0));
}

double p_tilde_surface_term(const Field2D& xi) {
  const Grid2D& g = xi.grid();
  require_walls(g);
  const Field2D ex = dx(xi);
  const Field2D lap = laplacian(xi);
  auto wall = [&](int j) {
    return line_integral(g, j, [&](int i, int jj) { return xi(i, jj) * lap(i, jj) * ex(i, jj); });
  };
  return 2.0 * (wall(g.rows() - 1) - wall(0));
}

double p_tilde_drift_term(const Field2D& xi, const ShearFlow& shear) {
  if (shear.f1 == 0.0) return 0.0;
  const Field2D ex = dx(xi);
  const Field2D ey = dy(xi);
  const Field2D exy = dx(ey);
  return shear.f1 * integrate(xi.grid(), [&](int i, int j) {
    return ex(i, j) * ey(i, j) - xi(i, j) * exy(i, j);
  });
}

Velocity velocity(const Field2D& xi, const ShearFlow& shear) {
  Velocity v{dy(xi), dx(xi)};
  const Grid2D& g = xi.grid();
  const double offset = shear.u0(0.0);
  for (int j = 0; j < g.rows(); ++j) {
    const double background = shear.u0(g.y(j)) - offset;
    double* r = v.vx.row(j);
    for (int i = 0; i < g.nx(); ++i) r[i] = -r[i] + background;
  }
  v.vx.apply_boundary();
  return v;
}

Field2D reconstruct_eta(const Field2D& xi, const ShearFlow& shear) {
  Field2D eta = xi;
  const Grid2D& g = xi.grid();
  for (int j = 0; j < g.rows(); ++j) {
    const double ramp = shear.ramp(g.y(j));
    double* r = eta.row(j);
    for (int i = 0; i < g.nx(); ++i) r[i] -= ramp;
  }
  eta.apply_boundary();
  return eta;
}

void PlanetParams::validate() const {
  if (!(omega > 0.0 && radius > 0.0 && length_scale_L > 0.0 && gravity_g > 0.0 && depth_H > 0.0)) {
    throw std::invalid_argument("planet parameters must be positive");
  }
  if (!(latitude > 0.0 && latitude < 0.5 * std::numbers::pi)) {
    throw std::invalid_argument("latitude must lie in (0, pi/2)");
  }
}

double physical_time_factor(const PlanetParams& p) {
  p.validate();
  const double f = 2.0 * p.omega * std::sin(p.latitude);
  const double beta = 2.0 * p.omega / p.radius * std::cos(p.latitude);
  const double beta_hat = beta * p.length_scale_L / f;
  const double lambda_r = std::sqrt(p.gravity_g * p.depth_H) / f;
  const double s_hat = lambda_r * lambda_r / (p.length_scale_L * p.length_scale_L);
  return 1.0 / (f * s_hat * beta_hat * beta_hat);
}

double physical_time(double T, const PlanetParams& params) { return T * physical_time_factor(params); }

PlanetParams jupiter_red_spot() {
  PlanetParams p;
  p.omega = 1.7585e-4;
  p.radius = 7.1492e7;
  p.latitude = 22.5 * std::numbers::pi / 180.0;
  p.length_scale_L = 1.0e7;
  p.gravity_g = 24.79;
  p.depth_H = 554.0;
  return p;
}

DiagnosticsRecord make_record(const Field2D& xi, long step, double time, const ShearFlow& shear,
                              const CESpec& ce) {
  DiagnosticsRecord r;
  r.step = step;
  r.time = time;
  const Peak pk = peak(xi);
  r.peak_value = pk.value;
  r.peak_x = pk.x;
  r.peak_y = pk.y;
  r.peak_value_at_y1 = pk.value_at_y1;
  r.mass = mass(xi);
  r.p_tilde = p_tilde(xi);
  r.energy_zk = energy_zk(xi);
  r.momentum_I = momentum_I(xi, time);
  if (xi.grid().y_boundary() == YBoundary::free_slip) r.boundary_flux_M = boundary_flux_M(xi, shear);
  r.p_tilde_drift_term = p_tilde_drift_term(xi, shear);
  r.ce_periodic = ce_of_state(xi, ce).value_or(std::numeric_limits<double>::quiet_NaN());
  return r;
}

}  // namespace vtx
