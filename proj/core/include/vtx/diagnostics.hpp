#pragma once

#include <array>

#include "vtx/grid.hpp"
#include "vtx/wyf.hpp"

namespace vtx {

struct Peak {
  double value = 0.0;
  double x = 0.0;
  double y = 0.0;
  double value_at_y1 = 0.0;  ///< maximum over the row nearest y = 1
};

/// Global interior maximum. Ties resolve to the smallest (j, i).
Peak peak(const Field2D& xi);

/// Quadrature weight of row j: hy, halved on the free-slip wall rows.
double row_weight(const Grid2D& grid, int j);

/// Integral of xi (midpoint in x, trapezoid in y).
double mass(const Field2D& xi);
/// Integral of xi^2 / 2.
double p_tilde(const Field2D& xi);
/// Integral of |grad xi|^2 / 2 - xi^3 / 6.
double energy_zk(const Field2D& xi);
/// Integral of r xi minus time * e_x * p_tilde(xi).
std::array<double, 2> momentum_I(const Field2D& xi, double time);

/// 2 * integral dx [(eta_xx + eta_yy + f1) eta_x], top wall minus bottom
/// wall: the rate of change of the mass under the sheared equation.
double boundary_flux_M(const Field2D& xi, const ShearFlow& shear);

/// 2 * integral dx [xi lap(xi) xi_x], top wall minus bottom wall: the
/// surface part of d(p_tilde)/dT.
double p_tilde_surface_term(const Field2D& xi);

/// f1 * integral (xi_x xi_y - xi xi_xy), the volume part of d(p_tilde)/dT.
double p_tilde_drift_term(const Field2D& xi, const ShearFlow& shear);

struct Velocity {
  Field2D vx;
  Field2D vy;
};

/// vx = -xi_y + u0(y) - u0(0), vy = xi_x.
Velocity velocity(const Field2D& xi, const ShearFlow& shear);

/// eta = xi - (f0 y + f1 y^2 / 2); ghosts refreshed.
Field2D reconstruct_eta(const Field2D& xi, const ShearFlow& shear);

struct PlanetParams {
  double omega = 0.0;     ///< rad / s
  double radius = 0.0;    ///< m
  double latitude = 0.0;  ///< rad
  double length_scale_L = 0.0;
  double gravity_g = 0.0;
  double depth_H = 0.0;

  void validate() const;
};

inline constexpr double kSecondsPerYear = 365.25 * 86400.0;

/// Seconds of physical time per unit of T: 1 / (f s beta_hat^2).
double physical_time_factor(const PlanetParams& params);
/// T converted to seconds.
double physical_time(double T, const PlanetParams& params);

/// Great Red Spot reconstruction used for the time conversion example.
PlanetParams jupiter_red_spot();

struct DiagnosticsRecord {
  long step = 0;
  double time = 0.0;
  double peak_value = 0.0;
  double peak_x = 0.0;
  double peak_y = 0.0;
  double peak_value_at_y1 = 0.0;
  double mass = 0.0;
  double p_tilde = 0.0;
  double energy_zk = 0.0;
  std::array<double, 2> momentum_I{};
  double boundary_flux_M = 0.0;
  double p_tilde_drift_term = 0.0;
  double ce_periodic = 0.0;  ///< NaN when the slice spectrum is degenerate
};

struct CESpec;

DiagnosticsRecord make_record(const Field2D& xi, long step, double time, const ShearFlow& shear,
                              const CESpec& ce);

}  // namespace vtx
