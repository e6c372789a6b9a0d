#pragma once

#include <memory>
#include <vector>

#include "vtx/grid.hpp"

namespace vtx {

struct RadialInterpolant;

/// Tabulated circularly symmetric ZK solitary wave, the nodeless solution of
///   phi'' + phi'/r = c phi - phi^2,  phi'(0) = 0,  phi(inf) = 0,
/// on r_k = k dr for k = 0..values.size()-1. Beyond tail_radius the values
/// follow tail_amplitude * K0(sqrt(c) r).
struct RadialProfile {
  double c = 1.0;
  double r_max = 0.0;
  double dr = 0.0;
  std::vector<double> values;
  double tail_radius = 0.0;
  double tail_amplitude = 0.0;

  double center() const { return values.front(); }

  /// Monotone cubic interpolation inside the table, Bessel tail outside.
  /// Requires build_interpolant() after the table was filled or edited.
  double operator()(double r) const;

  void build_interpolant();

 private:
  std::shared_ptr<const RadialInterpolant> interp_;
};

struct RadialSolveOptions {
  double r_max = 0.0;  ///< 0 selects 30 / sqrt(c)
  double dr = 1e-3;
  double tol = 1e-12;  ///< bracket width on phi(0), relative to max(1, phi(0))
};

/// Bisection shooting on phi(0) within [c, 10c]. A trajectory that
/// crosses zero overshoots (amplitude too large); one that turns upward
/// while positive undershoots. Throws std::runtime_error if no bracket.
RadialProfile solve_radial(double c, const RadialSolveOptions& options = {});

/// Rebuilds a profile from an (r, phi) table such as the CSV written by
/// `vortexlab zk-profile`. The Bessel tail is matched at the last row.
RadialProfile profile_from_table(double c, const std::vector<double>& r,
                                 const std::vector<double>& phi);

/// Exact plane solitary wave (3c/2) sech^2[(sqrt(c)/2)((x - ct) cos t + y sin t)].
struct PlaneSoliton {
  double c = 1.0;
  double theta = 0.0;

  double operator()(double x, double y, double t) const;
};

Field2D plane_soliton_field(const Grid2D& grid, const PlaneSoliton& soliton, double t);

/// profile(r) with r measured from (x0, y0); x distances use the nearest
/// periodic image.
Field2D deposit_radial(const Grid2D& grid, const RadialProfile& profile, double x0, double y0);

}  // namespace vtx
