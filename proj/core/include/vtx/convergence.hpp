#pragma once

#include <span>
#include <string>
#include <vector>

#include "vtx/stencil.hpp"
#include "vtx/timestep.hpp"

namespace vtx {

/// Least-squares slope of log(error) against log(h).
double fitted_order(std::span<const double> h, std::span<const double> error);

struct StencilStudy {
  std::string name;
  DerivativeKind kind;
  std::vector<double> h;
  std::vector<double> max_error;
  double order = 0.0;
};

/// Refinement study for dx, dxx, dxxx, dy, dyy, laplacian and mixed_x_yy on
/// u = sin(2 pi x / lx) cos(pi y / ly) over [-lx, lx] x [-ly, ly] with
/// ny = nx / 2. The cosine is even about both walls, so the reflected
/// ghosts are exact.
std::vector<StencilStudy> stencil_convergence(std::span<const int> nx_levels, double lx = 20.0, double ly = 10.0);

struct TimeStudy {
  Scheme scheme = Scheme::rk4;
  std::vector<double> dt;
  /// Max-norm difference between the terminal states at dt[k] and dt[k+1].
  std::vector<double> differences;
  /// differences[k] / differences[k+1]; about 2^p for a scheme of order p.
  std::vector<double> ratios;
};

/// Integrates a c = 1 ZK deposit in zk_limit mode on a 100 x 50 grid to
/// t_end with dt0, dt0/2, ..., halving `levels - 1` times. asselin is the
/// leapfrog filter coefficient; any nonzero value makes leapfrog first order.
TimeStudy time_convergence(Scheme scheme, double dt0, double t_end, int levels = 3, double asselin = 0.0);

}  // namespace vtx
