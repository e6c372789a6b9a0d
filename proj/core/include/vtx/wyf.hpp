#pragma once

#include <vector>

#include "vtx/arakawa.hpp"
#include "vtx/grid.hpp"
#include "vtx/parallel.hpp"

namespace vtx {

/// Linear zonal current u0(y) = f0 + f1 y.
struct ShearFlow {
  double f0 = 0.0;
  double f1 = 0.0;

  double u0(double y) const { return f0 + f1 * y; }
  /// Integral of u0 from 0 to y; the ramp separating xi from eta.
  double ramp(double y) const { return f0 * y + 0.5 * f1 * y * y; }

  bool operator==(const ShearFlow&) const = default;
};

/// P(y) = 1 + 2 u0(y)
double coeff_P(const ShearFlow& shear, double y);
/// Q(y) = y + u0''(y) + integral_0^y u0 = y + f0 y + f1 y^2 / 2
double coeff_Q(const ShearFlow& shear, double y);

enum class ModelKind { wyf, zk_limit };

/// wyf evolves xi under the sheared WYF equation. zk_limit evolves the
/// ZK field phi directly: phi_T = -2 phi phi_x - d/dx lap(phi), plus
/// +2 J[lap(phi), phi] when include_jacobian is set (the image of the WYF
/// Jacobian term under xi = -phi). The shear is ignored in zk_limit.
struct Model {
  ModelKind kind = ModelKind::wyf;
  bool include_jacobian = true;
  JacobianScheme jacobian{};

  bool operator==(const Model&) const = default;
};

/// Evaluates dxi/dT on a fixed grid with preallocated scratch.
///
/// For kind=wyf:
///   dxi/dT = 2 xi xi_x + P(y) d/dx lap(xi) - 2 Q(y) xi_x - 2 J[lap(xi), xi]
/// with d/dx lap = dxxx + mixed_x_yy.
class RhsOperator {
 public:
  RhsOperator(const Grid2D& grid, const ShearFlow& shear, const Model& model,
              RowExecutor exec = RowExecutor{});

  /// xi must carry current ghosts. Writes the interior of out and
  /// refreshes its ghosts.
  void operator()(const Field2D& xi, Field2D& out);

  const Grid2D& grid() const { return grid_; }
  const ShearFlow& shear() const { return shear_; }
  const Model& model() const { return model_; }

 private:
  Grid2D grid_;
  ShearFlow shear_;
  Model model_;
  RowExecutor exec_;
  double nonlinear_coeff_;
  double jacobian_coeff_;
  std::vector<double> p_row_;
  std::vector<double> q2_row_;  // 2 Q(y)
  Field2D eyy_;   // unnormalized y second difference, interior rows, all columns
  Field2D ex_;    // unnormalized x first difference (no-Jacobian path)
  Field2D zeta_;
  Field2D jac_;
  Jacobian4Kernel kernel4_;
};

/// Upper bound on the frequency magnitude of the linear part
/// P(y) d/dx lap - 2 Q(y) d/dx over all grid modes and rows, from the
/// symbols of the difference stencils. RK4 is stable on the imaginary axis
/// while dt times this bound stays below 2 sqrt(2).
double linear_frequency_bound(const Grid2D& grid, const ShearFlow& shear, const Model& model);

/// One-shot convenience wrapper around RhsOperator.
Field2D rhs(const Field2D& xi, const ShearFlow& shear, const Model& model);

struct ScaleParams {
  double E = 2.0;
  double S = 1.0;
};

struct NormalizedField {
  Grid2D grid;
  Field2D field;
};

/// Removes E and S: eta' = (1/2) S^(-2/3) E eta on a grid whose x extent
/// and spacing are scaled by S^(-1/3). y is unchanged.
NormalizedField normalize(const Field2D& eta_raw, const ScaleParams& params);

}  // namespace vtx
