#pragma once

#include "vtx/grid.hpp"
#include "vtx/parallel.hpp"

namespace vtx {

/// Arakawa Jacobian J[zeta, xi] = (J_DD + J_DC + J_CD) / 3, built either
/// from the classic second-order differences or from the fourth-order
/// five-point differences substituted into the same three forms.
struct JacobianScheme {
  int order = 4;

  /// Throws std::invalid_argument unless order is 2 or 4.
  static JacobianScheme of_order(int order);

  bool operator==(const JacobianScheme&) const = default;
};

/// Interior values of J[zeta, xi]; ghosts refreshed. Both fields must
/// live on the same grid and carry current ghosts.
Field2D jacobian(const Field2D& zeta, const Field2D& xi, JacobianScheme scheme = {});

struct JacobianInvariants {
  double sum_j = 0.0;
  double sum_xi_j = 0.0;
  double sum_zeta_j = 0.0;
};

/// Plain grid sums of J, xi*J and zeta*J. Arakawa's second-order scheme
/// makes all three vanish on a doubly periodic grid.
JacobianInvariants jacobian_invariant_report(const Field2D& zeta, const Field2D& xi,
                                             JacobianScheme scheme = {});

/// Fourth-order Jacobian with reusable scratch storage.
///
/// J_CD(zeta, xi) is taken as -J_DC(xi, zeta), so the average reduces to
///   432 h l J = Dx(zeta) Dy(xi) - Dy(zeta) Dx(xi) + Dx(U) - Dy(V)
/// with U = zeta Dy(xi) - xi Dy(zeta), V = zeta Dx(xi) - xi Dx(zeta) and
/// D the unnormalized (-1, 8, -8, 1) difference.
class Jacobian4Kernel {
 public:
  explicit Jacobian4Kernel(const Grid2D& grid);

  /// Writes J into the interior of out (ghosts untouched).
  void compute(const Field2D& zeta, const Field2D& xi, Field2D& out,
               const RowExecutor& exec = RowExecutor{});

  /// Unnormalized x-difference of xi from the last compute(), valid on
  /// every stored row and interior column.
  const Field2D& xi_dx_raw() const { return ex_; }

 private:
  Field2D ex_, zx_, v_;
  Field2D ey_, zy_, u_;
};

}  // namespace vtx
