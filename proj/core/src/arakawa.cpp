#include "vtx/arakawa.hpp"

#include <stdexcept>
#include <string>

#include "vtx/stencil.hpp"

namespace vtx {
namespace {

void require_same_grid(const Field2D& a, const Field2D& b) {
  if (!(a.grid() == b.grid())) throw std::invalid_argument("jacobian arguments live on different grids");
}

// Second-order forms as printed by Arakawa, at a single point.
double jacobian2_at(const double* z, const double* e, long s) {
  const long E = 1, W = -1, N = s, S = -s;
  const double dd = (z[E] - z[W]) * (e[N] - e[S]) - (z[N] - z[S]) * (e[E] - e[W]);
  const double dc = z[E] * (e[E + N] - e[E + S]) - z[W] * (e[W + N] - e[W + S]) -
                    z[N] * (e[E + N] - e[W + N]) + z[S] * (e[E + S] - e[W + S]);
  const double cd = z[E + N] * (e[N] - e[E]) - z[W + S] * (e[W] - e[S]) -
                    z[W + N] * (e[N] - e[W]) + z[E + S] * (e[E] - e[S]);
  return dd + dc + cd;
}

}  // namespace

JacobianScheme JacobianScheme::of_order(int order) {
  if (order != 2 && order != 4) {
    throw std::invalid_argument("jacobian order must be 2 or 4, got " + std::to_string(order));
  }
  return JacobianScheme{order};
}

Jacobian4Kernel::Jacobian4Kernel(const Grid2D& grid)
    : ex_(grid), zx_(grid), v_(grid), ey_(grid), zy_(grid), u_(grid) {}

void Jacobian4Kernel::compute(const Field2D& zeta, const Field2D& xi, Field2D& out,
                              const RowExecutor& exec) {
  const Grid2D& g = xi.grid();
  const int nx = g.nx();
  const int rows = g.rows();
  const long s = g.stride();

  exec.for_rows(-Grid2D::kGhost, rows + Grid2D::kGhost, [&](int j0, int j1) {
    for (int j = j0; j < j1; ++j) {
      const double* e = xi.row(j);
      const double* z = zeta.row(j);
      double* ex = ex_.row(j);
      double* zx = zx_.row(j);
      double* v = v_.row(j);
      for (int i = 0; i < nx; ++i) {
        ex[i] = stencil::d1(e + i, 1);
        zx[i] = stencil::d1(z + i, 1);
        v[i] = z[i] * ex[i] - e[i] * zx[i];
      }
      if (j < 0 || j >= rows) continue;
      double* ey = ey_.row(j);
      double* zy = zy_.row(j);
      double* u = u_.row(j);
      for (int i = -Grid2D::kGhost; i < nx + Grid2D::kGhost; ++i) {
        ey[i] = stencil::d1(e + i, s);
        zy[i] = stencil::d1(z + i, s);
        u[i] = z[i] * ey[i] - e[i] * zy[i];
      }
    }
  });

  const double scale = 1.0 / (432.0 * g.hx() * g.hy());
  exec.for_rows(0, rows, [&](int j0, int j1) {
    for (int j = j0; j < j1; ++j) {
      const double* ex = ex_.row(j);
      const double* zx = zx_.row(j);
      const double* ey = ey_.row(j);
      const double* zy = zy_.row(j);
      const double* u = u_.row(j);
      const double* v = v_.row(j);
      double* o = out.row(j);
      for (int i = 0; i < nx; ++i) {
        const double dd = zx[i] * ey[i] - zy[i] * ex[i];
        o[i] = (dd + stencil::d1(u + i, 1) - stencil::d1(v + i, s)) * scale;
      }
    }
  });
}

Field2D jacobian(const Field2D& zeta, const Field2D& xi, JacobianScheme scheme) {
  require_same_grid(zeta, xi);
  scheme = JacobianScheme::of_order(scheme.order);
  const Grid2D& g = xi.grid();
  Field2D out(g);
  if (scheme.order == 4) {
    Jacobian4Kernel kernel(g);
    kernel.compute(zeta, xi, out);
  } else {
    const long s = g.stride();
    const double scale = 1.0 / (12.0 * g.hx() * g.hy());
    for (int j = 0; j < g.rows(); ++j) {
      const double* z = zeta.row(j);
      const double* e = xi.row(j);
      double* o = out.row(j);
      for (int i = 0; i < g.nx(); ++i) o[i] = jacobian2_at(z + i, e + i, s) * scale;
    }
  }
  out.apply_boundary();
  return out;
}

JacobianInvariants jacobian_invariant_report(const Field2D& zeta, const Field2D& xi,
                                             JacobianScheme scheme) {
  const Field2D j = jacobian(zeta, xi, scheme);
  JacobianInvariants r;
  const Grid2D& g = xi.grid();
  for (int row = 0; row < g.rows(); ++row) {
    for (int i = 0; i < g.nx(); ++i) {
      const double jv = j(i, row);
      r.sum_j += jv;
      r.sum_xi_j += xi(i, row) * jv;
      r.sum_zeta_j += zeta(i, row) * jv;
    }
  }
  return r;
}

}  // namespace vtx
