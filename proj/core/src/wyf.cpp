#include "vtx/wyf.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "vtx/stencil.hpp"

namespace vtx {

double coeff_P(const ShearFlow& shear, double y) { return 1.0 + 2.0 * shear.u0(y); }

double coeff_Q(const ShearFlow& shear, double y) {
  // u0 is linear, so its second derivative vanishes.
  return y + shear.ramp(y);
}

RhsOperator::RhsOperator(const Grid2D& grid, const ShearFlow& shear, const Model& model, RowExecutor exec)
    : grid_(grid),
      shear_(shear),
      model_(model),
      exec_(exec),
      nonlinear_coeff_(model.kind == ModelKind::wyf ? 2.0 : -2.0),
      jacobian_coeff_(model.kind == ModelKind::wyf ? -2.0 : 2.0),
      p_row_(static_cast<std::size_t>(grid.rows())),
      q2_row_(static_cast<std::size_t>(grid.rows())),
      eyy_(grid),
      ex_(grid),
      zeta_(grid),
      jac_(grid),
      kernel4_(grid) {
  model_.jacobian = JacobianScheme::of_order(model.jacobian.order);
  for (int j = 0; j < grid.rows(); ++j) {
    const double y = grid.y(j);
    if (model.kind == ModelKind::wyf) {
      p_row_[static_cast<std::size_t>(j)] = coeff_P(shear, y);
      q2_row_[static_cast<std::size_t>(j)] = 2.0 * coeff_Q(shear, y);
    } else {
      p_row_[static_cast<std::size_t>(j)] = -1.0;
      q2_row_[static_cast<std::size_t>(j)] = 0.0;
    }
  }
}

void RhsOperator::operator()(const Field2D& xi, Field2D& out) {
  if (!(xi.grid() == grid_) || !(out.grid() == grid_)) {
    throw std::invalid_argument("rhs fields do not match the operator grid");
  }
  const int nx = grid_.nx();
  const int rows = grid_.rows();
  const long s = grid_.stride();
  const double h = grid_.hx();
  const double l = grid_.hy();
  const double sxx = 1.0 / (12.0 * h * h);
  const double syy = 1.0 / (12.0 * l * l);
  const bool with_jacobian = model_.include_jacobian;

  exec_.for_rows(0, rows, [&](int j0, int j1) {
    for (int j = j0; j < j1; ++j) {
      const double* e = xi.row(j);
      double* yy = eyy_.row(j);
      for (int i = -Grid2D::kGhost; i < nx + Grid2D::kGhost; ++i) yy[i] = stencil::d2(e + i, s);
      if (with_jacobian) {
        double* z = zeta_.row(j);
        for (int i = 0; i < nx; ++i) z[i] = stencil::d2(e + i, 1) * sxx + yy[i] * syy;
      } else {
        double* ex = ex_.row(j);
        for (int i = 0; i < nx; ++i) ex[i] = stencil::d1(e + i, 1);
      }
    }
  });

  const Field2D* ex_raw = &ex_;
  if (with_jacobian) {
    zeta_.apply_boundary();
    if (model_.jacobian.order == 4) {
      kernel4_.compute(zeta_, xi, jac_, exec_);
      ex_raw = &kernel4_.xi_dx_raw();
    } else {
      jac_ = jacobian(zeta_, xi, model_.jacobian);
      for (int j = 0; j < rows; ++j) {
        const double* e = xi.row(j);
        double* ex = ex_.row(j);
        for (int i = 0; i < nx; ++i) ex[i] = stencil::d1(e + i, 1);
      }
    }
  }

  const double sx = 1.0 / (12.0 * h);
  const double sxxx = 1.0 / (2.0 * h * h * h);
  const double smixed = 1.0 / (144.0 * h * l * l);
  const double a_nl = nonlinear_coeff_;
  const double a_j = with_jacobian ? jacobian_coeff_ : 0.0;
  exec_.for_rows(0, rows, [&](int j0, int j1) {
    for (int j = j0; j < j1; ++j) {
      const double* e = xi.row(j);
      const double* ex = ex_raw->row(j);
      const double* yy = eyy_.row(j);
      const double* jac = jac_.row(j);
      const double p = p_row_[static_cast<std::size_t>(j)];
      const double q2 = q2_row_[static_cast<std::size_t>(j)];
      double* o = out.row(j);
      for (int i = 0; i < nx; ++i) {
        const double xi_x = ex[i] * sx;
        const double mixed = (-yy[i + 2] + 8.0 * yy[i + 1] - 8.0 * yy[i - 1] + yy[i - 2]) * smixed;
        const double dlap = stencil::d3(e + i, 1) * sxxx + mixed;
        double v = a_nl * e[i] * xi_x + p * dlap - q2 * xi_x;
        if (with_jacobian) v += a_j * jac[i];
        o[i] = v;
      }
    }
  });
  out.apply_boundary();
}

double linear_frequency_bound(const Grid2D& grid, const ShearFlow& shear, const Model& model) {
  const double h = grid.hx();
  const double l = grid.hy();
  // d2y symbol spans [-64 / (12 l^2), 0]; the symbol is affine in it.
  const double d2y_min = -64.0 / (12.0 * l * l);
  constexpr int kSamples = 512;
  double bound = 0.0;
  for (int j = 0; j < grid.rows(); ++j) {
    const double y = grid.y(j);
    const double p = model.kind == ModelKind::wyf ? coeff_P(shear, y) : -1.0;
    const double q2 = model.kind == ModelKind::wyf ? 2.0 * coeff_Q(shear, y) : 0.0;
    for (int k = 0; k <= kSamples; ++k) {
      const double t = std::numbers::pi * k / kSamples;
      const double s3 = (std::sin(2.0 * t) - 2.0 * std::sin(t)) / (h * h * h);
      const double s1 = (8.0 * std::sin(t) - std::sin(2.0 * t)) / (6.0 * h);
      for (double s2 : {0.0, d2y_min}) {
        bound = std::max(bound, std::abs(p * (s3 + s1 * s2) - q2 * s1));
      }
    }
  }
  return bound;
}

Field2D rhs(const Field2D& xi, const ShearFlow& shear, const Model& model) {
  RhsOperator op(xi.grid(), shear, model);
  Field2D out(xi.grid());
  op(xi, out);
  return out;
}

NormalizedField normalize(const Field2D& eta_raw, const ScaleParams& params) {
  if (!(params.E > 0.0) || !(params.S > 0.0)) throw std::invalid_argument("E and S must be positive");
  const double amp = 0.5 * std::pow(params.S, -2.0 / 3.0) * params.E;
  const double xscale = std::pow(params.S, -1.0 / 3.0);
  const Grid2D& g = eta_raw.grid();
  Grid2D ng(g.nx(), g.ny(), g.lx() * xscale, g.ly(), g.y_boundary());
  Field2D out(ng);
  for (int j = -Grid2D::kGhost; j < g.rows() + Grid2D::kGhost; ++j) {
    for (int i = -Grid2D::kGhost; i < g.nx() + Grid2D::kGhost; ++i) out(i, j) = amp * eta_raw(i, j);
  }
  return NormalizedField{ng, out};
}

}  // namespace vtx
