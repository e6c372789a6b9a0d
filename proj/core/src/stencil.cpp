#include "vtx/stencil.hpp"

namespace vtx {
namespace {

template <class Kernel>
Field2D map_interior(const Field2D& u, Kernel&& kernel) {
  const Grid2D& g = u.grid();
  Field2D out(g);
  const long s = g.stride();
  for (int j = 0; j < g.rows(); ++j) {
    const double* src = u.row(j);
    double* dst = out.row(j);
    for (int i = 0; i < g.nx(); ++i) dst[i] = kernel(src + i, s);
  }
  out.apply_boundary();
  return out;
}

}  // namespace

Field2D dx(const Field2D& u) {
  const double scale = 1.0 / (12.0 * u.grid().hx());
  return map_interior(u, [scale](const double* p, long) { return stencil::d1(p, 1) * scale; });
}

Field2D dxx(const Field2D& u) {
  const double h = u.grid().hx();
  const double scale = 1.0 / (12.0 * h * h);
  return map_interior(u, [scale](const double* p, long) { return stencil::d2(p, 1) * scale; });
}

Field2D dxxx(const Field2D& u) {
  const double h = u.grid().hx();
  const double scale = 1.0 / (2.0 * h * h * h);
  return map_interior(u, [scale](const double* p, long) { return stencil::d3(p, 1) * scale; });
}

Field2D dy(const Field2D& u) {
  const double scale = 1.0 / (12.0 * u.grid().hy());
  return map_interior(u, [scale](const double* p, long s) { return stencil::d1(p, s) * scale; });
}

Field2D dyy(const Field2D& u) {
  const double l = u.grid().hy();
  const double scale = 1.0 / (12.0 * l * l);
  return map_interior(u, [scale](const double* p, long s) { return stencil::d2(p, s) * scale; });
}

Field2D mixed_x_yy(const Field2D& u) {
  const double h = u.grid().hx();
  const double l = u.grid().hy();
  const double scale = 1.0 / (144.0 * h * l * l);
  return map_interior(u, [scale](const double* p, long s) {
    // Outer x-weights (-1, 8, -8, 1) applied to the inner y second differences.
    const double sum = -stencil::d2(p + 2, s) + 8.0 * stencil::d2(p + 1, s) -
                       8.0 * stencil::d2(p - 1, s) + stencil::d2(p - 2, s);
    return sum * scale;
  });
}

Field2D laplacian(const Field2D& u) {
  const double h = u.grid().hx();
  const double l = u.grid().hy();
  const double sx = 1.0 / (12.0 * h * h);
  const double sy = 1.0 / (12.0 * l * l);
  return map_interior(u, [sx, sy](const double* p, long s) {
    return stencil::d2(p, 1) * sx + stencil::d2(p, s) * sy;
  });
}

Field2D apply(DerivativeKind kind, const Field2D& u) {
  switch (kind.order) {
    case DerivativeOrder::first:
      return kind.axis == Axis::x ? dx(u) : dy(u);
    case DerivativeOrder::second:
      return kind.axis == Axis::x ? dxx(u) : dyy(u);
    case DerivativeOrder::third:
      return dxxx(u);
    case DerivativeOrder::mixed_x_yy:
      return mixed_x_yy(u);
    case DerivativeOrder::laplacian:
      return laplacian(u);
  }
  return laplacian(u);
}

}  // namespace vtx
