#pragma once

#include "vtx/grid.hpp"

// Fourth-order centered differences on a Field2D. Every operator reads
// the input's ghost layers (call apply_boundary() after mutating the
// interior) and returns a fresh field with its ghosts refreshed.

namespace vtx {

enum class Axis { x, y };
enum class DerivativeOrder { first, second, third, mixed_x_yy, laplacian };

struct DerivativeKind {
  Axis axis = Axis::x;
  DerivativeOrder order = DerivativeOrder::first;
};

/// (-u[i+2] + 8u[i+1] - 8u[i-1] + u[i-2]) / (12 hx)
Field2D dx(const Field2D& u);
/// (-u[i+2] + 16u[i+1] - 30u[i] + 16u[i-1] - u[i-2]) / (12 hx^2)
Field2D dxx(const Field2D& u);
/// (u[i+2] - 2u[i+1] + 2u[i-1] - u[i-2]) / (2 hx^3). Second-order accurate.
Field2D dxxx(const Field2D& u);
Field2D dy(const Field2D& u);
Field2D dyy(const Field2D& u);
/// d^3/dx dy^2 as the fused 20-point tensor stencil over 144 hx hy^2.
Field2D mixed_x_yy(const Field2D& u);
Field2D laplacian(const Field2D& u);

Field2D apply(DerivativeKind kind, const Field2D& u);

namespace stencil {

// Unnormalized weights; row pointers may be indexed in [-2, 2].
inline double d1(const double* u, long s) {
  return -u[2 * s] + 8.0 * u[s] - 8.0 * u[-s] + u[-2 * s];
}
inline double d2(const double* u, long s) {
  return -u[2 * s] + 16.0 * u[s] - 30.0 * u[0] + 16.0 * u[-s] - u[-2 * s];
}
inline double d3(const double* u, long s) {
  return u[2 * s] - 2.0 * u[s] + 2.0 * u[-s] - u[-2 * s];
}

}  // namespace stencil
}  // namespace vtx
