#include <cmath>
#include <numbers>
#include <stdexcept>

#include "doctest.h"
#include "vtx/convergence.hpp"
#include "vtx/stencil.hpp"

using namespace vtx;

namespace {

double max_abs_diff(const Field2D& a, const Field2D& b) {
  double m = 0.0;
  for (int j = 0; j < a.grid().rows(); ++j) {
    for (int i = 0; i < a.grid().nx(); ++i) m = std::max(m, std::abs(a(i, j) - b(i, j)));
  }
  return m;
}

Field2D smooth_field(const Grid2D& g) {
  Field2D u(g);
  const double a = 2.0 * std::numbers::pi / g.lx(), b = std::numbers::pi / g.ly();
  u.assign([&](double x, double y) { return std::sin(a * x + 0.3) * std::cos(b * y) + 0.5 * std::cos(2 * a * x) * std::cos(3 * b * y); });
  return u;
}

}  // namespace

TEST_CASE("third difference reproduces its discrete symbol") {
  const Grid2D g = default_grid();
  const double k = 3.0 * std::numbers::pi / g.lx(), h = g.hx();
  Field2D u(g);
  u.assign([&](double x, double) { return std::sin(k * x); });
  const Field2D d = dxxx(u);
  const double symbol = (2.0 * std::sin(2.0 * k * h) - 4.0 * std::sin(k * h)) / (2.0 * h * h * h);
  for (int i = 0; i < g.nx(); i += 7) CHECK(d(i, 40) == doctest::Approx(symbol * std::cos(k * g.x(i))).epsilon(1e-10));
}

TEST_CASE("first and second differences are exact on quartics away from the walls") {
  const Grid2D g = make_grid(16, 40, 4.0, 2.0);
  Field2D u(g);
  u.assign([](double, double y) { return y * y * y * y - 2.0 * y * y * y + y; });
  const Field2D d1 = dy(u), d2 = dyy(u);
  for (int j = 2; j < g.rows() - 2; ++j) {
    const double y = g.y(j);
    CHECK(d1(5, j) == doctest::Approx(4 * y * y * y - 6 * y * y + 1).epsilon(1e-11));
    CHECK(d2(5, j) == doctest::Approx(12 * y * y - 12 * y).epsilon(1e-10).scale(1.0));
  }
}

TEST_CASE("mixed stencil equals the composition dx(dyy)") {
  const Grid2D g = default_grid();
  const Field2D u = smooth_field(g);
  CHECK(max_abs_diff(mixed_x_yy(u), dx(dyy(u))) < 1e-12);
}

TEST_CASE("laplacian equals dxx + dyy") {
  const Grid2D g = default_grid();
  const Field2D u = smooth_field(g);
  Field2D sum = dxx(u);
  sum += dyy(u);
  CHECK(max_abs_diff(laplacian(u), sum) < 1e-12);
}

TEST_CASE("apply dispatches every derivative kind") {
  const Grid2D g = make_grid(32, 16, 4.0, 2.0);
  const Field2D u = smooth_field(g);
  CHECK(apply({Axis::x, DerivativeOrder::first}, u) == dx(u));
  CHECK(apply({Axis::y, DerivativeOrder::first}, u) == dy(u));
  CHECK(apply({Axis::x, DerivativeOrder::second}, u) == dxx(u));
  CHECK(apply({Axis::y, DerivativeOrder::second}, u) == dyy(u));
  CHECK(apply({Axis::x, DerivativeOrder::third}, u) == dxxx(u));
  CHECK(apply({Axis::x, DerivativeOrder::mixed_x_yy}, u) == mixed_x_yy(u));
  CHECK(apply({Axis::x, DerivativeOrder::laplacian}, u) == laplacian(u));
}

TEST_CASE("derivatives of a constant vanish") {
  const Field2D u(default_grid(), 2.5);
  for (const Field2D& d : {dx(u), dxx(u), dxxx(u), dy(u), dyy(u), mixed_x_yy(u), laplacian(u)}) {
    CHECK(max_abs_diff(d, Field2D(u.grid())) == 0.0);
  }
}

TEST_CASE("refinement orders") {
  const std::vector<int> levels{100, 200, 400};
  for (const auto& s : stencil_convergence(levels)) {
    CAPTURE(s.name);
    if (s.name == "dxxx") {
      CHECK(s.order == doctest::Approx(2.0).epsilon(0.1));
    } else {
      CHECK(s.order >= 3.9);
    }
  }
}

TEST_CASE("fitted order of an exact power law") {
  const std::vector<double> h{0.4, 0.2, 0.1}, e{3 * std::pow(0.4, 4), 3 * std::pow(0.2, 4), 3 * std::pow(0.1, 4)};
  CHECK(fitted_order(h, e) == doctest::Approx(4.0).epsilon(1e-12));
  const std::vector<double> bad{1.0, 0.0, 1.0};
  CHECK_THROWS_AS(fitted_order(h, bad), std::invalid_argument);
}
