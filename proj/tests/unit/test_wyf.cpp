#include <cmath>
#include <numbers>
#include <stdexcept>

#include "doctest.h"
#include "vtx/arakawa.hpp"
#include "vtx/stencil.hpp"
#include "vtx/wyf.hpp"
#include "vtx/zk.hpp"

using namespace vtx;

namespace {

double max_abs(const Field2D& f) {
  double m = 0.0;
  for (int j = 0; j < f.grid().rows(); ++j) {
    for (int i = 0; i < f.grid().nx(); ++i) m = std::max(m, std::abs(f(i, j)));
  }
  return m;
}

Field2D minus(const Field2D& a, const Field2D& b) {
  Field2D d = b;
  d *= -1.0;
  d += a;
  return d;
}

Field2D vortex(const Grid2D& g) {
  Field2D f = sample_gaussian(g, 2.0, 1.0, 1.5);
  f += sample_gaussian(g, -0.7, -4.0, -2.0);
  return f;
}

}  // namespace

TEST_CASE("shear coefficients") {
  const ShearFlow s{0.0, 1.2};
  CHECK(coeff_P(s, 1.0) == doctest::Approx(3.4));
  CHECK(coeff_Q(s, 1.0) == doctest::Approx(1.6));
  CHECK(coeff_Q(s, -2.0) == doctest::Approx(-2.0 + 2.4));
  // f0 = -1, f1 = 0 is the ZK case: P = -1, Q = 0.
  const ShearFlow zk{-1.0, 0.0};
  for (double y : {-10.0, 0.0, 3.7}) {
    CHECK(coeff_P(zk, y) == -1.0);
    CHECK(coeff_Q(zk, y) == 0.0);
  }
  CHECK(s.ramp(2.0) == doctest::Approx(2.4));
  CHECK(s.u0(2.0) == doctest::Approx(2.4));
}

TEST_CASE("rhs of zero is zero") {
  const Field2D z(default_grid());
  CHECK(max_abs(rhs(z, ShearFlow{0.3, 1.2}, Model{})) == 0.0);
  CHECK(max_abs(rhs(z, ShearFlow{}, Model{ModelKind::zk_limit})) == 0.0);
}

TEST_CASE("y-independent field: rhs assembles the P and Q terms by row") {
  const Grid2D g = default_grid();
  const ShearFlow s{0.2, 1.2};
  Field2D xi(g);
  xi.assign([](double x, double) { return 1.5 / std::pow(std::cosh(0.5 * x), 2); });
  const Field2D r = rhs(xi, s, Model{});
  const Field2D ex = dx(xi), e3 = dxxx(xi);
  double worst = 0.0;
  for (int j = 0; j < g.rows(); ++j) {
    const double P = coeff_P(s, g.y(j)), Q = coeff_Q(s, g.y(j));
    for (int i = 0; i < g.nx(); ++i) {
      const double expect = 2 * xi(i, j) * ex(i, j) + P * e3(i, j) - 2 * Q * ex(i, j);
      worst = std::max(worst, std::abs(r(i, j) - expect) / (1.0 + std::abs(expect)));
    }
  }
  CHECK(worst < 1e-12);
}

TEST_CASE("Jacobian term enters as -2 J[lap xi, xi]") {
  const Grid2D g = default_grid();
  const Field2D xi = vortex(g);
  const ShearFlow s{0.0, 1.2};
  for (int order : {2, 4}) {
    Model with{ModelKind::wyf, true, JacobianScheme::of_order(order)};
    Model without{ModelKind::wyf, false, JacobianScheme::of_order(order)};
    Field2D j = jacobian(laplacian(xi), xi, JacobianScheme::of_order(order));
    j *= -2.0;
    const Field2D diff = minus(minus(rhs(xi, s, with), rhs(xi, s, without)), j);
    CHECK(max_abs(diff) < 1e-10 * max_abs(j));
  }
}

TEST_CASE("zk_limit is the image of the f0 = -1 WYF rhs under xi = -phi") {
  const Grid2D g = default_grid();
  const Field2D phi = deposit_radial(g, solve_radial(1.0), 2.0, -1.0);
  Field2D xi = phi;
  xi *= -1.0;
  const Model plain{ModelKind::wyf, false};
  const Model zk{ModelKind::zk_limit, false};
  Field2D a = rhs(xi, ShearFlow{-1.0, 0.0}, plain);
  a *= -1.0;
  const Field2D b = rhs(phi, ShearFlow{}, zk);
  CHECK(max_abs(minus(a, b)) <= 1e-13 * max_abs(b));
}

TEST_CASE("zk_limit ignores the shear") {
  const Grid2D g = default_grid();
  const Field2D phi = vortex(g);
  const Model zk{ModelKind::zk_limit, true};
  CHECK(rhs(phi, ShearFlow{}, zk) == rhs(phi, ShearFlow{0.7, 1.8}, zk));
}

TEST_CASE("plane soliton: rhs approaches -c dx(phi) at the order of the third difference") {
  const Model zk{ModelKind::zk_limit, false};
  const PlaneSoliton sol{1.0, 0.0};
  double prev = 0.0;
  std::vector<double> orders;
  for (int nx : {200, 400, 800}) {
    const Grid2D g = make_grid(nx, 20, 20.0, 2.0);
    const Field2D phi = plane_soliton_field(g, sol, 0.0);
    Field2D travel = dx(phi);
    travel *= -sol.c;
    const double res = max_abs(minus(rhs(phi, ShearFlow{}, zk), travel));
    if (prev > 0.0) orders.push_back(std::log2(prev / res));
    prev = res;
  }
  for (double o : orders) CHECK(o == doctest::Approx(2.0).epsilon(0.05));
}

TEST_CASE("worker count does not change the rhs") {
  const Grid2D g = default_grid();
  const Field2D xi = vortex(g);
  const ShearFlow s{0.0, 1.2};
  RhsOperator one(g, s, Model{}, RowExecutor(1));
  RhsOperator four(g, s, Model{}, RowExecutor(4));
  Field2D a(g), b(g);
  one(xi, a);
  four(xi, b);
  CHECK(a == b);
  const Field2D other(make_grid(10, 10, 1, 1));
  Field2D out(other);
  CHECK_THROWS_AS(one(other, out), std::invalid_argument);
}

TEST_CASE("linear frequency bound brackets the RK4 limit used by the presets") {
  const Grid2D g = default_grid();
  const double limit = 2.0 * std::numbers::sqrt2;
  const Model m{};
  const double b06 = linear_frequency_bound(g, ShearFlow{0.0, 0.6}, m);
  const double b12 = linear_frequency_bound(g, ShearFlow{0.0, 1.2}, m);
  CHECK(b06 < b12);
  CHECK(b06 * 1e-4 < limit);
  CHECK(b12 * 1e-4 > limit);
  CHECK(b12 * 5e-5 < limit);
}

TEST_CASE("normalization rescales amplitude and x extent") {
  const Grid2D g = default_grid();
  const Field2D eta = vortex(g);
  const NormalizedField same = normalize(eta, ScaleParams{2.0, 1.0});
  CHECK(same.grid == g);
  CHECK(same.field == eta);
  const NormalizedField n = normalize(eta, ScaleParams{3.0, 8.0});
  CHECK(n.grid.lx() == doctest::Approx(10.0));
  CHECK(n.grid.ly() == 10.0);
  CHECK(n.field(100, 57) == doctest::Approx(0.5 * 0.25 * 3.0 * eta(100, 57)));
  CHECK_THROWS_AS(normalize(eta, ScaleParams{0.0, 1.0}), std::invalid_argument);
}
