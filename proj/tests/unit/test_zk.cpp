#include <cmath>
#include <numbers>
#include <stdexcept>

#include "doctest.h"
#include "vtx/zk.hpp"

using namespace vtx;

// phi(0) for c = 1, from an independent adaptive solve of the same boundary
// value problem (scipy solve_ivp, rtol 1e-12, bisection to 1e-15).
constexpr double kAmplitudeC1 = 2.391956403223929;

TEST_CASE("shooting amplitude for c = 1 matches the frozen oracle") {
  const RadialProfile p = solve_radial(1.0);
  CHECK(p.center() == doctest::Approx(kAmplitudeC1).epsilon(1e-7));
  CHECK(p.c == 1.0);
  CHECK(p.values.size() > 1000);
}

TEST_CASE("c-scaling family phi_c(r) = c phi_1(sqrt(c) r)") {
  const RadialProfile p1 = solve_radial(1.0);
  for (double c : {0.5, 1.5, 4.0}) {
    const RadialProfile pc = solve_radial(c);
    CAPTURE(c);
    CHECK(pc.center() == doctest::Approx(c * kAmplitudeC1).epsilon(1e-7));
    for (double r : {0.0, 0.7, 2.0, 5.0}) CHECK(pc(r) == doctest::Approx(c * p1(std::sqrt(c) * r)).epsilon(1e-6));
  }
}

TEST_CASE("profile is positive, decreasing and satisfies the ODE") {
  const RadialProfile p = solve_radial(1.0);
  for (std::size_t k = 1; k < p.values.size(); ++k) {
    REQUIRE(p.values[k] > 0.0);
    REQUIRE(p.values[k] <= p.values[k - 1]);
  }
  // Residual of phi'' + phi'/r - c phi + phi^2 by central differences.
  const double h = p.dr;
  for (double r : {0.5, 1.0, 2.0, 4.0}) {
    const std::size_t k = static_cast<std::size_t>(std::lround(r / h));
    const double f0 = p.values[k], fm = p.values[k - 1], fp = p.values[k + 1];
    const double res = (fp - 2 * f0 + fm) / (h * h) + (fp - fm) / (2 * h * r) - f0 + f0 * f0;
    CHECK(std::abs(res) < 1e-5);
  }
}

TEST_CASE("tail follows K0 and the interpolant matches the table") {
  const RadialProfile p = solve_radial(1.0);
  const double r = p.tail_radius + 3.0;
  CHECK(p(r) == doctest::Approx(p.tail_amplitude * std::cyl_bessel_k(0.0, r)));
  CHECK(p(1.2345) > p(1.2346));
  for (std::size_t k = 0; k < p.values.size(); k += 997) CHECK(p(static_cast<double>(k) * p.dr) == doctest::Approx(p.values[k]));
}

TEST_CASE("table round trip rebuilds the same profile") {
  const RadialProfile p = solve_radial(1.0);
  std::vector<double> r, phi;
  for (std::size_t k = 0; k < p.values.size(); ++k) {
    r.push_back(static_cast<double>(k) * p.dr);
    phi.push_back(p.values[k]);
  }
  const RadialProfile q = profile_from_table(1.0, r, phi);
  for (double x : {0.0, 0.33, 3.3, 33.0}) CHECK(q(x) == doctest::Approx(p(x)).epsilon(1e-9));
  r[3] += 1e-4;
  CHECK_THROWS_AS(profile_from_table(1.0, r, phi), std::invalid_argument);
}

TEST_CASE("invalid solver input") {
  CHECK_THROWS_AS(solve_radial(0.0), std::invalid_argument);
  CHECK_THROWS_AS(solve_radial(-1.0), std::invalid_argument);
  RadialSolveOptions o;
  o.dr = 0.0;
  CHECK_THROWS_AS(solve_radial(1.0, o), std::invalid_argument);
}

TEST_CASE("plane soliton formula") {
  const PlaneSoliton s{1.0, 0.0};
  CHECK(s(0.0, 3.0, 0.0) == doctest::Approx(1.5));
  CHECK(s(2.0, 0.0, 2.0) == doctest::Approx(1.5));
  const double x = 1.3;
  const double sech = 1.0 / std::cosh(0.5 * x);
  CHECK(s(x, 0.0, 0.0) == doctest::Approx(1.5 * sech * sech));
  const PlaneSoliton t{4.0, std::numbers::pi / 2};
  CHECK(t(7.0, 0.0, 0.0) == doctest::Approx(6.0));
  CHECK_THROWS_AS(plane_soliton_field(default_grid(), PlaneSoliton{-1.0, 0.0}, 0.0), std::invalid_argument);
}

TEST_CASE("radial deposit is centred and uses the nearest periodic image") {
  const Grid2D g = default_grid();
  const RadialProfile p = solve_radial(1.0);
  const Field2D f = deposit_radial(g, p, 0.0, 1.0);
  CHECK(f(100, 55) == doctest::Approx(p.center()));
  CHECK(f(105, 55) == doctest::Approx(f(95, 55)));
  CHECK(f(100, 60) == doctest::Approx(f(100, 50)));
  const Field2D w = deposit_radial(g, p, 19.8, 0.0);
  // x = -20 is 0.2 away from 19.8 through the seam.
  CHECK(w(0, 50) == doctest::Approx(p(0.2)));
}
