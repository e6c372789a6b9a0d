#include <cmath>
#include <complex>
#include <stdexcept>

#include "doctest.h"
#include "vtx/convergence.hpp"
#include "vtx/timestep.hpp"
#include "vtx/wyf.hpp"
#include "vtx/zk.hpp"

using namespace vtx;

namespace {

const Grid2D& small_grid() {
  static const Grid2D g = make_grid(16, 8, 4.0, 2.0);
  return g;
}

Field2D filled(double v) { return Field2D(small_grid(), v); }

RhsFn linear(double lambda) {
  return [lambda](const Field2D& x, Field2D& out) {
    out = x;
    out *= lambda;
  };
}

// u' = w v, v' = -w u with u in the left half of each row and v in the right.
RhsFn oscillator(double w) {
  return [w](const Field2D& x, Field2D& out) {
    const int half = x.grid().nx() / 2;
    for (int j = 0; j < x.grid().rows(); ++j) {
      for (int i = 0; i < half; ++i) {
        out(i, j) = w * x(i + half, j);
        out(i + half, j) = -w * x(i, j);
      }
    }
    out.apply_boundary();
  };
}

}  // namespace

TEST_CASE("integrator config validation") {
  IntegratorConfig c;
  c.t_end = 1.0;
  CHECK_NOTHROW(c.validate());
  CHECK(c.total_steps() == 10000);
  c.dt = -1.0;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c.dt = 1e-4;
  c.series_every = 0;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c.series_every = 1;
  c.asselin = 0.7;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
}

TEST_CASE("zero rhs is a fixed point") {
  const RhsFn zero = [](const Field2D&, Field2D& out) { out = Field2D(out.grid()); };
  const SimulationState s{filled(1.25), 7, 7e-3};
  const SimulationState r = rk4_step(s, 1e-3, zero);
  CHECK(r.xi == s.xi);
  CHECK(r.step == 8);
  CHECK(r.time == doctest::Approx(8e-3));
  const SimulationState prev{filled(-2.0), 6, 6e-3};
  const SimulationState l = leapfrog_step(s, prev, 1e-3, zero);
  CHECK(l.xi == prev.xi);
  CHECK(l.step == 8);
}

TEST_CASE("one RK4 step is the degree-4 Taylor polynomial of exp(lambda dt)") {
  for (double z : {-0.5, 0.1, 1.0}) {
    const SimulationState s{filled(1.0), 0, 0.0};
    const SimulationState r = rk4_step(s, 1.0, linear(z));
    const double taylor = 1 + z + z * z / 2 + z * z * z / 6 + z * z * z * z / 24;
    CHECK(r.xi(3, 4) == doctest::Approx(taylor).epsilon(1e-15));
  }
}

TEST_CASE("unfiltered leapfrog keeps the oscillator amplitude to O(dt^2)") {
  const double w = 2.0, dt = 0.01;
  Field2D x0(small_grid());
  for (int j = 0; j < small_grid().rows(); ++j) x0(0, j) = 1.0;  // u = 1, v = 0
  x0.apply_boundary();
  SimulationState prev{x0, 0, 0.0};
  SimulationState cur = rk4_step(prev, dt, oscillator(w));
  const int steps = static_cast<int>(std::lround(2 * std::numbers::pi / w / dt));
  for (int n = 1; n < steps; ++n) {
    SimulationState next = leapfrog_step(cur, prev, dt, oscillator(w));
    prev = std::move(cur);
    cur = std::move(next);
  }
  const double amp = std::hypot(cur.xi(0, 2), cur.xi(8, 2));
  CHECK(std::abs(amp - 1.0) < 2 * (w * dt) * (w * dt));
}

TEST_CASE("run counts sink invocations") {
  const RhsFn zero = [](const Field2D&, Field2D& out) { out = Field2D(out.grid()); };
  IntegratorConfig c;
  c.dt = 0.1;
  int series = 0, snaps = 0;
  Sinks sinks;
  sinks.series = [&](const SimulationState&) { ++series; };
  sinks.snapshot = [&](const SimulationState&) { ++snaps; };

  c.t_end = 0.0;
  RunResult r = run(SimulationState{filled(1.0), 0, 0.0}, c, zero, sinks);
  CHECK(series == 0);
  CHECK(snaps == 0);
  CHECK(r.state.step == 0);

  c.t_end = 1.0;
  c.series_every = 1;
  c.snapshot_every = 5;
  r = run(SimulationState{filled(1.0), 0, 0.0}, c, zero, sinks);
  CHECK(series == 10);
  CHECK(snaps == 2);
  CHECK(r.state.step == 10);
  CHECK(r.state.time == doctest::Approx(1.0));
  CHECK_FALSE(r.blow_up.has_value());
}

TEST_CASE("blow-up halts with a report and returns the last healthy state") {
  const Grid2D g = default_grid();
  auto op = std::make_shared<RhsOperator>(g, ShearFlow{0.0, 1.2}, Model{});
  const RhsFn f = [op](const Field2D& x, Field2D& out) { (*op)(x, out); };
  IntegratorConfig c;
  c.dt = 1e-2;
  c.t_end = 5.0;
  c.series_every = 1;
  int failures = 0;
  long last_series = -1;
  std::optional<long> snap_step;
  Sinks sinks;
  sinks.series = [&](const SimulationState& s) { last_series = s.step; };
  sinks.snapshot = [&](const SimulationState& s) { snap_step = s.step; };
  sinks.failure = [&](const SimulationState& s, const BlowUp& b) {
    ++failures;
    CHECK(s.xi.all_finite());
    CHECK(b.step == s.step + 1);
  };
  const RunResult r = run(SimulationState{deposit_radial(g, solve_radial(1.0), 0, 1), 0, 0.0}, c, f, sinks);
  REQUIRE(r.blow_up.has_value());
  CHECK(failures == 1);
  CHECK(r.state.xi.all_finite());
  CHECK(r.state.step == last_series);
  REQUIRE(snap_step.has_value());
  CHECK(*snap_step == r.state.step);
  CHECK(r.blow_up->describe().find("non-finite") != std::string::npos);
}

TEST_CASE("Rk4Stepper leaves the state untouched when it throws") {
  const RhsFn nan_rhs = [](const Field2D&, Field2D& out) {
    out = Field2D(out.grid(), std::numeric_limits<double>::quiet_NaN());
  };
  Rk4Stepper st(small_grid(), nan_rhs);
  SimulationState s{filled(3.0), 4, 0.4};
  CHECK_THROWS_AS(st.step(s, 0.1), BlowUpError);
  CHECK(s.xi == filled(3.0));
  CHECK(s.step == 4);
}

TEST_CASE("filtered leapfrog tracks RK4 on a decaying mode") {
  const double dt = 1e-3;
  SimulationState a{filled(1.0), 0, 0.0}, b = a;
  Rk4Stepper rk(small_grid(), linear(-1.0));
  LeapfrogStepper lf(small_grid(), linear(-1.0), 0.01);
  for (int n = 0; n < 1000; ++n) {
    rk.step(a, dt);
    lf.step(b, dt);
  }
  CHECK(a.xi(2, 2) == doctest::Approx(std::exp(-1.0)).epsilon(1e-12));
  CHECK(b.xi(2, 2) == doctest::Approx(std::exp(-1.0)).epsilon(1e-3));
  CHECK(b.time == doctest::Approx(1.0));
}

TEST_CASE("halving dt: RK4 differences shrink about 16x") {
  const TimeStudy t = time_convergence(Scheme::rk4, 4e-4, 0.2, 4);
  REQUIRE(t.ratios.size() == 2);
  for (double r : t.ratios) CHECK(r == doctest::Approx(16.0).epsilon(0.25));
}

TEST_CASE("halving dt: unfiltered leapfrog differences shrink about 4x") {
  const TimeStudy t = time_convergence(Scheme::leapfrog, 4e-4, 0.2, 4, 0.0);
  for (double r : t.ratios) CHECK(r == doctest::Approx(4.0).epsilon(0.25));
}

TEST_CASE("the Asselin filter leaves leapfrog first order") {
  const TimeStudy t = time_convergence(Scheme::leapfrog, 4e-4, 0.2, 4, 0.01);
  for (double r : t.ratios) {
    CHECK(r > 1.5);
    CHECK(r < 3.0);
  }
}
