#include <stdexcept>
#include <string>

#include "doctest.h"
#include "vtx/config.hpp"

using namespace vtx;

namespace {

int error_line(std::string_view text) {
  try {
    parse_config(text);
  } catch (const ConfigError& e) {
    return e.line();
  }
  return -1;
}

std::string error_text(std::string_view text) {
  try {
    parse_config(text);
  } catch (const ConfigError& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_CASE("empty text gives the defaults") {
  const RunConfig c = parse_config("");
  CHECK(c == RunConfig{});
  CHECK(c.grid.nx == 200);
  CHECK(c.grid.ny == 100);
  CHECK(c.integrator.dt == 1e-4);
  CHECK(c.integrator.t_end == 50.0);
  CHECK(parse_config("# only a comment\n\n   \n") == RunConfig{});
}

TEST_CASE("a single key leaves the rest at defaults") {
  const RunConfig c = parse_config("shear.f1 = 0.6  # weak shear\n");
  RunConfig want;
  want.shear.f1 = 0.6;
  CHECK(c == want);
}

TEST_CASE("errors name the key and the line") {
  CHECK(error_line("grid.nx = 64\nintegrator.dt = -1\n") == 2);
  CHECK(error_text("grid.nx = 64\nintegrator.dt = -1\n").find("integrator.dt") != std::string::npos);
  CHECK(error_line("\n\nbogus.key = 1\n") == 3);
  CHECK(error_line("shear.f1 = 1\nshear.f1 = 2\n") == 2);
  CHECK(error_line("grid.nx 64\n") == 1);
  CHECK(error_line("grid.nx =\n") == 1);
  CHECK(error_line("grid.nx = 6x4\n") == 1);
  CHECK(error_line("model.jacobian_order = 3\n") == 1);
  CHECK(error_line("integrator.scheme = euler\n") == 1);
  // A count mismatch on init lists is reported at the offending list.
  CHECK(error_line("init.kind = two_zk\ninit.c = 1, 1\ninit.x0 = 0\ninit.y0 = 1, 1\n") == 3);
}

TEST_CASE("serialize round trip") {
  RunConfig c;
  c.grid = {64, 32, 12.5, 6.0};
  c.integrator.scheme = Scheme::leapfrog;
  c.integrator.dt = 3.3e-5;
  c.integrator.asselin = 0.02;
  c.shear = {-1.0, 1.2};
  c.model.kind = ModelKind::zk_limit;
  c.model.include_jacobian = false;
  c.model.jacobian.order = 2;
  c.init.kind = InitKind::two_zk;
  c.init.c = {1.5, 1.0};
  c.init.x0 = {-5.0, 5.0};
  c.init.y0 = {1.0, 1.0};
  c.init.field = InitField::eta;
  c.ce.slice_rule = SliceRule::fixed_y;
  c.ce.y = 0.1 + 0.2;
  c.ce.exclude_mean = false;
  c.output.label = "pair";
  c.workers = 3;
  CHECK(parse_config(serialize_config(c)) == c);
  CHECK(parse_config(serialize_config(RunConfig{})) == RunConfig{});
}

TEST_CASE("slice rules") {
  CHECK(parse_slice_rule("through_peak").slice_rule == SliceRule::through_peak);
  CHECK(parse_slice_rule("through-peak").slice_rule == SliceRule::through_peak);
  const CESpec s = parse_slice_rule("y=-2.5");
  CHECK(s.slice_rule == SliceRule::fixed_y);
  CHECK(s.y == -2.5);
  CHECK_THROWS_AS(parse_slice_rule("x=1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_slice_rule("y=abc"), std::invalid_argument);
  CHECK(error_line("ce.slice = y=20\n") == 1);
}

TEST_CASE("programmatic validation uses line 0") {
  RunConfig c;
  c.workers = 0;
  try {
    validate_config(c);
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(e.line() == 0);
    CHECK(std::string(e.what()).find("run.workers") != std::string::npos);
  }
  CHECK_NOTHROW(validate_config(RunConfig{}));
  const Grid2D g = make_run_grid(RunConfig{});
  CHECK(g.nx() == 200);
  CHECK(g.rows() == 101);
}
