#include <cmath>
#include <numbers>
#include <set>
#include <sstream>
#include <stdexcept>

#include "doctest.h"
#include "vtx/experiments.hpp"

using namespace vtx;

namespace {

std::vector<DiagnosticsRecord> peaks(const std::vector<double>& values, double dt = 1.0) {
  std::vector<DiagnosticsRecord> s;
  for (std::size_t k = 0; k < values.size(); ++k) {
    DiagnosticsRecord r;
    r.step = static_cast<long>(k);
    r.time = dt * static_cast<double>(k);
    r.peak_value = values[k];
    s.push_back(r);
  }
  return s;
}

Field2D bumps(const Grid2D& g, std::initializer_list<std::array<double, 3>> list) {
  Field2D f(g);
  for (const auto& b : list) f += sample_gaussian(g, b[0], b[1], b[2]);
  return f;
}

}  // namespace

TEST_CASE("collapse detection") {
  CHECK(detect_collapse(peaks({2.0, 1.5, 1.1, 0.99, 0.5})) == doctest::Approx(3.0));
  CHECK_FALSE(detect_collapse(peaks({2.0, 1.5, 1.1, 1.0})).has_value());
  CHECK(detect_collapse(peaks({2.0, 1.5}), 12.5) == doctest::Approx(12.5));
  CHECK(detect_collapse(peaks({2.0, 0.9}), 12.5) == doctest::Approx(1.0));
  CHECK_FALSE(detect_collapse({}).has_value());
}

TEST_CASE("retention") {
  CHECK(peak_retention(peaks({2.0, 3.0, 1.0})) == doctest::Approx(0.5));
}

TEST_CASE("oscillation detection") {
  std::vector<double> wobble, smooth, tiny;
  for (int k = 0; k <= 400; ++k) {
    const double t = 0.1 * k;
    wobble.push_back(2.0 + 0.2 * std::sin(2.0 * std::numbers::pi * t / 4.0));
    smooth.push_back(2.0 - 0.01 * t);
    tiny.push_back(2.0 + 0.01 * std::sin(2.0 * std::numbers::pi * t / 4.0));
  }
  CHECK(detect_oscillation(peaks(wobble, 0.1)));
  CHECK_FALSE(detect_oscillation(peaks(smooth, 0.1)));
  CHECK_FALSE(detect_oscillation(peaks(tiny, 0.1)));
  // Period 12: extrema are 6 apart, so five of them span 24 > 20.
  std::vector<double> slow;
  for (int k = 0; k <= 400; ++k) slow.push_back(2.0 + 0.2 * std::sin(2.0 * std::numbers::pi * 0.1 * k / 12.0));
  CHECK_FALSE(detect_oscillation(peaks(slow, 0.1)));
}

TEST_CASE("maxima counting") {
  const Grid2D g = default_grid();
  CHECK(count_maxima(Field2D(g), 0.1) == 0);
  CHECK(count_maxima(bumps(g, {{1.0, 0.0, 1.0}}), 0.25) == 1);
  CHECK(count_maxima(bumps(g, {{1.5, -5.0, 1.0}, {1.0, 5.0, 1.0}}), 0.25) == 2);
  CHECK(count_maxima(bumps(g, {{1.5, -5.0, 1.0}, {0.2, 5.0, 1.0}}), 0.25) == 1);
  // Overlapping bumps read as one.
  CHECK(count_maxima(bumps(g, {{1.0, -0.3, 1.0}, {1.0, 0.3, 1.0}}), 0.25) == 1);
}

TEST_CASE("merge detection") {
  const Grid2D g = default_grid();
  std::vector<FieldSample> samples;
  for (int k = 0; k <= 10; ++k) {
    const double sep = 5.0 - 0.5 * k;
    samples.push_back({static_cast<double>(k), bumps(g, {{1.5, -sep, 1.0}, {1.0, sep, 1.0}})});
  }
  const auto t = detect_merge(samples);
  REQUIRE(t.has_value());
  CHECK(*t > 5.0);
  CHECK(*t < 10.5);

  MergeDetector d(0.375);
  d.observe(0.0, bumps(g, {{1.0, 0.0, 1.0}}));
  CHECK_FALSE(d.merge_time().has_value());  // never saw two
  d.observe(1.0, bumps(g, {{1.5, -5.0, 1.0}, {1.0, 5.0, 1.0}}));
  CHECK(d.last_count() == 2);
  d.observe(2.0, bumps(g, {{2.0, 0.0, 1.0}}));
  CHECK(d.merge_time() == doctest::Approx(2.0));
  d.observe(3.0, bumps(g, {{1.5, -5.0, 1.0}, {1.0, 5.0, 1.0}}));
  d.observe(4.0, bumps(g, {{2.0, 0.0, 1.0}}));
  CHECK(d.merge_time() == doctest::Approx(2.0));
}

TEST_CASE("expectations") {
  Expectation e{"q", Relation::within, 38.0, 12.0, ""};
  CHECK(holds(e, 26.0));
  CHECK(holds(e, 50.0));
  CHECK_FALSE(holds(e, 12.6));
  CHECK_FALSE(holds(e, std::nan("")));
  CHECK(holds({"q", Relation::at_least, 0.5, 0, ""}, 0.5));
  CHECK_FALSE(holds({"q", Relation::greater_than, 0.0, 0, ""}, 0.0));
  CHECK(holds({"q", Relation::is_true, 0, 0, ""}, 1.0));
  CHECK(holds({"q", Relation::is_false, 0, 0, ""}, 0.0));
  CHECK_FALSE(holds({"q", Relation::is_false, 0, 0, ""}, std::nan("")));
  CHECK_FALSE(describe(e).empty());
}

TEST_CASE("presets") {
  const auto names = preset_names();
  CHECK(names.size() == 7);
  for (const auto& n : names) {
    CAPTURE(n);
    const ExperimentPreset p = preset(n);
    CHECK(p.name == n);
    CHECK_FALSE(p.runs.empty());
    CHECK_FALSE(p.expected.empty());
    std::set<std::string> labels;
    for (const auto& r : p.runs) {
      CHECK_NOTHROW(validate_config(r));
      CHECK(r.integrator.t_end == kPresetHorizon);
      labels.insert(r.output.label);
    }
    CHECK(labels.size() == p.runs.size());
  }
  CHECK_THROWS_AS(preset("nope"), std::invalid_argument);

  const RunConfig base = single_vortex_config(0.2);
  CHECK(base.init.kind == InitKind::zk);
  CHECK(base.init.y0 == std::vector<double>{1.0});
  CHECK(base.shear.f1 == 0.2);
  CHECK(base.integrator.dt == 1e-4);
  CHECK(single_vortex_config(1.2).integrator.dt < 1e-4);
  CHECK(single_vortex_config(1.2, InitKind::gaussian).init.amplitude == 3.0);
}

TEST_CASE("measurement from synthetic runs") {
  const ExperimentPreset p = preset("longevity_zk_f12");
  std::vector<PresetRun> runs;
  for (const auto& cfg : p.runs) {
    PresetRun r;
    r.config = cfg;
    r.series = cfg.shear.f1 > 1.0 ? peaks({2.0, 1.8}) : peaks({2.0, 1.0});
    runs.push_back(r);
  }
  auto v = measure_preset(p, runs);
  REQUIRE(v.size() == 1);
  CHECK(v[0].measured == doctest::Approx(0.4));
  CHECK(v[0].pass);

  // A blown-up run retains nothing.
  for (auto& r : runs)
    if (r.config.shear.f1 > 1.0) r.blow_up_time = 3.0;
  v = measure_preset(p, runs);
  CHECK(v[0].measured == doctest::Approx(-0.5));
  CHECK_FALSE(v[0].pass);

  std::ostringstream out;
  write_verdicts_csv(out, v);
  CHECK(out.str().rfind("preset,quantity,expected,measured,pass\n", 0) == 0);
  CHECK(out.str().find(",false\n") != std::string::npos);
}
