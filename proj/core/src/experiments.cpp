#include "vtx/experiments.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <map>
#include <ostream>
#include <stdexcept>

#include "vtx/driver.hpp"
#include "vtx/series.hpp"

namespace vtx {
namespace {

// RK4 is stable on the imaginary axis up to 2 sqrt(2); keep a margin.
constexpr double kRk4Margin = 2.5;

std::string fmt(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string label_for(const std::string& prefix, double f1) { return prefix + "_f1_" + fmt(f1); }

RunConfig two_vortex_config(double f1) {
  RunConfig c = single_vortex_config(f1);
  c.init.kind = InitKind::two_zk;
  c.init.c = {1.5, 1.0};
  c.init.x0 = {-5.0, 5.0};
  c.init.y0 = {1.0, 1.0};
  c.output.label = label_for("merge", f1);
  return c;
}

const PresetRun& find_run(const std::vector<PresetRun>& runs, const std::string& label) {
  for (const auto& r : runs) {
    if (r.config.output.label == label) return r;
  }
  throw std::invalid_argument("no run labelled " + label);
}

double retention_of(const PresetRun& r) {
  // A blown-up run has no vortex left to retain.
  if (r.blow_up_time) return 0.0;
  return peak_retention(r.series);
}

const std::vector<double>& ce_scan_shears() {
  static const std::vector<double> v = {0.2, 0.4, 0.6, 0.8, 1.0, 1.2, 1.4, 1.6, 1.8};
  return v;
}

const std::vector<double>& oscillation_shears() {
  static const std::vector<double> v = {1.2, 1.4, 1.6, 1.8};
  return v;
}

}  // namespace

RunConfig single_vortex_config(double f1, InitKind kind) {
  RunConfig c;
  c.shear = ShearFlow{0.0, f1};
  c.integrator.t_end = kPresetHorizon;
  c.init.kind = kind;
  if (kind == InitKind::gaussian) {
    c.init.amplitude = 3.0;
    c.init.c = {};
  }
  c.output.label = label_for(kind == InitKind::gaussian ? "gauss" : "zk", f1);
  const Grid2D grid = make_run_grid(c);
  const double bound = linear_frequency_bound(grid, c.shear, c.model);
  while (bound * c.integrator.dt > kRk4Margin) c.integrator.dt *= 0.5;
  return c;
}

std::vector<std::string> preset_names() {
  return {"longevity_zk_f12", "gauss_vs_zk", "uniform_flow", "collapse_f02",
          "oscillation_onset", "merge_two_vortices", "ce_scan"};
}

ExperimentPreset preset(std::string_view name) {
  ExperimentPreset p;
  p.name = std::string(name);
  if (name == "longevity_zk_f12") {
    p.description = "ZK c=1 vortex at (0,1): f1=1.2 retains more of its peak than f1=0.6";
    p.runs = {single_vortex_config(1.2), single_vortex_config(0.6)};
    p.expected = {{"retention_f1_1.2_minus_f1_0.6", Relation::greater_than, 0.0, 0.0,
                   "the vortex is more likely to stay stable at f1=1.2"}};
  } else if (name == "gauss_vs_zk") {
    p.description = "f1=1.2: ZK initial profile outlives a Gaussian of amplitude 3";
    p.runs = {single_vortex_config(1.2), single_vortex_config(1.2, InitKind::gaussian)};
    p.expected = {{"retention_zk_minus_gaussian", Relation::greater_than, 0.0, 0.0,
                   "the ZK profile is more durable than the Gaussian"}};
  } else if (name == "uniform_flow") {
    p.description = "f1=1.2 with and without the uniform flow f0=-1";
    RunConfig with_flow = single_vortex_config(1.2);
    with_flow.shear.f0 = -1.0;
    with_flow.output.label = "zk_f0_-1_f1_1.2";
    const Grid2D grid = make_run_grid(with_flow);
    while (linear_frequency_bound(grid, with_flow.shear, with_flow.model) * with_flow.integrator.dt > kRk4Margin) {
      with_flow.integrator.dt *= 0.5;
    }
    p.runs = {single_vortex_config(1.2), with_flow};
    p.expected = {{"retention_f0_-1", Relation::at_least, 0.5, 0.0,
                   "with the uniform flow the vortex keeps its shape at first"}};
  } else if (name == "collapse_f02") {
    p.description = "weak shear f1=0.2: the vortex collapses";
    p.runs = {single_vortex_config(0.2)};
    p.expected = {{"collapse_time", Relation::within, 38.0, 12.0, "collapse near T=38"}};
  } else if (name == "oscillation_onset") {
    p.description = "peak-amplitude oscillation appears for f1 >= 1.4";
    for (double f1 : oscillation_shears()) p.runs.push_back(single_vortex_config(f1));
    for (double f1 : oscillation_shears()) {
      p.expected.push_back({"oscillation_f1_" + fmt(f1), f1 < 1.3 ? Relation::is_false : Relation::is_true, 0.0, 0.0,
                            f1 < 1.3 ? "nothing special at f1=1.2" : "the peak oscillates once f1 >= 1.4"});
    }
  } else if (name == "merge_two_vortices") {
    p.description = "c=1.5 at (-5,1) and c=1.0 at (5,1) with f1=1.0 collide and merge";
    p.runs = {two_vortex_config(1.0)};
    p.expected = {{"merge_time", Relation::within, 15.0, 5.0, "the vortices collide and merge near T=15"},
                  {"post_merge_min_retention", Relation::at_least, 0.9, 0.0,
                   "the merged vortex persists without large dissipation"}};
  } else if (name == "ce_scan") {
    p.description = "configurational entropy at T=50 over f1 = 0.2..1.8";
    for (double f1 : ce_scan_shears()) p.runs.push_back(single_vortex_config(f1));
    p.expected = {{"argmax_ce_f1", Relation::within, 1.2, 1e-9, "the CE is maximal at f1=1.2"}};
  } else {
    throw std::invalid_argument("unknown preset '" + std::string(name) + "'");
  }
  return p;
}

std::optional<double> detect_collapse(const std::vector<DiagnosticsRecord>& series, std::optional<double> blow_up_time) {
  if (!series.empty()) {
    const double threshold = 0.5 * series.front().peak_value;
    for (const auto& r : series) {
      if (r.peak_value < threshold) return r.time;
    }
  }
  return blow_up_time;
}

int count_maxima(const Field2D& field, double threshold) {
  const Grid2D& g = field.grid();
  Field2D smooth(g);
  for (int j = 0; j < g.rows(); ++j) {
    for (int i = 0; i < g.nx(); ++i) {
      double s = 0.0;
      for (int dj = -1; dj <= 1; ++dj) {
        for (int di = -1; di <= 1; ++di) s += (2 - std::abs(di)) * (2 - std::abs(dj)) * field(i + di, j + dj);
      }
      smooth(i, j) = s / 16.0;
    }
  }
  smooth.apply_boundary();
  int count = 0;
  for (int j = 0; j < g.rows(); ++j) {
    for (int i = 0; i < g.nx(); ++i) {
      const double v = smooth(i, j);
      if (!(v > threshold)) continue;
      bool is_max = true;
      for (int dj = -1; dj <= 1 && is_max; ++dj) {
        for (int di = -1; di <= 1; ++di) {
          if ((di || dj) && !(v > smooth(i + di, j + dj))) {
            is_max = false;
            break;
          }
        }
      }
      count += is_max;
    }
  }
  return count;
}

void MergeDetector::observe(double time, const Field2D& field) {
  last_count_ = count_maxima(field, threshold_);
  if (merge_time_) return;
  if (last_count_ == 2) seen_two_ = true;
  if (last_count_ == 1 && seen_two_) merge_time_ = time;
}

std::optional<double> detect_merge(const std::vector<FieldSample>& samples) {
  if (samples.empty()) return std::nullopt;
  MergeDetector detector(0.25 * peak(samples.front().field).value);
  for (const auto& s : samples) detector.observe(s.time, s.field);
  return detector.merge_time();
}

bool detect_oscillation(const std::vector<DiagnosticsRecord>& series) {
  struct Extremum {
    double time;
    double value;
  };
  std::vector<Extremum> ext;
  int last_dir = 0;
  for (std::size_t k = 1; k < series.size(); ++k) {
    const double d = series[k].peak_value - series[k - 1].peak_value;
    const int dir = d > 0 ? 1 : (d < 0 ? -1 : 0);
    if (dir == 0) continue;
    if (last_dir != 0 && dir != last_dir) ext.push_back({series[k - 1].time, series[k - 1].peak_value});
    last_dir = dir;
  }
  constexpr double kWindow = 20.0;
  constexpr double kRelativeSwing = 0.02;
  constexpr std::size_t kMinExtrema = 5;
  for (std::size_t a = 0; a < ext.size(); ++a) {
    // Mean peak over the window starting at this extremum.
    double sum = 0.0;
    long n = 0;
    for (const auto& r : series) {
      if (r.time >= ext[a].time && r.time <= ext[a].time + kWindow) {
        sum += r.peak_value;
        ++n;
      }
    }
    const double swing = kRelativeSwing * std::abs(sum / static_cast<double>(std::max(n, 1L)));
    std::size_t chain = 1;
    for (std::size_t b = a + 1; b < ext.size() && ext[b].time - ext[a].time <= kWindow; ++b) {
      if (std::abs(ext[b].value - ext[b - 1].value) > swing) {
        ++chain;
      } else {
        break;
      }
    }
    if (chain >= kMinExtrema) return true;
  }
  return false;
}

double peak_retention(const std::vector<DiagnosticsRecord>& series) {
  if (series.empty() || series.front().peak_value == 0.0) return 0.0;
  return series.back().peak_value / series.front().peak_value;
}

std::string describe(const Expectation& e) {
  switch (e.relation) {
    case Relation::within: return fmt(e.value) + " +/- " + fmt(e.tolerance);
    case Relation::at_least: return ">= " + fmt(e.value);
    case Relation::greater_than: return "> " + fmt(e.value);
    case Relation::is_true: return "true";
    case Relation::is_false: return "false";
  }
  return "?";
}

bool holds(const Expectation& e, double m) {
  if (std::isnan(m)) return false;
  switch (e.relation) {
    case Relation::within: return std::abs(m - e.value) <= e.tolerance;
    case Relation::at_least: return m >= e.value;
    case Relation::greater_than: return m > e.value;
    case Relation::is_true: return m != 0.0;
    case Relation::is_false: return m == 0.0;
  }
  return false;
}

PresetRun execute_preset_run(const RunConfig& config) {
  PresetRun out;
  out.config = config;
  std::optional<MergeDetector> merge;
  long merge_stride = 1;
  if (config.init.kind == InitKind::two_zk) {
    // Observe the field every 0.1 in T.
    merge_stride = std::max(1L, std::lround(0.1 / (config.integrator.dt * static_cast<double>(config.integrator.series_every))));
  }
  long seen = 0;
  RunOptions opts;
  opts.write_files = false;
  opts.on_record = [&](const SimulationState& s, const DiagnosticsRecord&) {
    if (config.init.kind != InitKind::two_zk) return;
    if (!merge) merge.emplace(0.25 * peak(s.xi).value);
    if (seen++ % merge_stride == 0) merge->observe(s.time, s.xi);
  };
  RunOutcome o = execute_run(config, opts);
  out.series = std::move(o.series);
  if (o.result.blow_up) out.blow_up_time = o.result.blow_up->time;
  if (merge && merge->merge_time()) {
    out.merge_time = merge->merge_time();
    for (const auto& r : out.series) {
      if (r.time >= *out.merge_time) {
        out.post_merge_peak = r.peak_value;
        break;
      }
    }
  }
  return out;
}

std::vector<Verdict> measure_preset(const ExperimentPreset& p, const std::vector<PresetRun>& runs) {
  std::map<std::string, double> measured;
  const double nan = std::numeric_limits<double>::quiet_NaN();
  if (p.name == "longevity_zk_f12") {
    measured["retention_f1_1.2_minus_f1_0.6"] =
        retention_of(find_run(runs, label_for("zk", 1.2))) - retention_of(find_run(runs, label_for("zk", 0.6)));
  } else if (p.name == "gauss_vs_zk") {
    measured["retention_zk_minus_gaussian"] =
        retention_of(find_run(runs, label_for("zk", 1.2))) - retention_of(find_run(runs, label_for("gauss", 1.2)));
  } else if (p.name == "uniform_flow") {
    measured["retention_f0_-1"] = retention_of(find_run(runs, "zk_f0_-1_f1_1.2"));
  } else if (p.name == "collapse_f02") {
    const PresetRun& r = find_run(runs, label_for("zk", 0.2));
    measured["collapse_time"] = detect_collapse(r.series, r.blow_up_time).value_or(nan);
  } else if (p.name == "oscillation_onset") {
    for (double f1 : oscillation_shears()) {
      measured["oscillation_f1_" + fmt(f1)] = detect_oscillation(find_run(runs, label_for("zk", f1)).series) ? 1.0 : 0.0;
    }
  } else if (p.name == "merge_two_vortices") {
    const PresetRun& r = find_run(runs, label_for("merge", 1.0));
    measured["merge_time"] = r.merge_time.value_or(nan);
    double min_ratio = nan;
    if (r.merge_time && r.post_merge_peak && !r.blow_up_time) {
      min_ratio = 1.0;
      for (const auto& rec : r.series) {
        if (rec.time >= *r.merge_time) min_ratio = std::min(min_ratio, rec.peak_value / *r.post_merge_peak);
      }
    }
    measured["post_merge_min_retention"] = min_ratio;
  } else if (p.name == "ce_scan") {
    double best = -1.0, best_f1 = nan;
    for (double f1 : ce_scan_shears()) {
      const PresetRun& r = find_run(runs, label_for("zk", f1));
      const double ce = r.blow_up_time || r.series.empty() ? nan : r.series.back().ce_periodic;
      if (!std::isnan(ce) && ce > best) {
        best = ce;
        best_f1 = f1;
      }
    }
    measured["argmax_ce_f1"] = best_f1;
  }

  std::vector<Verdict> out;
  for (const auto& e : p.expected) {
    const auto it = measured.find(e.quantity);
    const double m = it == measured.end() ? nan : it->second;
    out.push_back({p.name, e.quantity, describe(e), m, holds(e, m)});
  }
  return out;
}

std::vector<Verdict> evaluate_preset(const ExperimentPreset& p, const std::function<void(const std::string&)>& progress) {
  std::vector<PresetRun> runs;
  for (const auto& cfg : p.runs) {
    runs.push_back(execute_preset_run(cfg));
    if (progress) {
      const auto& r = runs.back();
      std::string line = cfg.output.label + ": T=" + fmt(r.series.empty() ? 0.0 : r.series.back().time) +
                         " retention=" + fmt(peak_retention(r.series));
      if (r.blow_up_time) line += " blow-up at T=" + fmt(*r.blow_up_time);
      progress(line);
    }
  }
  return measure_preset(p, runs);
}

void write_verdicts_csv(std::ostream& out, const std::vector<Verdict>& verdicts) {
  out << "preset,quantity,expected,measured,pass\n";
  for (const auto& v : verdicts) {
    out << v.preset << ',' << v.quantity << ',' << v.expected << ',' << format_float(v.measured) << ','
        << (v.pass ? "true" : "false") << '\n';
  }
}

}  // namespace vtx
