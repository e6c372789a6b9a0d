#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vtx/config.hpp"
#include "vtx/diagnostics.hpp"

namespace vtx {

enum class Relation {
  within,        ///< |measured - value| <= tolerance
  at_least,      ///< measured >= value
  greater_than,  ///< measured > value
  is_true,       ///< measured != 0
  is_false,      ///< measured == 0
};

struct Expectation {
  std::string quantity;
  Relation relation = Relation::within;
  double value = 0.0;
  double tolerance = 0.0;
  std::string basis;  ///< the observation this encodes, in words
};

struct ExperimentPreset {
  std::string name;
  std::string description;
  /// Every run the preset needs, each with a distinct output.label.
  std::vector<RunConfig> runs;
  std::vector<Expectation> expected;
};

/// Scaled horizon used by every preset.
inline constexpr double kPresetHorizon = 50.0;

std::vector<std::string> preset_names();
/// Throws std::invalid_argument for an unknown name.
ExperimentPreset preset(std::string_view name);

/// Baseline single-vortex config: ZK c=1 at (0, 1), f0 = 0, WYF, T = 50.
/// dt is halved once the linear bound makes dt = 1e-4 unstable for RK4.
RunConfig single_vortex_config(double f1, InitKind kind = InitKind::zk);

/// First T where peak_value < 0.5 * initial peak; otherwise the blow-up
/// time if given; otherwise nullopt.
std::optional<double> detect_collapse(const std::vector<DiagnosticsRecord>& series,
                                      std::optional<double> blow_up_time = std::nullopt);

/// Strict 8-neighbour local maxima above threshold, counted on the
/// 1-2-1 binomial smoothing of the field.
int count_maxima(const Field2D& field, double threshold);

/// Streaming merge detector: merge time is the first observation with
/// exactly one maximum after an observation with exactly two.
class MergeDetector {
 public:
  explicit MergeDetector(double threshold) : threshold_(threshold) {}
  void observe(double time, const Field2D& field);
  std::optional<double> merge_time() const { return merge_time_; }
  int last_count() const { return last_count_; }

 private:
  double threshold_;
  bool seen_two_ = false;
  int last_count_ = -1;
  std::optional<double> merge_time_;
};

struct FieldSample {
  double time = 0.0;
  Field2D field;
};

/// threshold = 0.25 * taller initial peak, taken from the first sample.
std::optional<double> detect_merge(const std::vector<FieldSample>& samples);

/// At least five alternating extrema of peak_value whose successive swings
/// exceed 2 % of the mean peak, all inside some window of length 20 in T.
bool detect_oscillation(const std::vector<DiagnosticsRecord>& series);

/// peak_value at the last record divided by the initial peak_value.
double peak_retention(const std::vector<DiagnosticsRecord>& series);

struct Verdict {
  std::string preset;
  std::string quantity;
  std::string expected;
  double measured = 0.0;
  bool pass = false;
};

std::string describe(const Expectation& e);
bool holds(const Expectation& e, double measured);

/// Per-run results handed to the measurement step.
struct PresetRun {
  RunConfig config;
  std::vector<DiagnosticsRecord> series;
  std::optional<double> blow_up_time;
  std::optional<double> merge_time;
  /// Peak of the merged vortex right after the merge, and at the end.
  std::optional<double> post_merge_peak;
};

/// Executes every run of the preset (in memory) and measures each
/// expectation. progress receives one line per finished run.
std::vector<Verdict> evaluate_preset(const ExperimentPreset& preset,
                                     const std::function<void(const std::string&)>& progress = {});

/// Measures the expectations from already finished runs.
std::vector<Verdict> measure_preset(const ExperimentPreset& preset, const std::vector<PresetRun>& runs);

/// Runs one preset config in memory, tracking merges for two_zk inits.
PresetRun execute_preset_run(const RunConfig& config);

/// Columns preset, quantity, expected, measured, pass.
void write_verdicts_csv(std::ostream& out, const std::vector<Verdict>& verdicts);

}  // namespace vtx
