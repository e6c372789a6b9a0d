#pragma once

#include <filesystem>
#include <functional>
#include <optional>
#include <vector>

#include "vtx/config.hpp"
#include "vtx/diagnostics.hpp"
#include "vtx/snapshot.hpp"
#include "vtx/timestep.hpp"
#include "vtx/zk.hpp"

namespace vtx {

/// Two-column CSV with header "r,phi".
void write_profile_csv(const std::filesystem::path& path, const RadialProfile& profile);
RadialProfile read_profile_csv(const std::filesystem::path& path, double c);

/// Initial xi for the configured init block. With init.field = eta the
/// background ramp is added so that eta carries the profile.
Field2D make_initial_field(const RunConfig& config);

struct RunOptions {
  /// Write run.cfg, series.csv, snapshots and failure.txt under
  /// output.dir/output.label.
  bool write_files = true;
  /// Replaces the configured initial field.
  std::optional<Field2D> initial;
  /// Called at every snapshot cadence (and for the initial state).
  std::function<void(const SimulationState&)> on_snapshot;
  /// Called with the state and its record at every series cadence
  /// (and for the initial state).
  std::function<void(const SimulationState&, const DiagnosticsRecord&)> on_record;
};

struct RunOutcome {
  RunResult result;
  /// Initial record first, then one per series cadence.
  std::vector<DiagnosticsRecord> series;
  std::filesystem::path directory;
};

/// Runs one configuration end to end. Throws ConfigError for an invalid
/// config and IoError for file-system failures.
RunOutcome execute_run(const RunConfig& config, const RunOptions& options = {});

/// Name of the snapshot file for a step, e.g. snap_000010000.vtx.
std::string snapshot_name(long step, FieldId id = FieldId::xi);

/// RHS closure for a config.
RhsFn make_rhs_fn(const RunConfig& config, const Grid2D& grid);

}  // namespace vtx
