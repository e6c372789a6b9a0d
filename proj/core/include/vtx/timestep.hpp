#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>

#include "vtx/grid.hpp"

namespace vtx {

enum class Scheme { rk4, leapfrog };

struct IntegratorConfig {
  Scheme scheme = Scheme::rk4;
  double dt = 1e-4;
  double t_end = 0.0;
  long snapshot_every = 10000;
  long series_every = 100;
  /// Robert-Asselin coefficient; leapfrog only.
  double asselin = 0.01;

  /// Throws std::invalid_argument on a non-positive dt or cadence.
  void validate() const;
  /// round(t_end / dt)
  long total_steps() const;

  bool operator==(const IntegratorConfig&) const = default;
};

struct SimulationState {
  Field2D xi;
  long step = 0;
  double time = 0.0;
};

/// Writes d(xi)/dT into out. xi carries current ghosts; out ghosts must be
/// refreshed by the callee.
using RhsFn = std::function<void(const Field2D& xi, Field2D& out)>;

struct BlowUp {
  long step = 0;  ///< step that produced the first non-finite value
  double time = 0.0;
  int i = 0;
  int j = 0;
  std::string describe() const;
};

class BlowUpError : public std::runtime_error {
 public:
  explicit BlowUpError(const BlowUp& info) : std::runtime_error(info.describe()), info_(info) {}
  const BlowUp& info() const { return info_; }

 private:
  BlowUp info_;
};

/// Classical four-stage Runge-Kutta with ghosts refreshed after every stage.
class Rk4Stepper {
 public:
  Rk4Stepper(const Grid2D& grid, RhsFn rhs);

  /// Advances state by dt. On a non-finite result the state is left
  /// untouched and BlowUpError is thrown.
  void step(SimulationState& state, double dt);

 private:
  RhsFn rhs_;
  Field2D k1_, k2_, k3_, k4_, stage_;
};

/// Leapfrog with a Robert-Asselin filter. The first call bootstraps the
/// previous level with one RK4 step.
class LeapfrogStepper {
 public:
  LeapfrogStepper(const Grid2D& grid, RhsFn rhs, double asselin);

  void step(SimulationState& state, double dt);
  void reset() { have_prev_ = false; }

 private:
  RhsFn rhs_;
  double asselin_;
  Rk4Stepper bootstrap_;
  Field2D prev_, tend_, next_;
  bool have_prev_ = false;
};

/// Returns the state advanced by one RK4 step.
SimulationState rk4_step(const SimulationState& state, double dt, const RhsFn& rhs);

/// Unfiltered leapfrog: xi_prev + 2 dt rhs(xi). Step and time follow state.
SimulationState leapfrog_step(const SimulationState& state, const SimulationState& prev, double dt,
                              const RhsFn& rhs);

struct Sinks {
  std::function<void(const SimulationState&)> series;
  std::function<void(const SimulationState&)> snapshot;
  /// Receives the last healthy state and the failure location.
  std::function<void(const SimulationState&, const BlowUp&)> failure;
};

struct RunResult {
  SimulationState state;
  std::optional<BlowUp> blow_up;
};

/// Advances to config.t_end. The initial state is not reported to the
/// sinks; series fires after every series_every-th step and snapshot after
/// every snapshot_every-th step (counted from state.step = 0). On blow-up the
/// last healthy state goes to the snapshot and failure sinks and is returned
/// with the failure set.
RunResult run(SimulationState initial, const IntegratorConfig& config, const RhsFn& rhs,
              const Sinks& sinks = {});

}  // namespace vtx
