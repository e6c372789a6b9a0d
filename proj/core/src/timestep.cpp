#include "vtx/timestep.hpp"

#include <cmath>
#include <sstream>

namespace vtx {
namespace {

void check_healthy(const Field2D& f, long step, double time) {
  if (auto bad = f.first_non_finite()) {
    throw BlowUpError(BlowUp{step, time, bad->first, bad->second});
  }
}

// out = a + s * b over the whole padded storage, then ghosts refreshed.
void axpy(const Field2D& a, double s, const Field2D& b, Field2D& out) {
  auto pa = a.storage();
  auto pb = b.storage();
  auto po = out.storage();
  for (std::size_t k = 0; k < po.size(); ++k) po[k] = pa[k] + s * pb[k];
  out.apply_boundary();
}

}  // namespace

void IntegratorConfig::validate() const {
  if (!(dt > 0.0) || !std::isfinite(dt)) throw std::invalid_argument("integrator.dt must be positive");
  if (!(t_end >= 0.0) || !std::isfinite(t_end)) throw std::invalid_argument("integrator.t_end must be >= 0");
  if (snapshot_every < 1) throw std::invalid_argument("integrator.snapshot_every must be >= 1");
  if (series_every < 1) throw std::invalid_argument("integrator.series_every must be >= 1");
  if (!(asselin >= 0.0 && asselin < 0.5)) throw std::invalid_argument("integrator.asselin must be in [0, 0.5)");
}

long IntegratorConfig::total_steps() const { return std::lround(t_end / dt); }

std::string BlowUp::describe() const {
  std::ostringstream os;
  os << "non-finite value at step " << step << " (T=" << time << ") at i=" << i << " j=" << j;
  return os.str();
}

Rk4Stepper::Rk4Stepper(const Grid2D& grid, RhsFn rhs)
    : rhs_(std::move(rhs)), k1_(grid), k2_(grid), k3_(grid), k4_(grid), stage_(grid) {}

void Rk4Stepper::step(SimulationState& state, double dt) {
  const Field2D& xi = state.xi;
  rhs_(xi, k1_);
  axpy(xi, 0.5 * dt, k1_, stage_);
  rhs_(stage_, k2_);
  axpy(xi, 0.5 * dt, k2_, stage_);
  rhs_(stage_, k3_);
  axpy(xi, dt, k3_, stage_);
  rhs_(stage_, k4_);

  auto px = xi.storage();
  auto p1 = k1_.storage();
  auto p2 = k2_.storage();
  auto p3 = k3_.storage();
  auto p4 = k4_.storage();
  auto po = stage_.storage();
  const double w = dt / 6.0;
  for (std::size_t k = 0; k < po.size(); ++k) {
    po[k] = px[k] + w * (p1[k] + 2.0 * p2[k] + 2.0 * p3[k] + p4[k]);
  }
  stage_.apply_boundary();
  const long next_step = state.step + 1;
  const double next_time = static_cast<double>(next_step) * dt;
  check_healthy(stage_, next_step, next_time);
  std::swap(state.xi, stage_);
  state.step = next_step;
  state.time = next_time;
}

LeapfrogStepper::LeapfrogStepper(const Grid2D& grid, RhsFn rhs, double asselin)
    : rhs_(rhs), asselin_(asselin), bootstrap_(grid, rhs), prev_(grid), tend_(grid), next_(grid) {}

void LeapfrogStepper::step(SimulationState& state, double dt) {
  if (!have_prev_) {
    Field2D before = state.xi;
    bootstrap_.step(state, dt);
    prev_ = std::move(before);
    have_prev_ = true;
    return;
  }
  rhs_(state.xi, tend_);
  axpy(prev_, 2.0 * dt, tend_, next_);
  const long next_step = state.step + 1;
  const double next_time = static_cast<double>(next_step) * dt;
  check_healthy(next_, next_step, next_time);

  // Filtered current level becomes the previous level.
  auto pp = prev_.storage();
  auto pc = state.xi.storage();
  auto pn = next_.storage();
  for (std::size_t k = 0; k < pp.size(); ++k) {
    pp[k] = pc[k] + asselin_ * (pn[k] - 2.0 * pc[k] + pp[k]);
  }
  std::swap(state.xi, next_);
  state.step = next_step;
  state.time = next_time;
}

SimulationState rk4_step(const SimulationState& state, double dt, const RhsFn& rhs) {
  SimulationState out = state;
  Rk4Stepper stepper(state.xi.grid(), rhs);
  stepper.step(out, dt);
  return out;
}

SimulationState leapfrog_step(const SimulationState& state, const SimulationState& prev, double dt,
                              const RhsFn& rhs) {
  Field2D tend(state.xi.grid());
  rhs(state.xi, tend);
  SimulationState out{Field2D(state.xi.grid()), state.step + 1, 0.0};
  axpy(prev.xi, 2.0 * dt, tend, out.xi);
  out.time = static_cast<double>(out.step) * dt;
  check_healthy(out.xi, out.step, out.time);
  return out;
}

RunResult run(SimulationState initial, const IntegratorConfig& config, const RhsFn& rhs, const Sinks& sinks) {
  config.validate();
  const long steps = config.total_steps();
  RunResult result{std::move(initial), std::nullopt};
  SimulationState& state = result.state;
  state.xi.apply_boundary();

  std::optional<Rk4Stepper> rk4;
  std::optional<LeapfrogStepper> leapfrog;
  if (config.scheme == Scheme::rk4) {
    rk4.emplace(state.xi.grid(), rhs);
  } else {
    leapfrog.emplace(state.xi.grid(), rhs, config.asselin);
  }

  for (long n = 0; n < steps; ++n) {
    try {
      if (rk4) {
        rk4->step(state, config.dt);
      } else {
        leapfrog->step(state, config.dt);
      }
    } catch (const BlowUpError& e) {
      result.blow_up = e.info();
      if (sinks.snapshot) sinks.snapshot(state);
      if (sinks.failure) sinks.failure(state, e.info());
      return result;
    }
    if (sinks.series && state.step % config.series_every == 0) sinks.series(state);
    if (sinks.snapshot && state.step % config.snapshot_every == 0) sinks.snapshot(state);
  }
  return result;
}

}  // namespace vtx
