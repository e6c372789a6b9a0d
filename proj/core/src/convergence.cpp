#include "vtx/convergence.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <numbers>
#include <stdexcept>

#include "vtx/wyf.hpp"
#include "vtx/zk.hpp"

namespace vtx {
namespace {

struct Case {
  const char* name;
  DerivativeKind kind;
};

constexpr Case kCases[] = {
    {"dx", {Axis::x, DerivativeOrder::first}},
    {"dxx", {Axis::x, DerivativeOrder::second}},
    {"dxxx", {Axis::x, DerivativeOrder::third}},
    {"dy", {Axis::y, DerivativeOrder::first}},
    {"dyy", {Axis::y, DerivativeOrder::second}},
    {"laplacian", {Axis::x, DerivativeOrder::laplacian}},
    {"mixed_x_yy", {Axis::x, DerivativeOrder::mixed_x_yy}},
};

// Exact derivative of sin(a x) cos(b y).
double exact(DerivativeKind k, double a, double b, double x, double y) {
  const double s = std::sin(a * x), c = std::cos(a * x);
  const double cy = std::cos(b * y), sy = std::sin(b * y);
  switch (k.order) {
    case DerivativeOrder::first:
      return k.axis == Axis::x ? a * c * cy : -b * s * sy;
    case DerivativeOrder::second:
      return k.axis == Axis::x ? -a * a * s * cy : -b * b * s * cy;
    case DerivativeOrder::third:
      return k.axis == Axis::x ? -a * a * a * c * cy : b * b * b * s * sy;
    case DerivativeOrder::mixed_x_yy:
      return -a * b * b * c * cy;
    case DerivativeOrder::laplacian:
      return -(a * a + b * b) * s * cy;
  }
  return 0.0;
}

double max_diff(const Field2D& a, const Field2D& b) {
  const auto va = a.interior();
  const auto vb = b.interior();
  double m = 0.0;
  for (std::size_t k = 0; k < va.size(); ++k) m = std::max(m, std::abs(va[k] - vb[k]));
  return m;
}

}  // namespace

double fitted_order(std::span<const double> h, std::span<const double> error) {
  if (h.size() != error.size() || h.size() < 2) throw std::invalid_argument("fitted_order needs two or more matching points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(h.size());
  for (std::size_t k = 0; k < h.size(); ++k) {
    if (!(h[k] > 0) || !(error[k] > 0)) throw std::invalid_argument("fitted_order needs positive h and error");
    const double lx = std::log(h[k]), ly = std::log(error[k]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

std::vector<StencilStudy> stencil_convergence(std::span<const int> nx_levels, double lx, double ly) {
  const double a = 2.0 * std::numbers::pi / lx;
  const double b = std::numbers::pi / ly;
  std::vector<StencilStudy> out;
  for (const Case& c : kCases) out.push_back({c.name, c.kind, {}, {}, 0.0});
  for (int nx : nx_levels) {
    const Grid2D grid = make_grid(nx, nx / 2, lx, ly);
    Field2D u(grid);
    u.assign([&](double x, double y) { return std::sin(a * x) * std::cos(b * y); });
    for (StencilStudy& s : out) {
      const Field2D d = apply(s.kind, u);
      double err = 0.0;
      for (int j = 0; j < grid.rows(); ++j) {
        for (int i = 0; i < nx; ++i) err = std::max(err, std::abs(d(i, j) - exact(s.kind, a, b, grid.x(i), grid.y(j))));
      }
      s.h.push_back(grid.hx());
      s.max_error.push_back(err);
    }
  }
  for (StencilStudy& s : out) s.order = fitted_order(s.h, s.max_error);
  return out;
}

TimeStudy time_convergence(Scheme scheme, double dt0, double t_end, int levels, double asselin) {
  if (levels < 3) throw std::invalid_argument("time_convergence needs at least three levels");
  const Grid2D grid = make_grid(100, 50, 20.0, 10.0);
  const Model model{ModelKind::zk_limit};
  auto op = std::make_shared<RhsOperator>(grid, ShearFlow{}, model);
  const RhsFn rhs = [op](const Field2D& xi, Field2D& out) { (*op)(xi, out); };
  const Field2D initial = deposit_radial(grid, solve_radial(1.0), 0.0, 0.0);

  TimeStudy study;
  study.scheme = scheme;
  std::vector<Field2D> finals;
  double dt = dt0;
  for (int l = 0; l < levels; ++l, dt *= 0.5) {
    IntegratorConfig cfg;
    cfg.scheme = scheme;
    cfg.asselin = asselin;
    cfg.dt = dt;
    cfg.t_end = t_end;
    cfg.series_every = cfg.snapshot_every = cfg.total_steps() + 1;
    RunResult r = run(SimulationState{initial, 0, 0.0}, cfg, rhs, {});
    if (r.blow_up) throw BlowUpError(*r.blow_up);
    study.dt.push_back(dt);
    finals.push_back(std::move(r.state.xi));
  }
  for (std::size_t k = 0; k + 1 < finals.size(); ++k) study.differences.push_back(max_diff(finals[k], finals[k + 1]));
  for (std::size_t k = 0; k + 1 < study.differences.size(); ++k) {
    study.ratios.push_back(study.differences[k] / study.differences[k + 1]);
  }
  return study;
}

}  // namespace vtx
