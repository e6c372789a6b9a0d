#include "vtx/zk.hpp"

#include <cmath>

// Boost 1.74's pchip calls isnan unqualified.
using std::isnan;
#include <boost/math/interpolators/pchip.hpp>

#include <stdexcept>
#include <string>

namespace vtx {

struct RadialInterpolant {
  boost::math::interpolators::pchip<std::vector<double>> table;
  double r_max;
  double sqrt_c;
  double tail_amplitude;
};

namespace {

enum class Shot { overshoot, undershoot };

struct OdeState {
  double phi;
  double dphi;
};

// phi'' = c phi - phi^2 - phi'/r
OdeState rhs(double c, double r, OdeState s) {
  return {s.dphi, c * s.phi - s.phi * s.phi - s.dphi / r};
}

OdeState rk4(double c, double r, double h, OdeState s) {
  const OdeState k1 = rhs(c, r, s);
  const OdeState k2 = rhs(c, r + 0.5 * h, {s.phi + 0.5 * h * k1.phi, s.dphi + 0.5 * h * k1.dphi});
  const OdeState k3 = rhs(c, r + 0.5 * h, {s.phi + 0.5 * h * k2.phi, s.dphi + 0.5 * h * k2.dphi});
  const OdeState k4 = rhs(c, r + h, {s.phi + h * k3.phi, s.dphi + h * k3.dphi});
  return {s.phi + h / 6.0 * (k1.phi + 2.0 * k2.phi + 2.0 * k3.phi + k4.phi),
          s.dphi + h / 6.0 * (k1.dphi + 2.0 * k2.dphi + 2.0 * k3.dphi + k4.dphi)};
}

// Regular series start: phi(r) = phi0 + (c phi0 - phi0^2) r^2 / 4 + O(r^4).
OdeState series_start(double c, double phi0, double r) {
  const double a = c * phi0 - phi0 * phi0;
  return {phi0 + 0.25 * a * r * r, 0.5 * a * r};
}

Shot shoot(double c, double phi0, double dr, long steps) {
  OdeState s = series_start(c, phi0, dr);
  for (long k = 1; k < steps; ++k) {
    s = rk4(c, k * dr, dr, s);
    if (!(s.phi > 0.0)) return Shot::overshoot;
    if (s.dphi > 0.0) return Shot::undershoot;
  }
  return Shot::undershoot;
}

}  // namespace

double RadialProfile::operator()(double r) const {
  if (!interp_) throw std::logic_error("RadialProfile used before build_interpolant()");
  r = std::abs(r);
  if (r <= interp_->r_max) return interp_->table(r);
  return interp_->tail_amplitude * std::cyl_bessel_k(0.0, interp_->sqrt_c * r);
}

void RadialProfile::build_interpolant() {
  if (values.size() < 4 || !(dr > 0.0)) throw std::invalid_argument("radial table needs >= 4 rows");
  std::vector<double> r(values.size());
  for (std::size_t k = 0; k < r.size(); ++k) r[k] = static_cast<double>(k) * dr;
  std::vector<double> v = values;
  interp_ = std::make_shared<const RadialInterpolant>(RadialInterpolant{
      boost::math::interpolators::pchip<std::vector<double>>(std::move(r), std::move(v), 0.0),
      static_cast<double>(values.size() - 1) * dr, std::sqrt(c), tail_amplitude});
}

RadialProfile solve_radial(double c, const RadialSolveOptions& options) {
  if (!(c > 0.0) || !std::isfinite(c)) throw std::invalid_argument("wave speed c must be positive");
  if (!(options.dr > 0.0) || !(options.tol > 0.0)) throw std::invalid_argument("dr and tol must be positive");
  const double r_max = options.r_max > 0.0 ? options.r_max : 30.0 / std::sqrt(c);
  const long steps = std::lround(r_max / options.dr);
  if (steps < 8) throw std::invalid_argument("r_max / dr too small");

  double lo = c;
  double hi = 10.0 * c;
  if (shoot(c, lo, options.dr, steps) != Shot::undershoot ||
      shoot(c, hi, options.dr, steps) != Shot::overshoot) {
    throw std::runtime_error("no shooting bracket for c=" + std::to_string(c) + " in [c, 10c]");
  }
  while (hi - lo >= options.tol * std::max(1.0, lo)) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (shoot(c, mid, options.dr, steps) == Shot::overshoot ? hi : lo) = mid;
  }

  RadialProfile p;
  p.c = c;
  p.dr = options.dr;
  p.r_max = static_cast<double>(steps) * options.dr;
  p.values.assign(static_cast<std::size_t>(steps) + 1, 0.0);
  p.values[0] = lo;

  // March the undershooting trajectory until it is well into the decay
  // region, then graft the linearized K0 tail.
  const double match_level = 1e-4 * lo;
  OdeState s = series_start(c, lo, options.dr);
  p.values[1] = s.phi;
  long match = -1;
  for (long k = 1; k < steps; ++k) {
    if (s.phi < match_level) {
      match = k;
      break;
    }
    if (!(s.dphi < 0.0) || !(s.phi > 0.0)) {
      throw std::runtime_error("radial trajectory is not monotone before the tail match; tighten tol");
    }
    s = rk4(c, k * options.dr, options.dr, s);
    p.values[static_cast<std::size_t>(k) + 1] = s.phi;
  }
  if (match < 0) throw std::runtime_error("profile never decayed below the tail match level; raise r_max");

  const double sqrt_c = std::sqrt(c);
  p.tail_radius = static_cast<double>(match) * options.dr;
  p.tail_amplitude = p.values[static_cast<std::size_t>(match)] / std::cyl_bessel_k(0.0, sqrt_c * p.tail_radius);
  for (long k = match + 1; k <= steps; ++k) {
    p.values[static_cast<std::size_t>(k)] =
        p.tail_amplitude * std::cyl_bessel_k(0.0, sqrt_c * static_cast<double>(k) * options.dr);
  }
  p.build_interpolant();
  return p;
}

RadialProfile profile_from_table(double c, const std::vector<double>& r, const std::vector<double>& phi) {
  if (r.size() != phi.size() || r.size() < 4) throw std::invalid_argument("radial table needs >= 4 matching rows");
  if (r.front() != 0.0) throw std::invalid_argument("radial table must start at r = 0");
  const double dr = r[1] - r[0];
  for (std::size_t k = 1; k < r.size(); ++k) {
    if (std::abs((r[k] - r[k - 1]) - dr) > 1e-9 * dr) throw std::invalid_argument("radial table is not uniform");
  }
  RadialProfile p;
  p.c = c;
  p.dr = dr;
  p.values = phi;
  p.r_max = r.back();
  p.tail_radius = r.back();
  p.tail_amplitude = phi.back() / std::cyl_bessel_k(0.0, std::sqrt(c) * r.back());
  p.build_interpolant();
  return p;
}

double PlaneSoliton::operator()(double x, double y, double t) const {
  const double arg = 0.5 * std::sqrt(c) * ((x - c * t) * std::cos(theta) + y * std::sin(theta));
  const double sech = 1.0 / std::cosh(arg);
  return 1.5 * c * sech * sech;
}

Field2D plane_soliton_field(const Grid2D& grid, const PlaneSoliton& soliton, double t) {
  if (!(soliton.c > 0.0)) throw std::invalid_argument("plane soliton needs c > 0");
  Field2D f(grid);
  // The crest is placed on the nearest periodic image of x - ct.
  const double shift = soliton.c * t;
  f.assign([&](double x, double y) {
    return soliton(periodic_dx(x, shift, grid.lx()), y, 0.0);
  });
  return f;
}

Field2D deposit_radial(const Grid2D& grid, const RadialProfile& profile, double x0, double y0) {
  Field2D f(grid);
  f.assign([&](double x, double y) {
    const double dx = periodic_dx(x, x0, grid.lx());
    const double dy = y - y0;
    return profile(std::sqrt(dx * dx + dy * dy));
  });
  return f;
}

}  // namespace vtx
