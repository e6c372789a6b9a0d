#include "vtx/entropy.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <mutex>
#include <stdexcept>

#include "vtx/diagnostics.hpp"

namespace vtx {
namespace {

// FFTW's planner is not thread-safe.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

// Full two-sided unnormalized DFT of a real sequence.
std::vector<std::complex<double>> real_dft(std::span<const double> x) {
  const int n = static_cast<int>(x.size());
  std::vector<double> in(x.begin(), x.end());
  std::vector<std::complex<double>> half(static_cast<std::size_t>(n / 2 + 1));
  fftw_plan plan;
  {
    std::lock_guard lock(planner_mutex());
    plan = fftw_plan_dft_r2c_1d(n, in.data(), reinterpret_cast<fftw_complex*>(half.data()), FFTW_ESTIMATE);
  }
  fftw_execute(plan);
  {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(plan);
  }
  std::vector<std::complex<double>> full(static_cast<std::size_t>(n));
  for (int k = 0; k <= n / 2; ++k) full[static_cast<std::size_t>(k)] = half[static_cast<std::size_t>(k)];
  for (int k = n / 2 + 1; k < n; ++k) {
    full[static_cast<std::size_t>(k)] = std::conj(half[static_cast<std::size_t>(n - k)]);
  }
  return full;
}

}  // namespace

std::optional<ModalSpectrum> spectrum_1d(std::span<const double> slice, bool exclude_mean) {
  const std::size_t n = slice.size();
  if (n < 2) throw std::invalid_argument("spectrum needs at least 2 samples");
  std::vector<double> x(slice.begin(), slice.end());
  double raw_energy = 0.0;
  for (double v : x) raw_energy += v * v;
  if (exclude_mean) {
    double mean = 0.0;
    for (double v : x) mean += v;
    mean /= static_cast<double>(n);
    for (double& v : x) v -= mean;
  }

  ModalSpectrum s;
  s.mean_excluded = exclude_mean;
  s.coefficients = real_dft(x);
  const double norm = 1.0 / std::sqrt(static_cast<double>(n));
  for (auto& a : s.coefficients) a *= norm;
  if (exclude_mean) s.coefficients[0] = 0.0;

  s.fractions.assign(n, 0.0);
  double total = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    s.fractions[k] = std::norm(s.coefficients[k]);
    total += s.fractions[k];
  }
  // Residue of mean removal on a constant slice sits near 1e-32 relative.
  if (!(total > 1e-24 * raw_energy)) return std::nullopt;
  for (double& f : s.fractions) f /= total;
  return s;
}

double ce_periodic(std::span<const double> fractions) {
  // log S - sum(f log f) / S, which absorbs rounding in the normalization.
  // Extended accumulation keeps a uniform N-mode spectrum at exactly log N
  // for every mode count of the default grid.
  long double total = 0.0L, weighted = 0.0L;
  for (double f : fractions) {
    if (f > 0.0) {
      total += f;
      weighted += static_cast<long double>(f) * std::log(static_cast<long double>(f));
    }
  }
  if (total == 0.0L) return 0.0;
  return static_cast<double>(std::log(total) - weighted / total);
}

double ce_periodic(const ModalSpectrum& spectrum) { return ce_periodic(spectrum.fractions); }

double ce_nonperiodic(std::span<const double> samples, double spacing) {
  const std::size_t n = samples.size();
  if (n < 4) throw std::invalid_argument("ce_nonperiodic needs at least 4 samples");
  if (!(spacing > 0.0)) throw std::invalid_argument("spacing must be positive");
  double peak = 0.0;
  for (double v : samples) peak = std::max(peak, std::abs(v));
  if (!(peak > 0.0)) throw std::invalid_argument("ce_nonperiodic of a zero profile is undefined");
  if (std::abs(samples.front()) > 1e-3 * peak || std::abs(samples.back()) > 1e-3 * peak) {
    throw std::invalid_argument("profile does not decay at the window ends");
  }

  std::size_t m = 1;
  while (m < 8 * n) m <<= 1;
  std::vector<double> padded(m, 0.0);
  std::copy(samples.begin(), samples.end(), padded.begin());
  const auto spectrum = real_dft(padded);

  // |F(k)|^2 on k_q = 2 pi q / (m spacing), q in [-m/2, m/2].
  std::vector<double> power(m + 1);
  double pmax = 0.0;
  for (std::size_t q = 0; q <= m; ++q) {
    const std::size_t idx = (q + m / 2) % m;
    power[q] = std::norm(spectrum[idx]);
    pmax = std::max(pmax, power[q]);
  }
  const double dk = 2.0 * std::acos(-1.0) / (static_cast<double>(m) * spacing);
  double s = 0.0;
  for (std::size_t q = 0; q <= m; ++q) {
    const double f = power[q] / pmax;
    const double term = f > 0.0 ? -f * std::log(f) : 0.0;
    s += (q == 0 || q == m) ? 0.5 * term : term;
  }
  return s * dk;
}

int slice_row(const Field2D& xi, const CESpec& spec) {
  const Grid2D& g = xi.grid();
  if (spec.slice_rule == SliceRule::fixed_y) {
    if (!(spec.y >= -g.ly() && spec.y <= g.ly())) throw std::invalid_argument("CE slice y outside the domain");
    return g.nearest_row(spec.y);
  }
  const Peak p = peak(xi);
  return g.nearest_row(p.y);
}

std::optional<double> ce_of_state(const Field2D& xi, const CESpec& spec) {
  const int j = slice_row(xi, spec);
  const double* r = xi.row(j);
  const auto s = spectrum_1d(std::span<const double>(r, static_cast<std::size_t>(xi.grid().nx())), spec.exclude_mean);
  if (!s) return std::nullopt;
  return ce_periodic(*s);
}

}  // namespace vtx
