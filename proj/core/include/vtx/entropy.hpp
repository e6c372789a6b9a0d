#pragma once

#include <complex>
#include <optional>
#include <span>
#include <vector>

#include "vtx/grid.hpp"

namespace vtx {

/// Unitary DFT of a real slice, A_n = N^(-1/2) sum_k x_k exp(-2 pi i n k / N),
/// so that sum |A_n|^2 = sum x_k^2.
struct ModalSpectrum {
  std::vector<std::complex<double>> coefficients;
  /// |A_n|^2 / sum_m |A_m|^2 over the retained modes. Mode 0 is 0 when the
  /// mean was excluded.
  std::vector<double> fractions;
  bool mean_excluded = true;
};

/// nullopt when the retained modes carry no energy (e.g. a constant slice
/// with the mean excluded).
std::optional<ModalSpectrum> spectrum_1d(std::span<const double> slice, bool exclude_mean = true);

/// -sum f_n log f_n with 0 log 0 = 0; fractions are renormalized to sum 1.
double ce_periodic(const ModalSpectrum& spectrum);
double ce_periodic(std::span<const double> fractions);

/// Entropy of a localized profile sampled with the given spacing.
///
/// The continuum transform F(k) is approximated by a zero-padded DFT; with
/// the power spectrum P(k) = |F(k)|^2 and f(k) = P(k) / max P, the result
/// is -integral f log f dk (trapezoid rule). For exp(-a x^2) this tends to
/// sqrt(2 pi a) / 2. Throws std::invalid_argument when either endpoint
/// exceeds 1e-3 of the maximum magnitude.
double ce_nonperiodic(std::span<const double> samples, double spacing);

enum class SliceRule { through_peak, fixed_y };

struct CESpec {
  SliceRule slice_rule = SliceRule::through_peak;
  double y = 0.0;  ///< used by fixed_y
  bool exclude_mean = true;

  bool operator==(const CESpec&) const = default;
};

/// Row index selected by the slice rule.
int slice_row(const Field2D& xi, const CESpec& spec);

/// Periodic CE of the selected x-row; nullopt for a degenerate spectrum.
std::optional<double> ce_of_state(const Field2D& xi, const CESpec& spec);

}  // namespace vtx
