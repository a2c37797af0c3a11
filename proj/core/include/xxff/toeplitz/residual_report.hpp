#pragma once

#include <vector>

namespace xxff::toeplitz {

struct ResidualRow {
  int x;
  double exact;
  double luttinger;
  double series;
  /// exact - luttinger
  double luttinger_residual;
  /// (series - exact) / exact
  double series_relative_residual;
};

struct ResidualReport {
  int m_max;
  int order;
  std::vector<ResidualRow> rows;
  /// Decay exponent e of |exact - luttinger| ~ x^{-e}, fitted over all rows.
  double fitted_exponent;
  double max_series_relative_residual;
};

/// Compares exact_G(x) with the m_max-harmonic Luttinger prediction and with
/// the exact asymptotic series through x^{-order}. Requires x >= 8 and at
/// least two x values.
ResidualReport series_residual_report(const std::vector<int>& x_values, int m_max, int order);

}  // namespace xxff::toeplitz
