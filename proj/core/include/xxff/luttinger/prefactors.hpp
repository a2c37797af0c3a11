#pragma once

#include "xxff/numerics/rational.hpp"
#include "xxff/numerics/special_functions.hpp"

#include <vector>

namespace xxff::luttinger {

/// Lowest formfactor of the m-th harmonic from the ground-state one:
/// psi_m = psi_0 (pi/L)^{m^2} (G(m+1/2) / (sqrt(pi) G(1/2)))^2
///         Gamma(m+1/2) / pi^{m-1/2}.
double psi_m_asymptotic(double psi_0, int m, int L);

/// Prefactor C_m of cos(pi m x) / (L sin(pi x / L))^{1/2 + 2 m^2}.
/// C_0 = 2^{-1/2} pi^{3/2} G(1/2)^4, and for m > 0
/// C_m = (-1)^m 2^{1/2 - 2m^2} pi^{2m^2 - 2m + 1/2} G(m+1/2)^4 Gamma(m+1/2)^2.
double prefactor_C(int m);
/// ln|C_m| and its sign; finite for every m where C_m itself overflows.
SignedLog prefactor_C_log(int m);

/// y_m = (-1)^m 2^{1 - 2m^2} (G(m+1/2) / (sqrt(pi) G(1/2)))^4
///       Gamma(m+1/2)^2 / pi^{2m-1}, evaluated in floating point.
double coefficient_y(int m);
SignedLog coefficient_y_log(int m);

/// The same y_m as an exact rational. Writing Gamma(k+1/2) = sqrt(pi) r_k with
/// r_k = (2k-1)!! / 2^k, every power of pi cancels:
/// y_m = (-1)^m 2^{1 - 2m^2} r_m^2 prod_{k<m} r_k^4.
BigRational coefficient_y_exact(int m);

struct PredictionTerm {
  int m;
  double prefactor;
  BigRational exponent;  // 1/2 + 2 m^2
};

/// Harmonics 0..m_max of the Luttinger-liquid correlator
/// G(x) = sum_m C_m cos(2 pF m x) / (L sin(pi x / L))^{1/2 + 2m^2}.
struct PredictionSeries {
  int m_max = 0;
  std::vector<PredictionTerm> terms;

  /// Thermodynamic limit, where L sin(pi x / L) -> pi x.
  double evaluate(int x) const;
  /// Finite chain of L sites.
  double evaluate(int x, int L) const;
};

PredictionSeries prediction_series(int m_max);

/// (C0 / sqrt(pi)) (x^{-1/2} + sum_{m=1}^{m_max} y_m cos(pi m x) x^{-1/2-2m^2}).
double luttinger_prediction_G(int x, int m_max, double c0);

}  // namespace xxff::luttinger
