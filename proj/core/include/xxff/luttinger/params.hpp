#pragma once

#include <cmath>
#include <numbers>

namespace xxff::luttinger {

/// Luttinger parameter and Fermi momentum. Only the XX point xi = 1 is
/// validated against the lattice; other values give untested predictions.
struct LuttingerParams {
  double xi = 1.0;
  double pF = std::numbers::pi / 2.0;

  /// Right-branch exponent a = -sqrt(xi)/2 + m/sqrt(xi).
  double a(int m) const { return -std::sqrt(xi) / 2.0 + m / std::sqrt(xi); }
  /// Left-branch exponent c = sqrt(xi)/2 + m/sqrt(xi).
  double c(int m) const { return std::sqrt(xi) / 2.0 + m / std::sqrt(xi); }
  /// Exponent xi/2 + 2 m^2 / xi of the m-th harmonic.
  double exponent(int m) const { return xi / 2.0 + 2.0 * m * m / xi; }
  bool validated() const { return xi == 1.0; }
};

}  // namespace xxff::luttinger
