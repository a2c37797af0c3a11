#pragma once

// Gamma(z) = int_0^inf t^{z-1} e^{-t} dt for z > 0, by substituting
// t = e^s and integrating exp(z s - e^s) over s with the trapezoid rule,
// which converges geometrically for this doubly-decaying integrand.

#include <cmath>

namespace oracle {

inline double euler_gamma(double z) {
  const double lo = -60.0 / z, hi = 6.0;
  const int n = 200000;
  const double h = (hi - lo) / n;
  double acc = 0.0;
  for (int i = 0; i <= n; ++i) {
    const double s = lo + i * h;
    const double w = (i == 0 || i == n) ? 0.5 : 1.0;
    acc += w * std::exp(z * s - std::exp(s));
  }
  return acc * h;
}

}  // namespace oracle
