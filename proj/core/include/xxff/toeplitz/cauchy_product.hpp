#pragma once

#include <vector>

namespace xxff::toeplitz {

/// Running value of ln R_N, advanced one N at a time through
///   ln R_{N+1} = ln R_N + ln(2/pi) + sum_{k=1}^{N} log1p(1 / (4k^2 - 1)),
/// with both sums Kahan-compensated in long double.
class RProductAccumulator {
 public:
  int n() const { return n_; }
  double log_R() const { return static_cast<double>(log_r_); }
  void advance();

 private:
  int n_ = 0;
  long double log_r_ = 0.0L, log_r_c_ = 0.0L;
  long double inner_ = 0.0L, inner_c_ = 0.0L;
};

/// R_N = (2/pi)^N prod_{k=1}^{N-1} [(2k)^2 / ((2k+1)(2k-1))]^{N-k}.
double cauchy_R(int N);
double log_cauchy_R(int N);

/// Thermodynamic correlator: G(2N) = R_N^2 / 2, G(2N+1) = R_N R_{N+1} / 2.
double exact_G(int x);
double log_exact_G(int x);

/// exact_G(1..x_max) in one O(x_max) pass; element i holds G(i + 1).
std::vector<double> exact_G_table(int x_max);

}  // namespace xxff::toeplitz
