#pragma once

#include "xxff/numerics/formal_series.hpp"
#include "xxff/numerics/rational.hpp"

#include <map>

namespace xxff::toeplitz {

/// ln R_N = lnA + log_n_coeff ln N + S(N), where
/// S(N) = sum_{k=2}^{order} (2^{2k} - 1) B_{2k} / (k (k-1) 2^{2k}) N^{-2(k-1)}
/// is kept as an exact series in the variable "1/N".
struct LogRSeries {
  double lnA;
  BigRational log_n_coeff;
  FormalSeries series;
  int order;

  double evaluate_tail(double N) const;
  double evaluate(double N) const;
};

/// Requires order >= 2.
LogRSeries log_R_series(int order);

/// G(x) = (C0/sqrt(pi)) x^{-1/2} sum_p (u_p + (-1)^x s_p) x^{-p}, with
/// C0/sqrt(pi) = A^2/sqrt(2). Both coefficient maps are exact and keyed by
/// the even power p.
struct AsymptoticExpansion {
  /// Coefficients up to this power are externally pinned; beyond it they are
  /// produced by the engine alone.
  static constexpr int kPinnedPower = 8;

  double prefactor;
  BigRational prefactor_exponent;
  std::map<int, BigRational> uniform_terms;
  std::map<int, BigRational> staggered_terms;
  /// Highest power of 1/x kept.
  int order;
  /// Normalized series for even and odd x, in the variable "1/x".
  FormalSeries even_branch;
  FormalSeries odd_branch;

  static bool is_extrapolated(int power) { return power > kPinnedPower; }
  /// u_p + (-1)^x s_p recombined for the parity of x.
  BigRational recombined(int power, int parity) const;
  double evaluate(int x) const;
};

/// Exact expansion through x^{-order}. order must be even and >= 4. The
/// expansion is built with two extra k-orders of ln R_N and the two highest
/// requested coefficients are checked against a build with one fewer;
/// std::logic_error is thrown if they move.
AsymptoticExpansion exact_expansion(int order);

}  // namespace xxff::toeplitz
