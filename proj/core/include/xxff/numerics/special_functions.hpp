#pragma once

#include <stdexcept>

namespace xxff {

/// Thrown when a Gamma-type function is evaluated at a pole.
class PoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// ln Gamma(z) for z > 0, via upward recursion to z >= 16 followed by the
/// Stirling series. Absolute error stays below 1e-13 on (0, 100].
/// Throws std::domain_error for z <= 0.
double ln_gamma(double z);

/// Gamma(z) with sign for any real z that is not a non-positive integer.
/// Negative arguments go through the reflection formula.
double gamma_signed(double z);

/// ln|Gamma(z)| together with the sign of Gamma(z), for any non-pole z.
struct SignedLog {
  double log_abs;
  int sign;
};
SignedLog ln_abs_gamma(double z);

/// Barnes G(m + 1/2), from the stored G(1/2) and G(1 + z) = Gamma(z) G(z).
double barnes_g_half_integer(int m);

/// Mathematical constants entering the prefactors of the XX correlator.
///
/// lnA is the log of A = 2^{1/12} e^{3 zeta'(-1)}, the constant term of the
/// large-N expansion of ln R_N. c0 = 2^{-1/2} pi^{3/2} G(1/2)^4 is the
/// leading prefactor; the two routes meet through A^2 = pi G(1/2)^4.
struct Constants {
  double lnA;
  double zetaPrimeMinus1;
  double barnesGHalf;
  double c0;

  double a() const;
  /// C0 / sqrt(pi), the overall normalization of the x^{-1/2} series.
  double c0_over_sqrt_pi() const;
};

/// Constants assembled from stored decimal values (>= 20 digits).
const Constants& constants();

namespace decimal {
// zeta'(-1)
inline constexpr long double kZetaPrimeMinus1 = -0.165421143700450929213919660242780643L;
// G(1/2)
inline constexpr long double kBarnesGHalf = 0.603244281209446206191429224534702080L;
inline constexpr long double kPi = 3.141592653589793238462643383279502884L;
inline constexpr long double kLn2 = 0.693147180559945309417232121458176568L;
}  // namespace decimal

}  // namespace xxff
