#include "xxff/numerics/special_functions.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace xxff {
namespace {

constexpr long double kHalfLn2Pi = 0.918938533204672741780329736405617639L;

// B_{2k} / (2k (2k-1)), k = 1..9.
constexpr long double kStirling[] = {
    1.0L / 12.0L,          -1.0L / 360.0L,       1.0L / 1260.0L,
    -1.0L / 1680.0L,       1.0L / 1188.0L,       -691.0L / 360360.0L,
    1.0L / 156.0L,         -3617.0L / 122400.0L, 43867.0L / 244188.0L,
};

long double stirling_ln_gamma(long double z) {
  const long double inv = 1.0L / z;
  const long double inv2 = inv * inv;
  long double tail = 0.0L;
  long double pw = inv;
  for (long double c : kStirling) {
    tail += c * pw;
    pw *= inv2;
  }
  return (z - 0.5L) * std::log(z) - z + kHalfLn2Pi + tail;
}

// sin(pi z) with the argument reduced to [-1, 1] first, so that integers give
// an exact zero and nearby arguments keep full relative precision.
double sin_pi(double z) {
  double r = std::fmod(z, 2.0);
  if (r > 1.0) r -= 2.0;
  if (r < -1.0) r += 2.0;
  if (r == 0.0 || r == 1.0 || r == -1.0) return 0.0;
  if (r > 0.5) r = 1.0 - r;
  if (r < -0.5) r = -1.0 - r;
  return std::sin(static_cast<double>(decimal::kPi) * r);
}

}  // namespace

double ln_gamma(double z) {
  if (!(z > 0.0)) {
    throw std::domain_error("ln_gamma: argument must be positive, got " + std::to_string(z));
  }
  if (z == 1.0 || z == 2.0) return 0.0;
  long double x = z;
  long double shift = 1.0L;
  while (x < 16.0L) {
    shift *= x;
    x += 1.0L;
  }
  return static_cast<double>(stirling_ln_gamma(x) - std::log(shift));
}

double gamma_signed(double z) {
  if (z <= 0.0 && z == std::floor(z)) {
    throw PoleError("gamma_signed: pole at " + std::to_string(z));
  }
  if (z > 0.0) {
    if (z == std::floor(z) && z < 30.0) {
      double f = 1.0;
      for (int k = 2; k < static_cast<int>(z); ++k) f *= k;
      return f;
    }
    return std::exp(ln_gamma(z));
  }
  // Gamma(z) Gamma(1 - z) = pi / sin(pi z)
  return static_cast<double>(decimal::kPi) / (sin_pi(z) * std::exp(ln_gamma(1.0 - z)));
}

SignedLog ln_abs_gamma(double z) {
  if (z > 0.0) return {ln_gamma(z), 1};
  if (z == std::floor(z)) throw PoleError("ln_abs_gamma: pole at " + std::to_string(z));
  const double s = sin_pi(z);
  const double log_abs = std::log(static_cast<double>(decimal::kPi) / std::fabs(s)) - ln_gamma(1.0 - z);
  return {log_abs, s > 0.0 ? 1 : -1};
}

double barnes_g_half_integer(int m) {
  if (m < 0) throw std::invalid_argument("barnes_g_half_integer: m must be non-negative");
  long double g = decimal::kBarnesGHalf;
  for (int k = 0; k < m; ++k) g *= std::exp(static_cast<long double>(ln_gamma(k + 0.5)));
  return static_cast<double>(g);
}

double Constants::a() const { return std::exp(lnA); }

double Constants::c0_over_sqrt_pi() const {
  return c0 / std::sqrt(static_cast<double>(decimal::kPi));
}

const Constants& constants() {
  static const Constants kConstants = [] {
    using namespace decimal;
    const long double g2 = kBarnesGHalf * kBarnesGHalf;
    Constants c{};
    c.zetaPrimeMinus1 = static_cast<double>(kZetaPrimeMinus1);
    c.lnA = static_cast<double>(kLn2 / 12.0L + 3.0L * kZetaPrimeMinus1);
    c.barnesGHalf = static_cast<double>(kBarnesGHalf);
    c.c0 = static_cast<double>(std::pow(kPi, 1.5L) * g2 * g2 / std::sqrt(2.0L));
    return c;
  }();
  return kConstants;
}

}  // namespace xxff
