#include "xxff/luttinger/prefactors.hpp"

#include "xxff/numerics/special_functions.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace xxff::luttinger {
namespace {

constexpr double kPi = std::numbers::pi;

void require_nonnegative(int m, const char* who) {
  if (m < 0) throw std::invalid_argument(std::string(who) + ": m must be non-negative");
}

// ln(G(m+1/2) / (sqrt(pi) G(1/2))) = sum_{k=1}^{m-1} ln Gamma(k+1/2) for
// m >= 1, and -ln(pi)/2 at m = 0.
double ln_barnes_ratio(int m) {
  if (m == 0) return -0.5 * std::log(kPi);
  double acc = 0.0;
  for (int k = 1; k < m; ++k) acc += ln_gamma(k + 0.5);
  return acc;
}

}  // namespace

double psi_m_asymptotic(double psi_0, int m, int L) {
  require_nonnegative(m, "psi_m_asymptotic");
  if (L <= 0) throw std::invalid_argument("psi_m_asymptotic: L must be positive");
  const double log_factor = m * m * std::log(kPi / L) + 2.0 * ln_barnes_ratio(m) + ln_gamma(m + 0.5) -
                            (m - 0.5) * std::log(kPi);
  return psi_0 * std::exp(log_factor);
}

SignedLog prefactor_C_log(int m) {
  require_nonnegative(m, "prefactor_C");
  if (m == 0) return {std::log(constants().c0), 1};
  const double mm = static_cast<double>(m) * m;
  const double ln_g = std::log(constants().barnesGHalf) + 0.5 * std::log(kPi) + ln_barnes_ratio(m);
  const double log_abs = (0.5 - 2.0 * mm) * std::log(2.0) + (2.0 * mm - 2.0 * m + 0.5) * std::log(kPi) +
                         4.0 * ln_g + 2.0 * ln_gamma(m + 0.5);
  return {log_abs, m % 2 == 0 ? 1 : -1};
}

double prefactor_C(int m) {
  const auto l = prefactor_C_log(m);
  return l.sign * std::exp(l.log_abs);
}

SignedLog coefficient_y_log(int m) {
  if (m < 1) throw std::invalid_argument("coefficient_y: m must be >= 1");
  const double mm = static_cast<double>(m) * m;
  const double log_abs = (1.0 - 2.0 * mm) * std::log(2.0) + 4.0 * ln_barnes_ratio(m) +
                         2.0 * ln_gamma(m + 0.5) - (2.0 * m - 1.0) * std::log(kPi);
  return {log_abs, m % 2 == 0 ? 1 : -1};
}

double coefficient_y(int m) {
  const auto l = coefficient_y_log(m);
  return l.sign * std::exp(l.log_abs);
}

BigRational coefficient_y_exact(int m) {
  if (m < 1) throw std::invalid_argument("coefficient_y_exact: m must be >= 1");
  // r_k = (2k-1)!! / 2^k, so Gamma(k+1/2) = sqrt(pi) r_k.
  BigRational r = 1;
  BigRational prod = 1;
  for (int k = 1; k < m; ++k) {
    r *= BigRational(2 * k - 1, 2);
    prod *= r * r * r * r;
  }
  r *= BigRational(2 * m - 1, 2);
  BigRational y = prod * r * r;
  mpz_class pow2;
  mpz_ui_pow_ui(pow2.get_mpz_t(), 2, static_cast<unsigned long>(2 * m * m - 1));
  y /= BigRational(pow2);
  return m % 2 == 0 ? y : BigRational(-y);
}

double PredictionSeries::evaluate(int x) const {
  double acc = 0.0;
  for (const auto& t : terms) {
    const double osc = (static_cast<long>(t.m) * x) % 2 == 0 ? 1.0 : -1.0;
    acc += t.prefactor * osc * std::pow(kPi * x, -t.exponent.get_d());
  }
  return acc;
}

double PredictionSeries::evaluate(int x, int L) const {
  const double chord = L * std::sin(kPi * x / L);
  double acc = 0.0;
  for (const auto& t : terms) {
    const double osc = (static_cast<long>(t.m) * x) % 2 == 0 ? 1.0 : -1.0;
    acc += t.prefactor * osc * std::pow(chord, -t.exponent.get_d());
  }
  return acc;
}

PredictionSeries prediction_series(int m_max) {
  require_nonnegative(m_max, "prediction_series");
  PredictionSeries s;
  s.m_max = m_max;
  for (int m = 0; m <= m_max; ++m) s.terms.push_back({m, prefactor_C(m), BigRational(1, 2) + 2 * m * m});
  return s;
}

double luttinger_prediction_G(int x, int m_max, double c0) {
  if (x < 1) throw std::invalid_argument("luttinger_prediction_G: x must be >= 1");
  require_nonnegative(m_max, "luttinger_prediction_G");
  const double xd = x;
  double bracket = 1.0;
  for (int m = 1; m <= m_max; ++m) {
    const double osc = (static_cast<long>(m) * x) % 2 == 0 ? 1.0 : -1.0;
    bracket += coefficient_y_exact(m).get_d() * osc * std::pow(xd, -2.0 * m * m);
  }
  return c0 / std::sqrt(kPi) * bracket / std::sqrt(xd);
}

}  // namespace xxff::luttinger
