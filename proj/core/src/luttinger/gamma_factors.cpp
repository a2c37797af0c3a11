#include "xxff/luttinger/gamma_factors.hpp"

#include "xxff/numerics/special_functions.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace xxff::luttinger {
namespace {

// Gamma(num) / (Gamma(den1) Gamma(den2)) through signed log-Gamma.
double gamma_ratio(double num, double den1, double den2) {
  const auto n = ln_abs_gamma(num);
  const auto d1 = ln_abs_gamma(den1);
  const auto d2 = ln_abs_gamma(den2);
  return n.sign * d1.sign * d2.sign * std::exp(n.log_abs - d1.log_abs - d2.log_abs);
}

// (x)_n / n!
BigRational rising_over_factorial(const BigRational& x, int n) {
  BigRational acc = 1;
  for (int k = 0; k < n; ++k) acc *= (x + k) / (k + 1);
  return acc;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

void check_signs(std::span<const int> particles, std::span<const int> holes, Branch branch) {
  require(particles.size() == holes.size(), "cauchy_determinant_factor: particle and hole counts differ");
  for (int p : particles)
    require(branch == Branch::Right ? p > 0 : p < 0, "cauchy_determinant_factor: particle offset has the wrong sign");
  for (int q : holes)
    require(branch == Branch::Right ? q <= 0 : q >= 0, "cauchy_determinant_factor: hole offset has the wrong sign");
}

// det(1/(p_i - q_j)) = prod_{i<j} (p_j - p_i)(q_i - q_j) / prod_{i,j} (p_i - q_j)
template <class T>
T cauchy_det(std::span<const int> p, std::span<const int> q) {
  T num = 1;
  T den = 1;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j) num *= T(p[j] - p[i]) * T(q[i] - q[j]);
  for (int pi : p)
    for (int qj : q) den *= T(pi - qj);
  return num / den;
}

}  // namespace

double f_plus_right(int p, double a) {
  require(p >= 1, "f_plus_right: p must be > 0");
  return gamma_ratio(p + a, p, a);
}

double f_minus_right(int q, double a) {
  require(q <= 0, "f_minus_right: q must be <= 0");
  return gamma_ratio(1 - q - a, 1 - q, 1 - a);
}

double f_plus_left(int p, double c) {
  require(p <= -1, "f_plus_left: p must be < 0");
  return gamma_ratio(-p - c, -p, 1 - c);
}

double f_minus_left(int q, double c) {
  require(q >= 0, "f_minus_left: q must be >= 0");
  return gamma_ratio(1 + q + c, 1 + q, c);
}

std::pair<double, double> f_factors_left(int p, int q, double c) {
  return {f_plus_left(p, c), f_minus_left(q, c)};
}

BigRational f_plus_right_exact(int p, const BigRational& a) {
  require(p >= 1, "f_plus_right_exact: p must be > 0");
  // (a)_p / (p-1)! = a (a+1)_{p-1} / (p-1)!
  return a * rising_over_factorial(a + 1, p - 1);
}

BigRational f_minus_right_exact(int q, const BigRational& a) {
  require(q <= 0, "f_minus_right_exact: q must be <= 0");
  return rising_over_factorial(1 - a, -q);
}

BigRational f_plus_left_exact(int p, const BigRational& c) {
  require(p <= -1, "f_plus_left_exact: p must be < 0");
  return rising_over_factorial(1 - c, -p - 1);
}

BigRational f_minus_left_exact(int q, const BigRational& c) {
  require(q >= 0, "f_minus_left_exact: q must be >= 0");
  // (c)_{q+1} / q! = c (c+1)_q / q!
  return c * rising_over_factorial(c + 1, q);
}

double cauchy_determinant_factor(std::span<const int> particles, std::span<const int> holes,
                                 Branch branch, double exponent_param) {
  check_signs(particles, holes, branch);
  if (particles.empty()) return 1.0;
  double f = cauchy_det<double>(particles, holes);
  for (int p : particles) f *= branch == Branch::Right ? f_plus_right(p, exponent_param) : f_plus_left(p, exponent_param);
  for (int q : holes) f *= branch == Branch::Right ? f_minus_right(q, exponent_param) : f_minus_left(q, exponent_param);
  return f;
}

BigRational cauchy_determinant_factor_exact(std::span<const int> particles,
                                            std::span<const int> holes, Branch branch,
                                            const BigRational& exponent_param) {
  check_signs(particles, holes, branch);
  if (particles.empty()) return 1;
  BigRational f = cauchy_det<BigRational>(particles, holes);
  for (int p : particles)
    f *= branch == Branch::Right ? f_plus_right_exact(p, exponent_param) : f_plus_left_exact(p, exponent_param);
  for (int q : holes)
    f *= branch == Branch::Right ? f_minus_right_exact(q, exponent_param) : f_minus_left_exact(q, exponent_param);
  return f;
}

double ph_formfactor_prediction(double psi_m, const ParticleHoleConfig& config,
                                const LuttingerParams& params) {
  config.validate();
  const double fa = cauchy_determinant_factor(config.right.particles, config.right.holes, Branch::Right, params.a(config.m));
  const double fc = cauchy_determinant_factor(config.left.particles, config.left.holes, Branch::Left, params.c(config.m));
  return psi_m * fa * fc;
}

}  // namespace xxff::luttinger
