#include "xxff/luttinger/appendix_quadrature.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace xxff::luttinger {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kGrading = 8;
constexpr int kPanelPoints = 16;
constexpr double kContourRadius = 0.5;

struct GaussRule {
  std::array<double, kPanelPoints> nodes{};
  std::array<double, kPanelPoints> weights{};
};

// Gauss-Legendre on [-1, 1] by Newton iteration on P_n.
const GaussRule& gauss_rule() {
  static const GaussRule rule = [] {
    GaussRule r;
    constexpr int n = kPanelPoints;
    for (int i = 0; i < n; ++i) {
      double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
      double dp = 0.0;
      for (int it = 0; it < 100; ++it) {
        double p0 = 1.0, p1 = x;
        for (int k = 2; k <= n; ++k) {
          const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
          p0 = p1;
          p1 = p2;
        }
        dp = n * (x * p1 - p0) / (x * x - 1.0);
        const double dx = p1 / dp;
        x -= dx;
        if (std::fabs(dx) < 1e-16) break;
      }
      r.nodes[static_cast<std::size_t>(i)] = x;
      r.weights[static_cast<std::size_t>(i)] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return r;
  }();
  return rule;
}

// int_0^{2 pi} dy/2pi z^{-n} (1 - z)^beta with z = e^{i sigma y}, beta > -1,
// on the unit circle. Each half of [0, 2 pi] is graded as y = pi u^8 towards
// its endpoint singularity.
double unit_circle_mode(int n, double beta, int sigma, int nodes) {
  const auto& rule = gauss_rule();
  const int panels = std::max(1, nodes / (2 * kPanelPoints));
  std::complex<double> acc = 0.0;
  for (int half = 0; half < 2; ++half) {
    for (int pnl = 0; pnl < panels; ++pnl) {
      const double lo = static_cast<double>(pnl) / panels;
      const double hi = static_cast<double>(pnl + 1) / panels;
      for (int i = 0; i < kPanelPoints; ++i) {
        const double u = 0.5 * (hi - lo) * rule.nodes[static_cast<std::size_t>(i)] + 0.5 * (hi + lo);
        const double w = 0.5 * (hi - lo) * rule.weights[static_cast<std::size_t>(i)];
        const double ug = std::pow(u, kGrading);
        const double jac = kPi * kGrading * std::pow(u, kGrading - 1);
        const double y = half == 0 ? kPi * ug : 2.0 * kPi - kPi * ug;
        // sin(y/2) = sin(pi u^8 / 2) on both halves.
        const double modulus = std::pow(2.0 * std::sin(0.5 * kPi * ug), beta);
        const double arg = sigma * (beta * (y - kPi) / 2.0 - n * y);
        acc += w * jac * std::polar(modulus, arg);
      }
    }
  }
  return acc.real() / (2.0 * kPi);
}

// Same Fourier mode on the circle |z| = r < 1, where the integrand is smooth
// and the trapezoidal rule converges geometrically.
double contour_mode(int n, double beta, int sigma, int nodes) {
  std::complex<double> acc = 0.0;
  for (int j = 0; j < nodes; ++j) {
    const double theta = 2.0 * kPi * j / nodes;
    const std::complex<double> z = std::polar(kContourRadius, sigma * theta);
    acc += std::pow(1.0 - z, beta) * std::pow(z, -n);
  }
  return acc.real() / nodes;
}

double fourier_mode(int n, double beta, int sigma, int nodes) {
  if (nodes < 2 * kPanelPoints) throw std::invalid_argument("appendix quadrature: too few nodes");
  return beta > -1.0 ? unit_circle_mode(n, beta, sigma, nodes) : contour_mode(n, beta, sigma, nodes);
}

}  // namespace

double appendix_integral_fplus(int p, double a, int quadrature_nodes) {
  if (p < 1) throw std::invalid_argument("appendix_integral_fplus: p must be > 0");
  if (a >= 0.0) {
    throw std::domain_error("appendix_integral_fplus: endpoint singularity (1 - e^{iy})^{-(a+1)} is not integrable for a >= 0");
  }
  return a * fourier_mode(p - 1, -(a + 1.0), +1, quadrature_nodes);
}

double appendix_integral_fminus(int q, double a, int quadrature_nodes) {
  if (q > 0) throw std::invalid_argument("appendix_integral_fminus: q must be <= 0");
  return fourier_mode(-q, a - 1.0, +1, quadrature_nodes);
}

double appendix_integral_fplus_left(int p, double c, int quadrature_nodes) {
  if (p > -1) throw std::invalid_argument("appendix_integral_fplus_left: p must be < 0");
  return fourier_mode(-p - 1, c - 1.0, -1, quadrature_nodes);
}

double appendix_integral_fminus_left(int q, double c, int quadrature_nodes) {
  if (q < 0) throw std::invalid_argument("appendix_integral_fminus_left: q must be >= 0");
  return c * fourier_mode(q, -(c + 1.0), -1, quadrature_nodes);
}

}  // namespace xxff::luttinger
