#include "xxff/toeplitz/toeplitz_oracle.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

namespace xxff::toeplitz {
namespace {

constexpr double kPi = std::numbers::pi;

// sin(pi l / 2) for integer l, exactly.
int sin_half_pi(int l) {
  const int r = ((l % 4) + 4) % 4;
  return r == 1 ? 1 : (r == 3 ? -1 : 0);
}

// Simpson on [a, b] of e^{i n x}, real part only (the imaginary part cancels
// between the symmetric pieces).
double simpson_cos(int n, double a, double b, int intervals) {
  if (intervals % 2 == 1) ++intervals;
  const double h = (b - a) / intervals;
  double acc = std::cos(n * a) + std::cos(n * b);
  for (int i = 1; i < intervals; ++i) acc += (i % 2 == 1 ? 4.0 : 2.0) * std::cos(n * (a + i * h));
  return acc * h / 3.0;
}

}  // namespace

double free_fermion_kernel(int l) {
  if (l == 0) return 1.0;
  return 2.0 * sin_half_pi(l) / (kPi * l);
}

double symbol_fourier_coefficient(int l) {
  const int n = 1 - l;
  if (n == 0) return 0.0;
  return 2.0 * sin_half_pi(n) / (kPi * n);
}

double symbol_fourier_coefficient_quadrature(int l, int nodes) {
  if (nodes < 8) throw std::invalid_argument("symbol_fourier_coefficient_quadrature: too few nodes");
  const int n = 1 - l;
  const int outer = nodes / 4;
  const int inner = nodes / 2;
  const double mid = simpson_cos(n, -kPi / 2, kPi / 2, inner);
  const double sides = simpson_cos(n, -kPi, -kPi / 2, outer) + simpson_cos(n, kPi / 2, kPi, outer);
  return (mid - sides) / (2.0 * kPi);
}

double toeplitz_oracle_R(int N, int fourier_nodes) {
  if (N < 0 || N > 16) throw std::invalid_argument("toeplitz_oracle_R: need 0 <= N <= 16");
  if (N == 0) return 1.0;
  Eigen::MatrixXd m(N, N);
  for (int i = 0; i < N; ++i) {
    for (int j = 0; j < N; ++j) {
      const int l = 2 * i - 2 * j - 1;
      const double g0 = fourier_nodes == 0 ? free_fermion_kernel(l)
                                           : symbol_fourier_coefficient_quadrature(1 - l, fourier_nodes);
      m(i, j) = ((i - j) % 2 == 0 ? 1.0 : -1.0) * g0;
    }
  }
  return m.partialPivLu().determinant();
}

double toeplitz_oracle_G(int x) {
  if (x < 1 || x > 32) throw std::invalid_argument("toeplitz_oracle_G: need 1 <= x <= 32");
  Eigen::MatrixXd m(x, x);
  for (int i = 0; i < x; ++i)
    for (int j = 0; j < x; ++j) m(i, j) = symbol_fourier_coefficient(i - j);
  return 0.5 * m.partialPivLu().determinant();
}

}  // namespace xxff::toeplitz
