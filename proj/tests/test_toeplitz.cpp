#include "doctest.h"

#include "oracles/leibniz_det.hpp"

#include "xxff/luttinger/prefactors.hpp"
#include "xxff/numerics/special_functions.hpp"
#include "xxff/toeplitz/asymptotic_series.hpp"
#include "xxff/toeplitz/cauchy_product.hpp"
#include "xxff/toeplitz/residual_report.hpp"
#include "xxff/toeplitz/toeplitz_oracle.hpp"

#include <cmath>
#include <numbers>

using namespace xxff;
using namespace xxff::toeplitz;

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<int> range(int lo, int hi) {
  std::vector<int> v;
  for (int i = lo; i <= hi; ++i) v.push_back(i);
  return v;
}

}  // namespace

TEST_CASE("Cauchy product: small N") {
  CHECK(cauchy_R(0) == 1.0);
  CHECK(cauchy_R(1) == doctest::Approx(2.0 / kPi).epsilon(1e-15));
  CHECK(cauchy_R(2) == doctest::Approx(16.0 / (3.0 * kPi * kPi)).epsilon(1e-15));
  CHECK(exact_G(1) == doctest::Approx(1.0 / kPi).epsilon(1e-15));
  CHECK(exact_G(2) == doctest::Approx(2.0 / (kPi * kPi)).epsilon(1e-15));
  CHECK(exact_G(4) == doctest::Approx(128.0 / (9.0 * std::pow(kPi, 4))).epsilon(1e-14));
  CHECK_THROWS(cauchy_R(-1));
  CHECK_THROWS(exact_G(0));
}

TEST_CASE("Cauchy product against dense determinants") {
  for (int N = 0; N <= 12; ++N) {
    CHECK(std::fabs(cauchy_R(N) / toeplitz_oracle_R(N) - 1.0) <= 1e-9);
  }
  for (int N = 1; N <= 7; ++N) {
    std::vector<std::vector<double>> m(N, std::vector<double>(N));
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j) m[i][j] = ((i - j) % 2 == 0 ? 1.0 : -1.0) * free_fermion_kernel(2 * i - 2 * j - 1);
    CHECK(cauchy_R(N) == doctest::Approx(oracle::leibniz_det(m)).epsilon(1e-12));
  }
  CHECK(toeplitz_oracle_R(1) == doctest::Approx(2.0 / kPi));
  CHECK(std::fabs(cauchy_R(6) / toeplitz_oracle_R(6, 1 << 14) - 1.0) <= 1e-8);
  for (int x = 1; x <= 24; ++x) CHECK(exact_G(x) == doctest::Approx(toeplitz_oracle_G(x)).epsilon(1e-10));
  CHECK_THROWS(toeplitz_oracle_R(17));
}

TEST_CASE("symbol Fourier coefficients") {
  for (int l = -11; l <= 11; ++l) {
    const double exact = symbol_fourier_coefficient(l);
    if (l % 2 != 0) CHECK(exact == 0.0);
    CHECK(std::fabs(symbol_fourier_coefficient_quadrature(l, 1 << 14) - exact) <= 1e-8);
    if (l != 1) CHECK(exact == free_fermion_kernel(1 - l));
  }
}

TEST_CASE("exact_G sweep") {
  const auto table = exact_G_table(512);
  REQUIRE(table.size() == 512);
  CHECK(table[0] > 0.0);
  for (std::size_t i = 1; i < table.size(); ++i) {
    CHECK(table[i] > 0.0);
    CHECK(table[i] < table[i - 1]);
  }
  for (int x : {1, 2, 3, 17, 64, 255, 512}) CHECK(table[x - 1] == doctest::Approx(exact_G(x)).epsilon(1e-14));
}

TEST_CASE("ln R_N series") {
  const auto s = log_R_series(8);
  CHECK(s.log_n_coeff == make_rational(-1, 4));
  CHECK(s.series.coeff(2) == make_rational(-1, 64));
  CHECK(s.series.coeff(4) == make_rational(1, 256));
  CHECK(s.series.coeff(1) == 0);
  CHECK(s.series.coeff(3) == 0);
  CHECK(std::fabs(log_cauchy_R(64) - s.evaluate(64.0)) < 1e-12);
  CHECK(std::fabs(log_cauchy_R(1000) - s.evaluate(1000.0)) < 1e-12);
  CHECK_THROWS(log_R_series(1));
}

TEST_CASE("exact expansion coefficients") {
  const auto e = exact_expansion(8);
  CHECK(e.uniform_terms.at(0) == 1);
  CHECK(e.uniform_terms.at(2) == 0);
  CHECK(e.staggered_terms.count(0) == 0);
  CHECK(e.staggered_terms.at(2) == make_rational(-1, 8));
  CHECK(e.uniform_terms.at(4) == make_rational(1, 128));
  CHECK(e.staggered_terms.at(4) == make_rational(1, 8));
  CHECK(e.uniform_terms.at(6) == make_rational(-1, 64));
  CHECK(e.staggered_terms.at(6) == make_rational(-363, 1024));
  CHECK(e.uniform_terms.at(8) == make_rational(1707, 32768));
  CHECK(e.staggered_terms.at(8) == make_rational(1985, 1024));
  CHECK(e.prefactor == doctest::Approx(constants().c0_over_sqrt_pi()));
  CHECK(e.prefactor_exponent == make_rational(-1, 2));
  CHECK_FALSE(AsymptoticExpansion::is_extrapolated(8));
  CHECK(AsymptoticExpansion::is_extrapolated(10));
  CHECK_THROWS(exact_expansion(7));
  CHECK_THROWS(exact_expansion(2));
}

TEST_CASE("exact expansion is stable under order increase") {
  const auto lo = exact_expansion(8);
  const auto hi = exact_expansion(14);
  for (int p = 0; p <= 8; p += 2) {
    CHECK(lo.uniform_terms.at(p) == hi.uniform_terms.at(p));
    if (p > 0) CHECK(lo.staggered_terms.at(p) == hi.staggered_terms.at(p));
  }
}

TEST_CASE("parity split recombines into the two branch series") {
  const auto e = exact_expansion(12);
  for (int p = 0; p <= 12; ++p) {
    CHECK(e.recombined(p, 0) == e.even_branch.coeff(static_cast<std::size_t>(p)));
    CHECK(e.recombined(p, 1) == e.odd_branch.coeff(static_cast<std::size_t>(p)));
  }
}

TEST_CASE("branch series reproduce exact_G") {
  const auto e = exact_expansion(8);
  const auto table = exact_G_table(512);
  for (int x = 64; x <= 512; ++x) CHECK(std::fabs(e.evaluate(x) / table[x - 1] - 1.0) < 1e-10);
  CHECK(std::fabs(e.evaluate(64) / table[63] - 1.0) < 1e-12);
  CHECK(std::fabs(e.evaluate(65) / table[64] - 1.0) < 1e-12);
}

TEST_CASE("normalization A^2/sqrt(2) = C0/sqrt(pi)") {
  const double a = constants().a();
  CHECK(std::fabs(a * a / std::sqrt(2.0) / constants().c0_over_sqrt_pi() - 1.0) < 1e-6);
}

TEST_CASE("agreement boundary with the Luttinger expansion") {
  const auto e = exact_expansion(8);
  CHECK(e.uniform_terms.at(2) == 0);
  CHECK(e.staggered_terms.at(2) == luttinger::coefficient_y_exact(1));
  CHECK(e.uniform_terms.at(4) != 0);
}

TEST_CASE("residual report") {
  const auto xs = range(32, 512);
  const auto r1 = series_residual_report(xs, 1, 8);
  CHECK(r1.fitted_exponent == doctest::Approx(4.5).epsilon(0.1 / 4.5));
  const auto r0 = series_residual_report(xs, 0, 8);
  CHECK(r0.fitted_exponent == doctest::Approx(2.5).epsilon(0.1 / 2.5));
  CHECK(r1.max_series_relative_residual < 1e-10);
  const auto r64 = series_residual_report({64, 128}, 2, 8);
  CHECK(std::fabs(r64.rows[0].series_relative_residual) < 1e-12);
  CHECK_THROWS(series_residual_report({4, 32}, 1, 8));
  CHECK_THROWS(series_residual_report({32}, 1, 8));
}
