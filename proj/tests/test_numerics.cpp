#include "doctest.h"

#include "oracles/bernoulli_akiyama_tanigawa.hpp"
#include "oracles/euler_gamma.hpp"

#include "xxff/numerics/bernoulli.hpp"
#include "xxff/numerics/fit.hpp"
#include "xxff/numerics/formal_series.hpp"
#include "xxff/numerics/special_functions.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

using namespace xxff;

namespace {

constexpr double kPi = std::numbers::pi;

FormalSeries random_series(std::mt19937& rng, std::size_t order, bool zero_constant) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
  FormalSeries s("t", order);
  for (std::size_t k = zero_constant ? 1 : 0; k < order; ++k) s.set_coeff(k, make_rational(num(rng), den(rng)));
  return s;
}

}  // namespace

TEST_CASE("bernoulli numbers agree with the Akiyama-Tanigawa oracle") {
  const auto table = bernoulli_table(40);
  for (int n = 2; n <= 40; n += 2) {
    CHECK(bernoulli(n) == oracle::bernoulli_at(n));
    CHECK(table[static_cast<std::size_t>(n)] == bernoulli(n));
  }
  CHECK(bernoulli(4) == make_rational(-1, 30));
  CHECK(bernoulli(6) == make_rational(1, 42));
  CHECK_THROWS_AS(bernoulli(3), std::domain_error);
  CHECK_THROWS_AS(bernoulli(0), std::domain_error);
}

TEST_CASE("ln_gamma against the Euler integral and std::lgamma") {
  for (double z : {0.5, 1.3, 2.7, 5.5, 9.25}) {
    CHECK(ln_gamma(z) == doctest::Approx(std::log(oracle::euler_gamma(z))).epsilon(1e-10));
  }
  for (double z = 0.05; z < 100.0; z += 0.37) {
    CHECK(std::fabs(ln_gamma(z) - std::lgamma(z)) < 1e-13 * std::max(1.0, std::fabs(std::lgamma(z))));
  }
  CHECK(ln_gamma(1.0) == 0.0);
  CHECK(ln_gamma(2.0) == 0.0);
  CHECK_THROWS_AS(ln_gamma(0.0), std::domain_error);
}

TEST_CASE("gamma_signed handles negative arguments and poles") {
  CHECK(gamma_signed(0.5) == doctest::Approx(std::sqrt(kPi)).epsilon(1e-14));
  CHECK(gamma_signed(-0.5) == doctest::Approx(-2.0 * std::sqrt(kPi)).epsilon(1e-14));
  CHECK(gamma_signed(-1.5) == doctest::Approx(4.0 * std::sqrt(kPi) / 3.0).epsilon(1e-14));
  CHECK(gamma_signed(6.0) == 120.0);
  CHECK_THROWS_AS(gamma_signed(0.0), PoleError);
  CHECK_THROWS_AS(gamma_signed(-3.0), PoleError);
  const auto l = ln_abs_gamma(-2.5);
  CHECK(l.sign == -1);
  CHECK(std::exp(l.log_abs) == doctest::Approx(std::fabs(std::tgamma(-2.5))).epsilon(1e-13));
}

TEST_CASE("Barnes G at half-integers") {
  const double expected[] = {0.603244281209446206191, 1.069222649266412949543, 0.947573901083825776884,
                             1.259648257495192144086, 4.186253258969580671617, 48.69336090757949812719,
                             2548.745769568498989736, 733746.3839521463692344, 1373026080.334011121806,
                             19269607235982.58766922, 2298718888849495556.162};
  for (int m = 0; m <= 10; ++m) {
    CHECK(barnes_g_half_integer(m) == doctest::Approx(expected[m]).epsilon(1e-12));
  }
}

TEST_CASE("constants") {
  const auto& c = constants();
  CHECK(c.a() == doctest::Approx(0.6450024485).epsilon(1e-9));
  CHECK(std::fabs(c.a() * c.a() - kPi * std::pow(c.barnesGHalf, 4)) < 1e-14);
  CHECK(c.c0 / (2.0 * std::sqrt(kPi)) == doctest::Approx(0.147088166049419).epsilon(1e-12));
  CHECK(c.c0_over_sqrt_pi() == doctest::Approx(c.a() * c.a() / std::sqrt(2.0)).epsilon(1e-14));
}

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3/6") == make_rational(1, 2));
  CHECK(parse_rational("-5") == -5);
  CHECK(to_string(make_rational(-9, 32768)) == "-9/32768");
  CHECK_THROWS(parse_rational("x/2"));
  CHECK_THROWS(parse_rational("1/0"));
}

TEST_CASE("formal series: ring axioms on random inputs") {
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 25; ++trial) {
    const auto a = random_series(rng, 9, false);
    const auto b = random_series(rng, 9, false);
    const auto c = random_series(rng, 9, false);
    CHECK(series_mul(a, b) == series_mul(b, a));
    CHECK(series_mul(series_mul(a, b), c) == series_mul(a, series_mul(b, c)));
    CHECK(series_mul(a, b + c) == series_mul(a, b) + series_mul(a, c));
    CHECK(a + b - b == a);
    CHECK(series_mul(a, FormalSeries::constant("t", 1, 9)) == a);
  }
}

TEST_CASE("formal series: exp is a homomorphism") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 25; ++trial) {
    const auto a = random_series(rng, 8, true);
    const auto b = random_series(rng, 8, true);
    CHECK(series_exp(a + b) == series_mul(series_exp(a), series_exp(b)));
    CHECK(series_mul(series_exp(a), series_exp(-a)) == FormalSeries::constant("t", 1, 8));
  }
  const auto e = series_exp(FormalSeries::monomial("t", 1, 1, 8));
  BigRational fact = 1;
  for (std::size_t k = 0; k < 8; ++k) {
    if (k > 0) fact *= static_cast<long>(k);
    CHECK(e.coeff(k) == 1 / fact);
  }
  CHECK_THROWS_AS(series_exp(FormalSeries::constant("t", 1, 4)), std::domain_error);
}

TEST_CASE("formal series: binomial powers") {
  const auto geo = series_binomial_pow(-1, 6);
  for (std::size_t k = 0; k < 6; ++k) CHECK(geo.coeff(k) == 1);
  const auto x = make_rational(-1, 4), y = make_rational(7, 3);
  CHECK(series_mul(series_binomial_pow(x, 10), series_binomial_pow(y, 10)) == series_binomial_pow(x + y, 10));
  const auto quarter = series_binomial_pow(make_rational(-1, 4), 4);
  CHECK(quarter.coeff(1) == make_rational(1, 4));
  CHECK(quarter.coeff(2) == make_rational(5, 32));
}

TEST_CASE("formal series: substitutions to 1/x") {
  const auto inv_n = FormalSeries("1/N", std::vector<BigRational>{0, 1});
  const auto half = series_substitute_half(inv_n, 5);
  CHECK(half.variable() == "1/x");
  CHECK(half.coeff(1) == 2);
  CHECK(half.coeff(2) == 0);
  const auto minus = series_substitute_shifted(inv_n, Shift::Minus, 6);
  const auto plus = series_substitute_shifted(inv_n, Shift::Plus, 6);
  for (std::size_t k = 1; k < 6; ++k) {
    CHECK(minus.coeff(k) == 2);
    CHECK(plus.coeff(k) == (k % 2 == 1 ? 2 : -2));
  }
  // 1/N^2 with N = (x - 1)/2 is 4/x^2 (1 + 2/x + 3/x^2 + ...).
  const auto sq = series_substitute_shifted(FormalSeries("1/N", std::vector<BigRational>{0, 0, 1}), Shift::Minus, 6);
  CHECK(sq.coeff(2) == 4);
  CHECK(sq.coeff(3) == 8);
  CHECK(sq.coeff(4) == 12);
}

TEST_CASE("formal series: errors") {
  FormalSeries a("t", 3), b("u", 3);
  CHECK_THROWS_AS(a += b, VariableMismatch);
  CHECK_THROWS_AS(series_mul(a, b), VariableMismatch);
  CHECK_THROWS_AS(a.set_coeff(3, 1), std::out_of_range);
  CHECK(a.coeff(10) == 0);
}

TEST_CASE("log-log slope fit") {
  const std::vector<double> x{1, 2, 4, 8}, y{3, 0.75, 0.1875, 0.046875};
  CHECK(fit_log_log_slope(x, y) == doctest::Approx(-2.0).epsilon(1e-12));
  CHECK_THROWS(fit_log_log_slope(std::vector<double>{1}, std::vector<double>{1}));
}
