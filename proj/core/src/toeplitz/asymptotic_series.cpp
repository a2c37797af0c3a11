#include "xxff/toeplitz/asymptotic_series.hpp"

#include "xxff/numerics/bernoulli.hpp"
#include "xxff/numerics/special_functions.hpp"

#include <cmath>
#include <stdexcept>

namespace xxff::toeplitz {
namespace {

struct Branches {
  FormalSeries even;
  FormalSeries odd;
};

// Normalized even/odd branch series through x^{-order}, from S(N) with
// k <= k_max.
Branches build_branches(int order, int k_max) {
  const auto n = static_cast<std::size_t>(order + 1);
  const FormalSeries s = log_R_series(k_max).series;

  // Even x = 2N: exp(2 S(x/2)).
  FormalSeries even = series_exp(series_substitute_half(s, n) * BigRational{2});

  // Odd x = 2N + 1: (1 - x^{-2})^{-1/4} exp(S((x-1)/2) + S((x+1)/2)).
  const FormalSeries sum = series_substitute_shifted(s, Shift::Minus, n) +
                           series_substitute_shifted(s, Shift::Plus, n);
  const FormalSeries binom = series_binomial_pow(make_rational(-1, 4), (n + 1) / 2, "u");
  FormalSeries root("1/x", n);
  for (std::size_t k = 0; 2 * k < n; ++k) root.set_coeff(2 * k, binom.coeff(k));
  FormalSeries odd = series_mul(root, series_exp(sum));
  return {std::move(even), std::move(odd)};
}

}  // namespace

double LogRSeries::evaluate_tail(double N) const {
  return series.evaluate(1.0 / N);
}

double LogRSeries::evaluate(double N) const {
  return lnA + to_double(log_n_coeff) * std::log(N) + evaluate_tail(N);
}

LogRSeries log_R_series(int order) {
  if (order < 2) throw std::invalid_argument("log_R_series: order must be >= 2");
  FormalSeries s("1/N", static_cast<std::size_t>(2 * (order - 1) + 1));
  for (int k = 2; k <= order; ++k) {
    mpz_class four_k;
    mpz_ui_pow_ui(four_k.get_mpz_t(), 4, static_cast<unsigned long>(k));
    BigRational c = BigRational{four_k - 1} * bernoulli(2 * k);
    c /= BigRational{mpz_class{k} * mpz_class{k - 1} * four_k};
    s.set_coeff(static_cast<std::size_t>(2 * (k - 1)), c);
  }
  return {constants().lnA, make_rational(-1, 4), std::move(s), order};
}

BigRational AsymptoticExpansion::recombined(int power, int parity) const {
  BigRational r = 0;
  if (auto it = uniform_terms.find(power); it != uniform_terms.end()) r += it->second;
  if (auto it = staggered_terms.find(power); it != staggered_terms.end()) {
    r += (parity % 2 == 0) ? it->second : BigRational{-it->second};
  }
  return r;
}

double AsymptoticExpansion::evaluate(int x) const {
  if (x < 1) throw std::invalid_argument("AsymptoticExpansion::evaluate: x must be positive");
  const FormalSeries& branch = (x % 2 == 0) ? even_branch : odd_branch;
  return prefactor * std::pow(static_cast<double>(x), to_double(prefactor_exponent)) *
         branch.evaluate(1.0 / x);
}

AsymptoticExpansion exact_expansion(int order) {
  if (order < 4 || order % 2 != 0) {
    throw std::invalid_argument("exact_expansion: order must be even and >= 4");
  }
  // Powers up to x^{-order} need k up to order/2 + 1.
  const int k_needed = order / 2 + 1;
  const Branches full = build_branches(order, k_needed + 2);
  const Branches check = build_branches(order, k_needed + 1);
  for (int p = order - 1; p <= order; ++p) {
    const auto k = static_cast<std::size_t>(p);
    if (full.even.coeff(k) != check.even.coeff(k) || full.odd.coeff(k) != check.odd.coeff(k)) {
      throw std::logic_error("exact_expansion: coefficient of x^-" + std::to_string(p) +
                             " is not stable under order increase");
    }
  }

  AsymptoticExpansion e{constants().c0_over_sqrt_pi(), make_rational(-1, 2), {}, {}, order,
                        full.even, full.odd};
  for (int p = 0; p <= order; ++p) {
    const auto k = static_cast<std::size_t>(p);
    const BigRational u = (full.even.coeff(k) + full.odd.coeff(k)) / 2;
    const BigRational s = (full.even.coeff(k) - full.odd.coeff(k)) / 2;
    if (p % 2 == 1) {
      if (u != 0 || s != 0) throw std::logic_error("exact_expansion: odd power of 1/x survived");
      continue;
    }
    e.uniform_terms.emplace(p, u);
    if (p > 0) e.staggered_terms.emplace(p, s);
  }
  return e;
}

}  // namespace xxff::toeplitz
