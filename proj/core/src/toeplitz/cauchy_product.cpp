#include "xxff/toeplitz/cauchy_product.hpp"

#include "xxff/numerics/special_functions.hpp"

#include <cmath>
#include <stdexcept>

namespace xxff::toeplitz {
namespace {

void kahan_add(long double& sum, long double& comp, long double term) {
  const long double y = term - comp;
  const long double t = sum + y;
  comp = (t - sum) - y;
  sum = t;
}

const long double kLogTwoOverPi = decimal::kLn2 - std::log(decimal::kPi);

}  // namespace

void RProductAccumulator::advance() {
  kahan_add(log_r_, log_r_c_, kLogTwoOverPi + inner_);
  ++n_;
  const long double k = n_;
  kahan_add(inner_, inner_c_, std::log1p(1.0L / (4.0L * k * k - 1.0L)));
}

double log_cauchy_R(int N) {
  if (N < 0) throw std::invalid_argument("cauchy_R: N must be non-negative");
  RProductAccumulator acc;
  while (acc.n() < N) acc.advance();
  return acc.log_R();
}

double cauchy_R(int N) { return std::exp(log_cauchy_R(N)); }

double log_exact_G(int x) {
  if (x < 1) throw std::invalid_argument("exact_G: x must be positive");
  RProductAccumulator acc;
  while (acc.n() < x / 2) acc.advance();
  const double lr = acc.log_R();
  if (x % 2 == 0) return 2.0 * lr - std::log(2.0);
  acc.advance();
  return lr + acc.log_R() - std::log(2.0);
}

double exact_G(int x) { return std::exp(log_exact_G(x)); }

std::vector<double> exact_G_table(int x_max) {
  if (x_max < 1) throw std::invalid_argument("exact_G_table: x_max must be positive");
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(x_max));
  RProductAccumulator acc;
  double prev = acc.log_R();
  acc.advance();
  for (int x = 1; x <= x_max; ++x) {
    // Invariant: prev = ln R_{floor(x/2)}, acc at floor(x/2) + 1 for odd x.
    if (x % 2 == 1) {
      out.push_back(std::exp(prev + acc.log_R() - std::log(2.0)));
    } else {
      prev = acc.log_R();
      out.push_back(std::exp(2.0 * prev - std::log(2.0)));
      acc.advance();
    }
  }
  return out;
}

}  // namespace xxff::toeplitz
