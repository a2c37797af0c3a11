#include "xxff/numerics/formal_series.hpp"

#include <algorithm>
#include <utility>

namespace xxff {

BigRational parse_rational(const std::string& text) {
  BigRational r;
  if (r.set_str(text, 10) != 0) throw std::invalid_argument("not a rational: '" + text + "'");
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
  r.canonicalize();
  return r;
}

FormalSeries::FormalSeries(std::string variable, std::size_t order)
    : variable_(std::move(variable)), coeffs_(order) {}

FormalSeries::FormalSeries(std::string variable, std::vector<BigRational> coefficients)
    : variable_(std::move(variable)), coeffs_(std::move(coefficients)) {}

FormalSeries FormalSeries::constant(std::string variable, const BigRational& value,
                                    std::size_t order) {
  FormalSeries s(std::move(variable), order);
  if (order > 0) s.coeffs_[0] = value;
  return s;
}

FormalSeries FormalSeries::monomial(std::string variable, std::size_t power,
                                    const BigRational& coeff, std::size_t order) {
  FormalSeries s(std::move(variable), order);
  if (power < order) s.coeffs_[power] = coeff;
  return s;
}

BigRational FormalSeries::coeff(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : BigRational{0};
}

void FormalSeries::set_coeff(std::size_t k, const BigRational& value) {
  if (k >= coeffs_.size()) {
    throw std::out_of_range("FormalSeries: power " + std::to_string(k) +
                            " is at or beyond the truncation order");
  }
  coeffs_[k] = value;
}

FormalSeries FormalSeries::truncated(std::size_t order) const {
  FormalSeries s(variable_, std::min(order, coeffs_.size()));
  std::copy_n(coeffs_.begin(), s.coeffs_.size(), s.coeffs_.begin());
  return s;
}

double FormalSeries::evaluate(double t) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + it->get_d();
  return acc;
}

void FormalSeries::require_same_variable(const FormalSeries& other) const {
  if (variable_ != other.variable_) {
    throw VariableMismatch("series variables differ: '" + variable_ + "' vs '" +
                           other.variable_ + "'");
  }
}

FormalSeries& FormalSeries::operator+=(const FormalSeries& other) {
  require_same_variable(other);
  coeffs_.resize(std::min(coeffs_.size(), other.coeffs_.size()));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  return *this;
}

FormalSeries& FormalSeries::operator-=(const FormalSeries& other) {
  require_same_variable(other);
  coeffs_.resize(std::min(coeffs_.size(), other.coeffs_.size()));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
  return *this;
}

FormalSeries& FormalSeries::operator*=(const BigRational& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

bool operator==(const FormalSeries& a, const FormalSeries& b) {
  return a.variable_ == b.variable_ && a.coeffs_ == b.coeffs_;
}

FormalSeries series_mul(const FormalSeries& a, const FormalSeries& b) {
  if (a.variable() != b.variable()) {
    throw VariableMismatch("series_mul: variables differ: '" + a.variable() + "' vs '" +
                           b.variable() + "'");
  }
  const std::size_t order = std::min(a.order(), b.order());
  std::vector<BigRational> out(order);
  const auto& ca = a.coefficients();
  const auto& cb = b.coefficients();
  for (std::size_t i = 0; i < order; ++i) {
    if (ca[i] == 0) continue;
    for (std::size_t j = 0; i + j < order; ++j) out[i + j] += ca[i] * cb[j];
  }
  return FormalSeries(a.variable(), std::move(out));
}

FormalSeries series_exp(const FormalSeries& a) {
  if (a.order() > 0 && a.coeff(0) != 0) {
    throw std::domain_error("series_exp: constant term must vanish");
  }
  const std::size_t order = a.order();
  std::vector<BigRational> e(order);
  if (order == 0) return FormalSeries(a.variable(), std::move(e));
  e[0] = 1;
  // n e_n = sum_{k=1}^{n} k a_k e_{n-k}, from E' = a' E.
  for (std::size_t n = 1; n < order; ++n) {
    BigRational acc = 0;
    for (std::size_t k = 1; k <= n; ++k) {
      const auto& ak = a.coefficients()[k];
      if (ak != 0) acc += BigRational{static_cast<long>(k)} * ak * e[n - k];
    }
    e[n] = acc / static_cast<long>(n);
  }
  return FormalSeries(a.variable(), std::move(e));
}

FormalSeries series_binomial_pow(const BigRational& exponent, std::size_t order,
                                 std::string variable) {
  if (order < 1) throw std::invalid_argument("series_binomial_pow: order must be >= 1");
  std::vector<BigRational> c(order);
  c[0] = 1;
  for (std::size_t k = 1; k < order; ++k) {
    c[k] = c[k - 1] * (BigRational{static_cast<long>(k - 1)} - exponent) / static_cast<long>(k);
  }
  return FormalSeries(std::move(variable), std::move(c));
}

namespace {

// Horner evaluation of sum_k a_k u^k with u a series in 1/x.
FormalSeries compose(const FormalSeries& a, const FormalSeries& u, std::size_t order) {
  FormalSeries acc("1/x", order);
  for (std::size_t k = a.order(); k-- > 0;) {
    acc = series_mul(acc, u);
    acc.set_coeff(0, acc.coeff(0) + a.coeff(k));
  }
  return acc;
}

}  // namespace

FormalSeries series_substitute_shifted(const FormalSeries& a, Shift shift, std::size_t order) {
  // N = (x - 1)/2  =>  1/N = (2/x) / (1 - 1/x);  N = (x + 1)/2  =>  (2/x) / (1 + 1/x)
  const long sign = shift == Shift::Minus ? 1 : -1;
  FormalSeries u("1/x", order);
  long s = 1;
  for (std::size_t j = 1; j < order; ++j) {
    u.set_coeff(j, BigRational{2 * s});
    s *= sign;
  }
  return compose(a, u, order);
}

FormalSeries series_substitute_half(const FormalSeries& a, std::size_t order) {
  return compose(a, FormalSeries::monomial("1/x", 1, BigRational{2}, order), order);
}

}  // namespace xxff
