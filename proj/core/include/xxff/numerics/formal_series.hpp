#pragma once

#include "xxff/numerics/rational.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace xxff {

/// Truncated power series sum_{k < order} c_k t^k in a named variable t, with
/// exact rational coefficients stored densely.
class FormalSeries {
 public:
  FormalSeries(std::string variable, std::size_t order);
  FormalSeries(std::string variable, std::vector<BigRational> coefficients);

  static FormalSeries constant(std::string variable, const BigRational& value, std::size_t order);
  static FormalSeries monomial(std::string variable, std::size_t power, const BigRational& coeff,
                               std::size_t order);

  const std::string& variable() const { return variable_; }
  std::size_t order() const { return coeffs_.size(); }
  /// Coefficient of t^k; zero at or beyond the truncation order.
  BigRational coeff(std::size_t k) const;
  void set_coeff(std::size_t k, const BigRational& value);
  const std::vector<BigRational>& coefficients() const { return coeffs_; }

  FormalSeries truncated(std::size_t order) const;

  /// Evaluates the truncated polynomial at t.
  double evaluate(double t) const;

  FormalSeries& operator+=(const FormalSeries& other);
  FormalSeries& operator-=(const FormalSeries& other);
  FormalSeries& operator*=(const BigRational& scalar);

  friend FormalSeries operator+(FormalSeries a, const FormalSeries& b) { return a += b; }
  friend FormalSeries operator-(FormalSeries a, const FormalSeries& b) { return a -= b; }
  friend FormalSeries operator*(FormalSeries a, const BigRational& s) { return a *= s; }
  friend FormalSeries operator-(FormalSeries a) { return a *= BigRational{-1}; }
  friend bool operator==(const FormalSeries& a, const FormalSeries& b);

 private:
  void require_same_variable(const FormalSeries& other) const;

  std::string variable_;
  std::vector<BigRational> coeffs_;
};

class VariableMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Cauchy product truncated at min(order(a), order(b)).
FormalSeries series_mul(const FormalSeries& a, const FormalSeries& b);

/// exp(a) for a with zero constant term, truncated at order(a).
FormalSeries series_exp(const FormalSeries& a);

/// (1 - t)^exponent by the generalized binomial theorem.
FormalSeries series_binomial_pow(const BigRational& exponent, std::size_t order,
                                 std::string variable = "t");

enum class Shift { Minus = -1, Plus = +1 };

/// Re-expands a series in 1/N as a series in 1/x, with N = (x - 1)/2 for
/// Shift::Minus and N = (x + 1)/2 for Shift::Plus, i.e.
/// 1/N = (2/x) sum_j (+-1/x)^j. The result carries the variable "1/x".
FormalSeries series_substitute_shifted(const FormalSeries& a, Shift shift, std::size_t order);

/// Same substitution without a shift: 1/N = 2/x.
FormalSeries series_substitute_half(const FormalSeries& a, std::size_t order);

}  // namespace xxff
