#pragma once

// Pochhammer symbol (x)_n = x (x+1) ... (x+n-1) in exact rationals.

#include "xxff/numerics/rational.hpp"

namespace oracle {

inline xxff::BigRational rising(const xxff::BigRational& x, int n) {
  xxff::BigRational r = 1;
  for (int k = 0; k < n; ++k) r *= x + k;
  return r;
}

inline xxff::BigRational factorial(int n) { return rising(1, n); }

}  // namespace oracle
