#pragma once

// Bernoulli numbers by the Akiyama-Tanigawa algorithm, independent of the
// binomial recurrence in the library. This variant yields B_1 = +1/2; only
// even indices are compared.

#include "xxff/numerics/rational.hpp"

#include <vector>

namespace oracle {

inline xxff::BigRational bernoulli_at(int n) {
  std::vector<xxff::BigRational> a(static_cast<std::size_t>(n + 1));
  for (int m = 0; m <= n; ++m) {
    a[static_cast<std::size_t>(m)] = xxff::make_rational(1, m + 1);
    for (int j = m; j >= 1; --j) {
      auto& lo = a[static_cast<std::size_t>(j - 1)];
      lo = j * (lo - a[static_cast<std::size_t>(j)]);
    }
  }
  return a[0];
}

}  // namespace oracle
