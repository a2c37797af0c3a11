#include "xxff/numerics/bernoulli.hpp"

#include <stdexcept>

namespace xxff {

std::vector<BigRational> bernoulli_table(int n) {
  if (n < 0) throw std::domain_error("bernoulli_table: n must be non-negative");
  std::vector<BigRational> b(static_cast<std::size_t>(n) + 1);
  b[0] = 1;
  for (int j = 1; j <= n; ++j) {
    // B_j = -1/(j+1) sum_{k<j} C(j+1, k) B_k
    BigRational acc = 0;
    mpz_class binom = 1;  // C(j+1, 0)
    for (int k = 0; k < j; ++k) {
      acc += BigRational{binom} * b[static_cast<std::size_t>(k)];
      binom = binom * (j + 1 - k) / (k + 1);
    }
    b[static_cast<std::size_t>(j)] = -acc / (j + 1);
  }
  return b;
}

BigRational bernoulli(int n) {
  if (n < 2 || n % 2 != 0) {
    throw std::domain_error("bernoulli: expected an even index >= 2, got " + std::to_string(n));
  }
  return bernoulli_table(n).back();
}

}  // namespace xxff
