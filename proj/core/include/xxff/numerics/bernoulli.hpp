#pragma once

#include "xxff/numerics/rational.hpp"

#include <vector>

namespace xxff {

/// Exact Bernoulli number B_n (B_1 = -1/2 convention) for even n >= 2.
/// Throws std::domain_error for odd or non-positive n.
BigRational bernoulli(int n);

/// B_0 .. B_n inclusive, from sum_{k=0}^{j} C(j+1, k) B_k = 0.
std::vector<BigRational> bernoulli_table(int n);

}  // namespace xxff
