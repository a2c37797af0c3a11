#pragma once

// Dense determinant by the Leibniz permutation sum. Exponential cost, used
// only for n <= 8 as a check that shares no code with LU or closed forms.

#include <algorithm>
#include <numeric>
#include <vector>

namespace oracle {

template <class T>
T leibniz_det(const std::vector<std::vector<T>>& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  T total = T(0);
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    T term = (inversions % 2 == 0) ? T(1) : T(-1);
    for (std::size_t i = 0; i < n; ++i) term *= m[i][perm[i]];
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

}  // namespace oracle
