#include "xxff/xxchain/finite_correlator.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>
#include <string>

namespace xxff::xxchain {

double fermion_propagator(const MomentumSet& filled, int l) {
  // Filled sets are symmetric about k = 0 (up to one level), so the sum is
  // accumulated as cosines; a residual odd part would be imaginary.
  double acc = 0.0;
  for (double k : filled.momenta()) acc += std::cos(k * l);
  return acc / filled.L();
}

double finite_correlator(const ChainSpec& spec, int x) {
  spec.validate();
  if (x <= 0 || 2 * x >= spec.L) {
    throw std::out_of_range("finite_correlator: need 0 < x < L/2, got x = " + std::to_string(x));
  }
  const MomentumSet filled = ground_state_momenta(spec, Sector::Full);
  // <B_i A_j> = 2 G0(i - j) - delta_ij; only i - j in [-x, x - 1] occurs.
  std::vector<double> contraction(2 * static_cast<std::size_t>(x) + 1);
  for (int l = -x; l <= x; ++l) contraction[static_cast<std::size_t>(l + x)] = 2.0 * fermion_propagator(filled, l);
  Eigen::MatrixXd B(x, x);
  for (int i = 0; i < x; ++i)
    for (int j = 1; j <= x; ++j)
      B(i, j - 1) = contraction[static_cast<std::size_t>(i - j + x)] - (i == j ? 1.0 : 0.0);
  return 0.5 * B.partialPivLu().determinant();
}

}  // namespace xxff::xxchain
