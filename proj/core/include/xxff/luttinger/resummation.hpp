#pragma once

#include "xxff/luttinger/gamma_factors.hpp"
#include "xxff/numerics/rational.hpp"

#include <complex>
#include <vector>

namespace xxff::luttinger {

/// One particle-hole configuration on a single branch. For the right branch
/// particles are > 0 and holes <= 0; for the left branch the signs flip.
struct BranchConfig {
  std::vector<int> particles;
  std::vector<int> holes;
  /// |sum p - sum q|.
  int level() const;
};

/// Every configuration of total level k on `branch`, ordered by number of
/// pairs and then lexicographically in (particles, holes).
std::vector<BranchConfig> configurations_at_level(int k, Branch branch);

/// sum over configurations with level <= cutoff of |F|^2 z^{level}, where
/// z = damping * e^{i phase} on the right branch and its conjugate on the
/// left. damping = 1 is the bare sum; damping < 1 is the Abel-regularized one.
std::complex<double> sum_identity_partial(double exponent_param, double phase, int cutoff,
                                          Branch branch = Branch::Right, double damping = 1.0);

/// (1 - z)^{-exponent^2} on the principal branch, with z as above.
std::complex<double> sum_identity_closed_form(double exponent_param, double phase,
                                              Branch branch = Branch::Right,
                                              double damping = 1.0);

/// sum_{level = k} |F|^2 for k = 0..max_level.
std::vector<double> level_aggregates(double exponent_param, int max_level, Branch branch);
std::vector<BigRational> level_aggregates_exact(const BigRational& exponent_param, int max_level,
                                                Branch branch);

struct ConvergenceRow {
  int cutoff;
  std::complex<double> partial_sum;
  std::complex<double> closed_form;
  double error;
};

std::vector<ConvergenceRow> sum_identity_convergence(double exponent_param, double phase,
                                                     int max_cutoff,
                                                     Branch branch = Branch::Right,
                                                     double damping = 1.0);

}  // namespace xxff::luttinger
