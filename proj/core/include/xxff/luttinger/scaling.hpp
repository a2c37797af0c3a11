#pragma once

#include "xxff/particle_hole_config.hpp"
#include "xxff/xxchain/momentum_set.hpp"

#include <complex>
#include <vector>

namespace xxff::luttinger {

struct ScalingPoint {
  int L;
  /// |psi_m|^2 (L/2)^{1/2 + 2m^2}
  double scaled;
  /// (-1)^m C_m / (2 - delta_{m0})
  double predicted;
  double relative_deviation;
};

/// Compares the finite-chain lowest formfactor against
/// |psi_m|^2 = (-1)^m C_m / (2 - delta_{m0}) (2/L)^{1/2 + 2m^2} at xi = 1.
ScalingPoint scaling_relation_check(const xxchain::ChainSpec& spec, int m);

struct ConvergenceReport {
  std::vector<int> sizes;
  std::vector<double> deviations;
  /// Slope of log(deviation) against log L.
  double fitted_slope = 0.0;
};

/// scaling_relation_check over half-filled chains of the given sizes.
ConvergenceReport scaling_convergence(int m, const std::vector<int>& sizes);

struct UniversalityPoint {
  int L;
  std::complex<double> ratio;
  double predicted;
  double deviation;
};

/// psi_m(config) / psi_m on a half-filled chain against F_a F_c.
UniversalityPoint particle_hole_universality(int L, const ParticleHoleConfig& config);
ConvergenceReport particle_hole_convergence(const ParticleHoleConfig& config,
                                            const std::vector<int>& sizes);

}  // namespace xxff::luttinger
