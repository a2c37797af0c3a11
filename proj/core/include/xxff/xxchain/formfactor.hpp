#pragma once

#include "xxff/particle_hole_config.hpp"
#include "xxff/xxchain/momentum_set.hpp"

#include <complex>
#include <stdexcept>
#include <vector>

namespace xxff::xxchain {

/// Formfactor split into log-magnitude, sign of the sine-product and the
/// phase i^{M-1} e^{i sum q}, so that large chains never under- or overflow.
struct FormfactorParts {
  double log_abs;
  int sign;
  double phase;

  std::complex<double> value() const;
  /// sign * |psi| with the phase stripped.
  double amplitude() const;
};

class GridMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// <{q}| sigma_0^- |{p}> by the Cauchy-type product formula
///
///   psi = L^{-1/2} (i/L)^{M-1} e^{i sum q}
///         prod_{i<j} sin((p_i - p_j)/2) prod_{i<j} sin((q_i - q_j)/2)
///         / prod_{i,j} sin((p_i - q_j)/2),
///
/// with both sets taken in their canonical (sorted) order. Requires
/// |q| = |p| - 1 and the two sets on different grids.
std::complex<double> formfactor(const MomentumSet& p, const MomentumSet& q);
FormfactorParts formfactor_parts(const MomentumSet& p, const MomentumSet& q);

/// Reduced-sector ground state with the m lowest levels moved above the top.
MomentumSet shifted_ground_set(const ChainSpec& spec, int m);

/// psi_m = <lambda(m)| sigma_0^- |t>. Requires 2m < L/4.
std::complex<double> shifted_ground_formfactor(const ChainSpec& spec, int m);
FormfactorParts shifted_ground_parts(const ChainSpec& spec, int m);

/// <lambda(m; p_i, q_i)| sigma_0^- |t>. The excited state is
/// prod_i c^+_{p_i} c_{q_i} |lambda(m)>, so each particle takes its hole's
/// place in the ordered product; the reordering sign is included.
std::complex<double> particle_hole_formfactor(const ChainSpec& spec,
                                              const ParticleHoleConfig& config);

/// The shifted set with the configuration applied, in canonical order.
MomentumSet particle_hole_set(const ChainSpec& spec, const ParticleHoleConfig& config);

}  // namespace xxff::xxchain
