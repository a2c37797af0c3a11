#include "xxff/luttinger/scaling.hpp"

#include "xxff/luttinger/gamma_factors.hpp"
#include "xxff/luttinger/prefactors.hpp"
#include "xxff/numerics/fit.hpp"
#include "xxff/xxchain/formfactor.hpp"

#include <cmath>

namespace xxff::luttinger {

ScalingPoint scaling_relation_check(const xxchain::ChainSpec& spec, int m) {
  const auto parts = xxchain::shifted_ground_parts(spec, m);
  const double exponent = 0.5 + 2.0 * m * m;
  ScalingPoint pt{};
  pt.L = spec.L;
  pt.scaled = std::exp(2.0 * parts.log_abs + exponent * std::log(spec.L / 2.0));
  pt.predicted = (m % 2 == 0 ? 1.0 : -1.0) * prefactor_C(m) / (m == 0 ? 1.0 : 2.0);
  pt.relative_deviation = pt.scaled / pt.predicted - 1.0;
  return pt;
}

ConvergenceReport scaling_convergence(int m, const std::vector<int>& sizes) {
  ConvergenceReport r;
  std::vector<double> xs;
  for (int L : sizes) {
    const auto pt = scaling_relation_check({L, L / 2}, m);
    r.sizes.push_back(L);
    r.deviations.push_back(std::fabs(pt.relative_deviation));
    xs.push_back(L);
  }
  if (sizes.size() >= 2) r.fitted_slope = fit_log_log_slope(xs, r.deviations);
  return r;
}

UniversalityPoint particle_hole_universality(int L, const ParticleHoleConfig& config) {
  const xxchain::ChainSpec spec{L, L / 2};
  const auto excited = xxchain::particle_hole_formfactor(spec, config);
  const auto lowest = xxchain::shifted_ground_formfactor(spec, config.m);
  UniversalityPoint pt{};
  pt.L = L;
  pt.ratio = excited / lowest;
  pt.predicted = ph_formfactor_prediction(1.0, config);
  pt.deviation = std::abs(pt.ratio - pt.predicted);
  return pt;
}

ConvergenceReport particle_hole_convergence(const ParticleHoleConfig& config,
                                            const std::vector<int>& sizes) {
  ConvergenceReport r;
  std::vector<double> xs;
  for (int L : sizes) {
    r.sizes.push_back(L);
    r.deviations.push_back(particle_hole_universality(L, config).deviation);
    xs.push_back(L);
  }
  if (sizes.size() >= 2) r.fitted_slope = fit_log_log_slope(xs, r.deviations);
  return r;
}

}  // namespace xxff::luttinger
