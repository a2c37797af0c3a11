#pragma once

#include "xxff/luttinger/params.hpp"
#include "xxff/numerics/rational.hpp"
#include "xxff/particle_hole_config.hpp"

#include <span>
#include <utility>

namespace xxff::luttinger {

enum class Branch { Right, Left };

// Single-particle factors of the particle-hole formfactors. Right branch
// (p > 0, q <= 0):
//   f+(p) = Gamma(p + a) / (Gamma(p) Gamma(a)),
//   f-(q) = Gamma(1 - q - a) / (Gamma(1 - q) Gamma(1 - a)).
// Left branch (p < 0, q >= 0):
//   f+(p) = Gamma(-p - c) / (Gamma(-p) Gamma(1 - c)),
//   f-(q) = Gamma(1 + q + c) / (Gamma(1 + q) Gamma(c)).
// All throw PoleError when a Gamma argument hits a pole and
// std::invalid_argument on sign-convention violations.
double f_plus_right(int p, double a);
double f_minus_right(int q, double a);
double f_plus_left(int p, double c);
double f_minus_left(int q, double c);
std::pair<double, double> f_factors_left(int p, int q, double c);

// The same factors as exact rationals, through rising factorials.
BigRational f_plus_right_exact(int p, const BigRational& a);
BigRational f_minus_right_exact(int q, const BigRational& a);
BigRational f_plus_left_exact(int p, const BigRational& c);
BigRational f_minus_left_exact(int q, const BigRational& c);

/// F(p_i, q_i) = det(1 / (p_i - q_j)) prod f+(p_i) prod f-(q_i); 1 for n = 0.
double cauchy_determinant_factor(std::span<const int> particles, std::span<const int> holes,
                                 Branch branch, double exponent_param);
BigRational cauchy_determinant_factor_exact(std::span<const int> particles,
                                            std::span<const int> holes, Branch branch,
                                            const BigRational& exponent_param);

/// psi_m * F_a(right) * F_c(left) with a, c taken from `params` at config.m.
double ph_formfactor_prediction(double psi_m, const ParticleHoleConfig& config,
                                const LuttingerParams& params = {});

}  // namespace xxff::luttinger
