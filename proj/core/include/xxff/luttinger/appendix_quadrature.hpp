#pragma once

namespace xxff::luttinger {

// Fourier-integral representations of the single-particle factors,
//   right f+(p) = a int dy/2pi e^{-i(p-1)y} (1 - e^{iy})^{-(a+1)},     p > 0
//   right f-(q) =   int dx/2pi e^{iqx}      (1 - e^{ix})^{a-1},        q <= 0
//   left  f+(p) =   int dy/2pi e^{-i(p+1)y} (1 - e^{-iy})^{c-1},       p < 0
//   left  f-(q) = c int dx/2pi e^{iqx}      (1 - e^{-ix})^{-(c+1)},    q >= 0
// evaluated by quadrature. (1 - e^{+-iy}) is taken as
// 2 sin(y/2) e^{+-i(y - pi)/2}, the principal branch.
//
// When the endpoint exponent is > -1 the integral is done on the unit circle
// with a graded mesh y = pi u^8 at both ends. When it is <= -1 the integral
// diverges at the endpoints; it is then Abel-regularized, i.e. taken on the
// circle |e^{iy}| = 1/2, which by Cauchy's theorem is the r -> 1 limit.

/// Throws std::domain_error for a >= 0, where the integrand is not integrable.
double appendix_integral_fplus(int p, double a, int quadrature_nodes = 4096);
double appendix_integral_fminus(int q, double a, int quadrature_nodes = 4096);
double appendix_integral_fplus_left(int p, double c, int quadrature_nodes = 4096);
double appendix_integral_fminus_left(int q, double c, int quadrature_nodes = 4096);

}  // namespace xxff::luttinger
