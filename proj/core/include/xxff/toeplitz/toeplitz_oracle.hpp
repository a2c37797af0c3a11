#pragma once

namespace xxff::toeplitz {

/// G0(l) = 2 sin(pi l / 2) / (pi l), G0(0) = 1. The normalization is the one
/// that makes the 1x1 determinant equal 2/pi.
double free_fermion_kernel(int l);

/// Fourier coefficient M(l) = (1/2pi) int f(x) e^{-ilx} dx of the symbol
/// f(x) = e^{ix} sign(pi/2 - |x|) on (-pi, pi), in closed form. It vanishes
/// for every odd l.
double symbol_fourier_coefficient(int l);

/// The same coefficient by composite Simpson quadrature on the three smooth
/// pieces of f, with `nodes` intervals in total.
double symbol_fourier_coefficient_quadrature(int l, int nodes);

/// R_N = det[(-1)^{i-j} G0(2i - 2j - 1)] as a dense LU determinant, N <= 16.
/// fourier_nodes = 0 takes the closed-form coefficients; otherwise they come
/// from quadrature, using G0(l) = M(1 - l) for odd l.
double toeplitz_oracle_R(int N, int fourier_nodes = 0);

/// G(x) = det[M(i - j)]_{x x x} / 2, x <= 32.
double toeplitz_oracle_G(int x);

}  // namespace xxff::toeplitz
