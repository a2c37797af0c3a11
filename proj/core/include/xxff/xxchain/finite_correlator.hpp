#pragma once

#include "xxff/xxchain/momentum_set.hpp"

namespace xxff::xxchain {

/// <sigma^+_x sigma^-_0> in the zero-centred ground state of `spec`, as
/// (1/2) det[2 G0(i - j) - delta_ij], i = 0..x-1, j = 1..x, with G0 the
/// finite-chain fermion propagator. Requires 0 < x < L/2.
double finite_correlator(const ChainSpec& spec, int x);

/// Propagator <a^+_l a_0> of the filled set.
double fermion_propagator(const MomentumSet& filled, int l);

}  // namespace xxff::xxchain
