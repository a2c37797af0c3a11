#pragma once

#include <vector>

namespace xxff {

/// Particle and hole offsets at one Fermi point, paired by position: the
/// i-th particle replaces the i-th hole.
struct PairList {
  std::vector<int> particles;
  std::vector<int> holes;

  std::size_t size() const { return particles.size(); }
  bool empty() const { return particles.empty(); }
};

/// Low-lying excitation on top of the state with m particles moved from the
/// left to the right Fermi point. Offsets are integers in units of 2 pi / L.
///
/// Right branch: particles p > 0 above the top occupied level, holes q <= 0
/// counted down from it (q = 0 is the top level itself). Left branch:
/// particles p < 0 below the bottom occupied level, holes q >= 0 counted up
/// from it.
struct ParticleHoleConfig {
  int m = 0;
  PairList right;
  PairList left;

  /// Throws std::invalid_argument on sign-convention violations, unequal
  /// particle/hole counts or repeated offsets within a branch.
  void validate() const;
  bool empty() const { return right.empty() && left.empty(); }
};

}  // namespace xxff
