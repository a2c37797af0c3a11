#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace xxff::xxchain {

/// Periodic XX chain of L sites holding M up-spins.
struct ChainSpec {
  int L;
  int M;

  /// Throws std::invalid_argument unless L is even and positive, 0 <= M <= L.
  void validate() const;
  /// L = 2M and M odd.
  bool canonical_setup() const { return L == 2 * M && M % 2 == 1; }
};

enum class MomentumGrid { Integer, HalfInteger };

/// Momentum grid of a K-fermion sector after Jordan-Wigner: periodic for odd
/// K, antiperiodic for even K.
MomentumGrid sector_grid(int particle_count);

/// A free-fermion eigenstate of the chain, k_i = (2 pi / L)(n_i + offset).
/// Indices are canonical representatives n_i in [0, L), sorted ascending.
class MomentumSet {
 public:
  /// Indices may be any integers; they are reduced mod L and sorted. Throws
  /// std::invalid_argument on repeated indices (mod L).
  MomentumSet(int L, MomentumGrid grid, std::vector<int> indices);

  int L() const { return L_; }
  MomentumGrid grid() const { return grid_; }
  std::size_t size() const { return indices_.size(); }
  const std::vector<int>& indices() const { return indices_; }

  /// 2 (n_i + offset): an integer label of each momentum in units of pi / L.
  std::vector<int> twice_indices() const;
  /// Momenta in [0, 2 pi).
  std::vector<double> momenta() const;
  /// Momenta mapped to (-pi, pi].
  std::vector<double> signed_momenta() const;

  /// Sum of momenta in units of pi / L, reduced mod 2L.
  int total_momentum_twice() const;
  /// sum_i 4 cos k_i, the eigenvalue of H = sum (sx sx + sy sy).
  double energy() const;

  friend bool operator==(const MomentumSet&, const MomentumSet&) = default;

 private:
  int L_;
  MomentumGrid grid_;
  std::vector<int> indices_;
};

enum class Sector { Full, Reduced };

/// Zero-centred filling of the M-particle (Full) or (M-1)-particle (Reduced)
/// sector.
MomentumSet ground_state_momenta(const ChainSpec& spec, Sector sector);

/// Indices of the zero-centred filling, before reduction mod L, ascending.
std::vector<int> centred_window(int count, MomentumGrid grid);

}  // namespace xxff::xxchain
