#pragma once

#include "xxff/xxchain/momentum_set.hpp"

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace xxff::xxchain {

/// Raised when a momentum set does not single out one exact eigenstate
/// (degenerate energy and momentum) or no eigenstate matches at all.
class StateMatchError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Joint eigenstate of H and of the one-site translation T, from dense
/// diagonalization of one magnetization sector.
struct EdEigenstate {
  double energy;
  /// Total momentum in units of pi / L, mod 2L, read off T = e^{-i K}.
  int momentum_twice;
  std::vector<std::complex<double>> amplitudes;
};

class EdSector {
 public:
  /// Diagonalizes the M-up-spin sector of H = sum (sx sx + sy sy) on L <= 8
  /// (10 is accepted but slow) sites with periodic boundary conditions.
  EdSector(int L, int M);

  int L() const { return L_; }
  int M() const { return M_; }
  const std::vector<std::uint32_t>& basis() const { return basis_; }
  const std::vector<EdEigenstate>& states() const { return states_; }

  /// Positions of all eigenstates with the energy and momentum of `set`.
  std::vector<std::size_t> matching(const MomentumSet& set) const;
  std::size_t index_of(std::uint32_t config) const;

 private:
  int L_;
  int M_;
  std::vector<std::uint32_t> basis_;
  std::vector<EdEigenstate> states_;
};

/// <q| sigma_0^- |p> between ED eigenvectors, in the basis of `reduced`
/// and `full`.
std::complex<double> ed_matrix_element(const EdSector& full, std::size_t p_state,
                                       const EdSector& reduced, std::size_t q_state);

/// Matrix element between the ED eigenstates carrying the quantum numbers of
/// the two momentum sets. Throws StateMatchError when either set maps to a
/// degenerate (energy, momentum) block. Requires L <= 8.
std::complex<double> ed_oracle_formfactor(const ChainSpec& spec, const MomentumSet& p,
                                          const MomentumSet& q);

/// All M-element momentum sets of the sector grid, lexicographic.
std::vector<MomentumSet> enumerate_sector(int L, int count);

/// Comparison of the product formula against ED over every pair of
/// (energy, momentum) blocks of sectors M and M - 1. On 1x1 blocks the
/// deviation is | |psi_formula| - |psi_ED| |; on degenerate blocks the
/// sorted singular values of the two block matrices are compared, since
/// individual eigenvectors there are only defined up to a unitary.
struct EdComparison {
  int L = 0;
  int M = 0;
  std::size_t pairs = 0;
  std::size_t degenerate_block_pairs = 0;
  double max_abs_deviation = 0.0;
  double max_completeness_error_formula = 0.0;
  double max_completeness_error_ed = 0.0;
};

EdComparison compare_with_ed(int L, int M);

/// One row of the committed golden table: for the Full-sector ground state of
/// (L, M), the total |psi|^2 into one (energy, momentum) block of the reduced
/// sector.
struct GoldenRow {
  int L;
  int M;
  std::string state_id;
  double abs2;
};

/// Golden rows from the ED oracle for every L in `sizes` and 1 <= M <= L.
std::vector<GoldenRow> ed_golden_table(const std::vector<int>& sizes);

}  // namespace xxff::xxchain
