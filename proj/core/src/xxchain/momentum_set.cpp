#include "xxff/xxchain/momentum_set.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace xxff::xxchain {

void ChainSpec::validate() const {
  if (L <= 0 || L % 2 != 0) {
    throw std::invalid_argument("ChainSpec: L must be even and positive, got " + std::to_string(L));
  }
  if (M < 0 || M > L) {
    throw std::invalid_argument("ChainSpec: M must lie in [0, L], got " + std::to_string(M));
  }
}

MomentumGrid sector_grid(int particle_count) {
  return particle_count % 2 == 1 ? MomentumGrid::Integer : MomentumGrid::HalfInteger;
}

MomentumSet::MomentumSet(int L, MomentumGrid grid, std::vector<int> indices)
    : L_(L), grid_(grid), indices_(std::move(indices)) {
  if (L_ <= 0) throw std::invalid_argument("MomentumSet: L must be positive");
  for (int& n : indices_) n = ((n % L_) + L_) % L_;
  std::sort(indices_.begin(), indices_.end());
  if (std::adjacent_find(indices_.begin(), indices_.end()) != indices_.end()) {
    throw std::invalid_argument("MomentumSet: repeated momentum index");
  }
}

std::vector<int> MomentumSet::twice_indices() const {
  const int off = grid_ == MomentumGrid::HalfInteger ? 1 : 0;
  std::vector<int> t;
  t.reserve(indices_.size());
  for (int n : indices_) t.push_back(2 * n + off);
  return t;
}

std::vector<double> MomentumSet::momenta() const {
  std::vector<double> k;
  for (int t : twice_indices()) k.push_back(std::numbers::pi * t / L_);
  return k;
}

std::vector<double> MomentumSet::signed_momenta() const {
  std::vector<double> k;
  for (int t : twice_indices()) {
    if (t > L_) t -= 2 * L_;
    k.push_back(std::numbers::pi * t / L_);
  }
  return k;
}

int MomentumSet::total_momentum_twice() const {
  long sum = 0;
  for (int t : twice_indices()) sum += t;
  return static_cast<int>(sum % (2 * L_));
}

double MomentumSet::energy() const {
  double e = 0.0;
  for (double k : momenta()) e += 4.0 * std::cos(k);
  return e;
}

std::vector<int> centred_window(int count, MomentumGrid grid) {
  // Integer grid: symmetric for odd counts. Half-integer grid: n + 1/2 is
  // symmetric for even counts.
  const int start = grid == MomentumGrid::Integer ? -(count / 2) : -((count + 1) / 2);
  std::vector<int> w(static_cast<std::size_t>(std::max(count, 0)));
  for (int i = 0; i < count; ++i) w[static_cast<std::size_t>(i)] = start + i;
  return w;
}

MomentumSet ground_state_momenta(const ChainSpec& spec, Sector sector) {
  spec.validate();
  const int count = sector == Sector::Full ? spec.M : spec.M - 1;
  if (count < 0) throw std::invalid_argument("ground_state_momenta: empty chain has no M-1 sector");
  const MomentumGrid grid = sector_grid(count);
  return MomentumSet(spec.L, grid, centred_window(count, grid));
}

}  // namespace xxff::xxchain
