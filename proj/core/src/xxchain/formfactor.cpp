#include "xxff/xxchain/formfactor.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>
#include <string>

namespace xxff::xxchain {
namespace {

// log|sin(pi d / 2L)| and its sign for d in [0, 4L).
class HalfAngleSines {
 public:
  explicit HalfAngleSines(int L) : L_(L), log_abs_(4 * static_cast<std::size_t>(L)), sign_(log_abs_.size()) {
    for (int d = 0; d < 4 * L; ++d) {
      const long double s = std::sin(std::numbers::pi_v<long double> * d / (2.0L * L));
      const auto i = static_cast<std::size_t>(d);
      sign_[i] = (d == 0 || d == 2 * L) ? 0 : (d < 2 * L ? 1 : -1);
      log_abs_[i] = sign_[i] == 0 ? 0.0L : std::log(std::fabs(s));
    }
  }

  // Accumulates sin((k_a - k_b) / 2) for momenta labelled in units of pi / L.
  void multiply(int twice_a, int twice_b, int power, long double& log_acc, long double& comp,
                int& sign) const {
    const int d = (((twice_a - twice_b) % (4 * L_)) + 4 * L_) % (4 * L_);
    const auto i = static_cast<std::size_t>(d);
    if (sign_[i] == 0) throw GridMismatch("formfactor: coinciding momenta in a sine factor");
    // Kahan summation: the individual logs are O(1) but there are O(L^2).
    const long double y = power * log_abs_[i] - comp;
    const long double t = log_acc + y;
    comp = (t - log_acc) - y;
    log_acc = t;
    if (sign_[i] < 0) sign = -sign;
  }

 private:
  int L_;
  std::vector<long double> log_abs_;
  std::vector<int> sign_;
};

// Product formula with both lists taken in the order given.
FormfactorParts ordered_parts(int L, const std::vector<int>& p, const std::vector<int>& q) {
  if (q.size() + 1 != p.size()) {
    throw std::invalid_argument("formfactor: expected |q| = |p| - 1, got |p| = " +
                                std::to_string(p.size()) + ", |q| = " + std::to_string(q.size()));
  }
  const HalfAngleSines sines(L);
  long double log_acc = 0.0L;
  long double comp = 0.0L;
  int sign = 1;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j) sines.multiply(p[i], p[j], 1, log_acc, comp, sign);
  for (std::size_t i = 0; i < q.size(); ++i)
    for (std::size_t j = i + 1; j < q.size(); ++j) sines.multiply(q[i], q[j], 1, log_acc, comp, sign);
  for (int pi : p)
    for (int qj : q) sines.multiply(pi, qj, -1, log_acc, comp, sign);

  const long double lnL = std::log(static_cast<long double>(L));
  const auto K = static_cast<long double>(q.size());
  log_acc -= 0.5L * lnL + K * lnL;

  long qsum = 0;
  for (int t : q) qsum += t;
  qsum = ((qsum % (2 * L)) + 2 * L) % (2 * L);
  // i^{M-1} e^{i sum q}; sum q = pi * qsum / L.
  const long double phase = std::numbers::pi_v<long double> *
                            (static_cast<long double>(qsum) / L + 0.5L * static_cast<long double>(q.size() % 4));
  return {static_cast<double>(log_acc), sign, static_cast<double>(std::fmod(phase, 2.0L * std::numbers::pi_v<long double>))};
}

void require_compatible(const MomentumSet& p, const MomentumSet& q) {
  if (p.L() != q.L()) throw std::invalid_argument("formfactor: sets belong to different chains");
  if (p.grid() == q.grid()) {
    throw GridMismatch("formfactor: p and q must lie on different momentum grids");
  }
}

void require_small_shift(const ChainSpec& spec, int m) {
  spec.validate();
  if (spec.M < 1) throw std::invalid_argument("shifted formfactor: need M >= 1");
  if (m < 0) throw std::invalid_argument("shifted formfactor: m must be non-negative");
  if (!(4 * 2 * m < spec.L)) {
    throw std::out_of_range("shifted formfactor: shift m = " + std::to_string(m) +
                            " too large for L = " + std::to_string(spec.L) + " (need 2m < L/4)");
  }
}

std::vector<int> shifted_window(const ChainSpec& spec, int m) {
  const int count = spec.M - 1;
  auto w = centred_window(count, sector_grid(count));
  for (int& n : w) n += m;
  return w;
}

// Parity of the permutation sorting the canonical (mod L) representatives.
int reorder_sign(const std::vector<int>& list, int L) {
  std::vector<int> c;
  c.reserve(list.size());
  for (int n : list) c.push_back(((n % L) + L) % L);
  int inversions = 0;
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = i + 1; j < c.size(); ++j)
      if (c[i] > c[j]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

// Window list with the configuration applied in place.
std::vector<int> apply_config(const ChainSpec& spec, const ParticleHoleConfig& config) {
  config.validate();
  require_small_shift(spec, config.m);
  auto w = shifted_window(spec, config.m);
  if (w.empty()) {
    if (config.empty()) return w;
    throw std::invalid_argument("particle-hole formfactor: no occupied levels to excite");
  }
  const int top = w.back();
  const int bottom = w.front();
  const int size = static_cast<int>(w.size());
  std::set<int> holes;
  auto replace = [&](int hole, int particle) {
    const auto it = std::find(w.begin(), w.end(), hole);
    if (it == w.end()) throw std::out_of_range("particle-hole formfactor: hole offset outside the filled levels");
    if (!holes.insert(hole).second) throw std::invalid_argument("particle-hole formfactor: overlapping holes");
    *it = particle;
  };
  for (std::size_t i = 0; i < config.right.size(); ++i) {
    if (-config.right.holes[i] >= size) throw std::out_of_range("particle-hole formfactor: right hole offset out of range");
    replace(top + config.right.holes[i], top + config.right.particles[i]);
  }
  for (std::size_t i = 0; i < config.left.size(); ++i) {
    if (config.left.holes[i] >= size) throw std::out_of_range("particle-hole formfactor: left hole offset out of range");
    replace(bottom + config.left.holes[i], bottom + config.left.particles[i]);
  }
  std::set<int> canon;
  for (int n : w) {
    if (!canon.insert(((n % spec.L) + spec.L) % spec.L).second) {
      throw std::invalid_argument("particle-hole formfactor: particles overlap occupied levels (offsets too large for L)");
    }
  }
  return w;
}

}  // namespace

std::complex<double> FormfactorParts::value() const {
  return std::polar(sign * std::exp(log_abs), phase);
}

double FormfactorParts::amplitude() const { return sign * std::exp(log_abs); }

FormfactorParts formfactor_parts(const MomentumSet& p, const MomentumSet& q) {
  require_compatible(p, q);
  return ordered_parts(p.L(), p.twice_indices(), q.twice_indices());
}

std::complex<double> formfactor(const MomentumSet& p, const MomentumSet& q) {
  return formfactor_parts(p, q).value();
}

MomentumSet shifted_ground_set(const ChainSpec& spec, int m) {
  require_small_shift(spec, m);
  return MomentumSet(spec.L, sector_grid(spec.M - 1), shifted_window(spec, m));
}

FormfactorParts shifted_ground_parts(const ChainSpec& spec, int m) {
  return formfactor_parts(ground_state_momenta(spec, Sector::Full), shifted_ground_set(spec, m));
}

std::complex<double> shifted_ground_formfactor(const ChainSpec& spec, int m) {
  return shifted_ground_parts(spec, m).value();
}

MomentumSet particle_hole_set(const ChainSpec& spec, const ParticleHoleConfig& config) {
  return MomentumSet(spec.L, sector_grid(spec.M - 1), apply_config(spec, config));
}

std::complex<double> particle_hole_formfactor(const ChainSpec& spec,
                                              const ParticleHoleConfig& config) {
  const auto excited = apply_config(spec, config);
  const auto base = shifted_window(spec, config.m);
  const int sign = reorder_sign(base, spec.L) * reorder_sign(excited, spec.L);
  const MomentumSet q(spec.L, sector_grid(spec.M - 1), excited);
  return static_cast<double>(sign) * formfactor(ground_state_momenta(spec, Sector::Full), q);
}

}  // namespace xxff::xxchain
