#include "xxff/luttinger/resummation.hpp"

#include "xxff/numerics/formal_series.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace xxff::luttinger {
namespace {

// Strictly increasing lists of `count` integers >= `min` summing to `sum`.
void distinct_parts(int sum, int count, int min, std::vector<int>& cur,
                    std::vector<std::vector<int>>& out) {
  if (count == 0) {
    if (sum == 0) out.push_back(cur);
    return;
  }
  // Smallest possible completion: min + (min+1) + ... + (min+count-1).
  for (int v = min; count * v + count * (count - 1) / 2 <= sum; ++v) {
    cur.push_back(v);
    distinct_parts(sum - v, count - 1, v + 1, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<int>> distinct_sets(int sum, int count, int min) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  distinct_parts(sum, count, min, cur, out);
  return out;
}

std::complex<double> branch_variable(double phase, Branch branch, double damping) {
  return std::polar(damping, branch == Branch::Right ? phase : -phase);
}

}  // namespace

int BranchConfig::level() const {
  const int sp = std::accumulate(particles.begin(), particles.end(), 0);
  const int sq = std::accumulate(holes.begin(), holes.end(), 0);
  return std::abs(sp - sq);
}

std::vector<BranchConfig> configurations_at_level(int k, Branch branch) {
  if (k < 0) throw std::invalid_argument("configurations_at_level: level must be non-negative");
  std::vector<BranchConfig> out;
  // n pairs need at least n(n+1)/2 from particles and n(n-1)/2 from holes.
  for (int n = 0; n * n <= k; ++n) {
    for (int s = n * (n + 1) / 2; s <= k - n * (n - 1) / 2; ++s) {
      const auto parts = distinct_sets(s, n, 1);
      const auto hole_depths = distinct_sets(k - s, n, 0);
      for (const auto& p : parts) {
        for (const auto& h : hole_depths) {
          BranchConfig c;
          for (int v : p) c.particles.push_back(branch == Branch::Right ? v : -v);
          for (int v : h) c.holes.push_back(branch == Branch::Right ? -v : v);
          out.push_back(std::move(c));
        }
      }
    }
  }
  return out;
}

std::vector<double> level_aggregates(double exponent_param, int max_level, Branch branch) {
  std::vector<double> agg;
  for (int k = 0; k <= max_level; ++k) {
    double sum = 0.0;
    for (const auto& c : configurations_at_level(k, branch)) {
      const double f = cauchy_determinant_factor(c.particles, c.holes, branch, exponent_param);
      sum += f * f;
    }
    agg.push_back(sum);
  }
  return agg;
}

std::vector<BigRational> level_aggregates_exact(const BigRational& exponent_param, int max_level,
                                                Branch branch) {
  std::vector<BigRational> agg;
  for (int k = 0; k <= max_level; ++k) {
    BigRational sum = 0;
    for (const auto& c : configurations_at_level(k, branch)) {
      const BigRational f = cauchy_determinant_factor_exact(c.particles, c.holes, branch, exponent_param);
      sum += f * f;
    }
    agg.push_back(sum);
  }
  return agg;
}

std::complex<double> sum_identity_partial(double exponent_param, double phase, int cutoff,
                                          Branch branch, double damping) {
  if (cutoff < 0) throw std::invalid_argument("sum_identity_partial: cutoff must be non-negative");
  const auto agg = level_aggregates(exponent_param, cutoff, branch);
  const std::complex<double> z = branch_variable(phase, branch, damping);
  std::complex<double> acc = 0.0;
  std::complex<double> zk = 1.0;
  for (double a : agg) {
    acc += a * zk;
    zk *= z;
  }
  return acc;
}

std::complex<double> sum_identity_closed_form(double exponent_param, double phase, Branch branch,
                                              double damping) {
  const double power = -exponent_param * exponent_param;
  if (damping == 1.0) {
    const double s = std::sin(phase / 2.0);
    if (s <= 0.0) throw std::domain_error("sum_identity_closed_form: phase must lie in (0, 2 pi) mod 2 pi");
    // 1 - e^{i phi} = 2 sin(phi/2) e^{i (phi - pi)/2}, argument in (-pi/2, pi/2).
    const double arg = (branch == Branch::Right ? 1.0 : -1.0) * (phase - std::numbers::pi) / 2.0;
    return std::polar(std::pow(2.0 * s, power), power * arg);
  }
  return std::pow(1.0 - branch_variable(phase, branch, damping), power);
}

std::vector<ConvergenceRow> sum_identity_convergence(double exponent_param, double phase,
                                                     int max_cutoff, Branch branch,
                                                     double damping) {
  const auto agg = level_aggregates(exponent_param, max_cutoff, branch);
  const auto closed = sum_identity_closed_form(exponent_param, phase, branch, damping);
  const std::complex<double> z = branch_variable(phase, branch, damping);
  std::vector<ConvergenceRow> rows;
  std::complex<double> acc = 0.0;
  std::complex<double> zk = 1.0;
  for (int k = 0; k <= max_cutoff; ++k) {
    acc += agg[static_cast<std::size_t>(k)] * zk;
    zk *= z;
    rows.push_back({k, acc, closed, std::abs(acc - closed)});
  }
  return rows;
}

}  // namespace xxff::luttinger
