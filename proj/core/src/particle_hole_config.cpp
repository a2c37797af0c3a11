#include "xxff/particle_hole_config.hpp"

#include <set>
#include <stdexcept>
#include <string>

namespace xxff {
namespace {

void check_branch(const PairList& branch, const char* name, bool right) {
  if (branch.particles.size() != branch.holes.size()) {
    throw std::invalid_argument(std::string(name) + " branch: particle and hole counts differ");
  }
  std::set<int> seen_p;
  std::set<int> seen_h;
  for (int p : branch.particles) {
    if (right ? p <= 0 : p >= 0) {
      throw std::invalid_argument(std::string(name) + " branch: particle offset " +
                                  std::to_string(p) + (right ? " must be > 0" : " must be < 0"));
    }
    if (!seen_p.insert(p).second) {
      throw std::invalid_argument(std::string(name) + " branch: repeated particle offset " +
                                  std::to_string(p));
    }
  }
  for (int q : branch.holes) {
    if (right ? q > 0 : q < 0) {
      throw std::invalid_argument(std::string(name) + " branch: hole offset " +
                                  std::to_string(q) + (right ? " must be <= 0" : " must be >= 0"));
    }
    if (!seen_h.insert(q).second) {
      throw std::invalid_argument(std::string(name) + " branch: repeated hole offset " +
                                  std::to_string(q));
    }
  }
}

}  // namespace

void ParticleHoleConfig::validate() const {
  if (m < 0) throw std::invalid_argument("ParticleHoleConfig: m must be non-negative");
  check_branch(right, "right", true);
  check_branch(left, "left", false);
}

}  // namespace xxff
