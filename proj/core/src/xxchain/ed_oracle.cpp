#include "xxff/xxchain/ed_oracle.hpp"

#include "xxff/xxchain/formfactor.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <numbers>
#include <sstream>

namespace xxff::xxchain {
namespace {

constexpr double kLevelTol = 1e-8;

// Generic weights for H + alpha (T + T^+) + i beta (T - T^+); its eigenvectors
// are joint eigenvectors of H and T.
constexpr double kAlpha = 0.0731;
constexpr double kBeta = 0.0419;

std::uint32_t rotate_sites(std::uint32_t s, int L) {
  const std::uint32_t mask = (L == 32) ? ~0u : ((1u << L) - 1u);
  return ((s << 1) | (s >> (L - 1))) & mask;
}

struct Block {
  double energy;
  int momentum_twice;
  std::vector<std::size_t> members;
};

bool same_level(double e1, int k1, double e2, int k2) {
  return k1 == k2 && std::fabs(e1 - e2) < kLevelTol;
}

template <class Item, class Key>
std::vector<Block> group_levels(const std::vector<Item>& items, Key key) {
  std::vector<Block> blocks;
  for (std::size_t i = 0; i < items.size(); ++i) {
    const auto [e, k] = key(items[i]);
    auto it = std::find_if(blocks.begin(), blocks.end(),
                           [&](const Block& b) { return same_level(b.energy, b.momentum_twice, e, k); });
    if (it == blocks.end()) {
      blocks.push_back({e, k, {i}});
    } else {
      it->members.push_back(i);
    }
  }
  return blocks;
}

std::string set_label(const MomentumSet& s) {
  std::ostringstream os;
  for (std::size_t i = 0; i < s.indices().size(); ++i) os << (i ? "." : "") << s.indices()[i];
  return os.str();
}

}  // namespace

EdSector::EdSector(int L, int M) : L_(L), M_(M) {
  ChainSpec{L, M}.validate();
  if (L > 12) throw std::invalid_argument("EdSector: dense diagonalization limited to L <= 12");
  for (std::uint32_t s = 0; s < (1u << L); ++s)
    if (std::popcount(s) == M) basis_.push_back(s);
  const auto dim = static_cast<Eigen::Index>(basis_.size());

  Eigen::MatrixXd H = Eigen::MatrixXd::Zero(dim, dim);
  Eigen::MatrixXd T = Eigen::MatrixXd::Zero(dim, dim);
  for (Eigen::Index c = 0; c < dim; ++c) {
    const std::uint32_t s = basis_[static_cast<std::size_t>(c)];
    for (int i = 0; i < L; ++i) {
      const int j = (i + 1) % L;
      const bool bi = (s >> i) & 1u;
      const bool bj = (s >> j) & 1u;
      // sx sx + sy sy = 2 (s+ s- + s- s+) flips antiparallel neighbours.
      if (bi != bj) {
        const std::uint32_t t = s ^ (1u << i) ^ (1u << j);
        H(static_cast<Eigen::Index>(index_of(t)), c) += 2.0;
      }
    }
    T(static_cast<Eigen::Index>(index_of(rotate_sites(s, L))), c) = 1.0;
  }

  const std::complex<double> I{0.0, 1.0};
  Eigen::MatrixXcd A = H.cast<std::complex<double>>() +
                       kAlpha * (T + T.transpose()).cast<std::complex<double>>() +
                       I * kBeta * (T - T.transpose()).cast<std::complex<double>>();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(A);
  const Eigen::MatrixXcd& V = solver.eigenvectors();
  const Eigen::MatrixXcd Hc = H.cast<std::complex<double>>();
  const Eigen::MatrixXcd Tc = T.cast<std::complex<double>>();

  for (Eigen::Index k = 0; k < dim; ++k) {
    const Eigen::VectorXcd v = V.col(k);
    const double e = v.dot(Hc * v).real();
    const std::complex<double> lambda = v.dot(Tc * v);
    if (std::fabs(std::abs(lambda) - 1.0) > 1e-8 || (Hc * v - e * v).norm() > 1e-8) {
      throw StateMatchError("EdSector: eigenvector is not a joint eigenstate of H and T");
    }
    // T = e^{-i K}; K = pi * momentum_twice / L.
    const double kt = -std::arg(lambda) * L / std::numbers::pi;
    const long r = std::lround(kt);
    if (std::fabs(kt - static_cast<double>(r)) > 1e-6) {
      throw StateMatchError("EdSector: translation eigenvalue off the momentum lattice");
    }
    EdEigenstate st;
    st.energy = e;
    st.momentum_twice = static_cast<int>(((r % (2 * L)) + 2 * L) % (2 * L));
    st.amplitudes.assign(v.data(), v.data() + v.size());
    states_.push_back(std::move(st));
  }
}

std::size_t EdSector::index_of(std::uint32_t config) const {
  const auto it = std::lower_bound(basis_.begin(), basis_.end(), config);
  if (it == basis_.end() || *it != config) throw std::out_of_range("EdSector: configuration not in sector");
  return static_cast<std::size_t>(it - basis_.begin());
}

std::vector<std::size_t> EdSector::matching(const MomentumSet& set) const {
  const double e = set.energy();
  const int k = set.total_momentum_twice();
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < states_.size(); ++i)
    if (same_level(states_[i].energy, states_[i].momentum_twice, e, k)) out.push_back(i);
  return out;
}

std::complex<double> ed_matrix_element(const EdSector& full, std::size_t p_state,
                                       const EdSector& reduced, std::size_t q_state) {
  if (full.L() != reduced.L() || reduced.M() + 1 != full.M()) {
    throw std::invalid_argument("ed_matrix_element: sectors must be M and M - 1 of one chain");
  }
  const auto& p = full.states().at(p_state).amplitudes;
  const auto& q = reduced.states().at(q_state).amplitudes;
  std::complex<double> acc = 0.0;
  for (std::size_t c = 0; c < full.basis().size(); ++c) {
    const std::uint32_t s = full.basis()[c];
    if ((s & 1u) == 0) continue;
    acc += std::conj(q[reduced.index_of(s ^ 1u)]) * p[c];
  }
  return acc;
}

std::complex<double> ed_oracle_formfactor(const ChainSpec& spec, const MomentumSet& p,
                                          const MomentumSet& q) {
  spec.validate();
  if (spec.L > 8) throw std::invalid_argument("ed_oracle_formfactor: requires L <= 8");
  if (p.size() != static_cast<std::size_t>(spec.M) || q.size() + 1 != p.size()) {
    throw std::invalid_argument("ed_oracle_formfactor: set sizes do not match the sectors");
  }
  const EdSector full(spec.L, spec.M);
  const EdSector reduced(spec.L, spec.M - 1);
  const auto pm = full.matching(p);
  const auto qm = reduced.matching(q);
  if (pm.size() != 1 || qm.size() != 1) {
    throw StateMatchError("ed_oracle_formfactor: (energy, momentum) block of dimension " +
                          std::to_string(pm.size()) + " x " + std::to_string(qm.size()) +
                          "; individual eigenvectors are not determined");
  }
  return ed_matrix_element(full, pm[0], reduced, qm[0]);
}

std::vector<MomentumSet> enumerate_sector(int L, int count) {
  std::vector<MomentumSet> out;
  const MomentumGrid grid = sector_grid(count);
  for (std::uint32_t s = 0; s < (1u << L); ++s) {
    if (std::popcount(s) != count) continue;
    std::vector<int> idx;
    for (int i = 0; i < L; ++i)
      if ((s >> i) & 1u) idx.push_back(i);
    out.emplace_back(L, grid, std::move(idx));
  }
  std::sort(out.begin(), out.end(),
            [](const MomentumSet& a, const MomentumSet& b) { return a.indices() < b.indices(); });
  return out;
}

EdComparison compare_with_ed(int L, int M) {
  if (M < 1) throw std::invalid_argument("compare_with_ed: need M >= 1");
  EdComparison cmp;
  cmp.L = L;
  cmp.M = M;
  const EdSector full(L, M);
  const EdSector reduced(L, M - 1);
  const auto psets = enumerate_sector(L, M);
  const auto qsets = enumerate_sector(L, M - 1);
  if (psets.size() != full.states().size() || qsets.size() != reduced.states().size()) {
    throw StateMatchError("compare_with_ed: sector dimensions disagree");
  }

  auto set_key = [](const MomentumSet& s) { return std::pair{s.energy(), s.total_momentum_twice()}; };
  auto ed_key = [](const EdEigenstate& s) { return std::pair{s.energy, s.momentum_twice}; };
  const auto pblocks = group_levels(psets, set_key);
  const auto qblocks = group_levels(qsets, set_key);
  const auto pblocks_ed = group_levels(full.states(), ed_key);
  const auto qblocks_ed = group_levels(reduced.states(), ed_key);

  auto find_ed = [](const std::vector<Block>& blocks, const Block& b) -> const Block& {
    for (const auto& e : blocks)
      if (same_level(e.energy, e.momentum_twice, b.energy, b.momentum_twice)) {
        if (e.members.size() != b.members.size()) break;
        return e;
      }
    throw StateMatchError("compare_with_ed: no ED block matches a momentum-set block");
  };

  // Completeness: sum_q |<q|s0-|p>|^2 = <p|n_0|p> = M/L.
  const double density = static_cast<double>(M) / L;
  for (const auto& p : psets) {
    double sum = 0.0;
    for (const auto& q : qsets) sum += std::norm(formfactor(p, q));
    cmp.max_completeness_error_formula = std::max(cmp.max_completeness_error_formula, std::fabs(sum - density));
  }
  for (std::size_t ip = 0; ip < full.states().size(); ++ip) {
    double sum = 0.0;
    for (std::size_t iq = 0; iq < reduced.states().size(); ++iq) sum += std::norm(ed_matrix_element(full, ip, reduced, iq));
    cmp.max_completeness_error_ed = std::max(cmp.max_completeness_error_ed, std::fabs(sum - density));
  }

  for (const auto& pb : pblocks) {
    const Block& pe = find_ed(pblocks_ed, pb);
    for (const auto& qb : qblocks) {
      const Block& qe = find_ed(qblocks_ed, qb);
      const auto rows = static_cast<Eigen::Index>(qb.members.size());
      const auto cols = static_cast<Eigen::Index>(pb.members.size());
      Eigen::MatrixXcd F(rows, cols);
      Eigen::MatrixXcd E(rows, cols);
      for (Eigen::Index r = 0; r < rows; ++r)
        for (Eigen::Index c = 0; c < cols; ++c) {
          F(r, c) = formfactor(psets[pb.members[static_cast<std::size_t>(c)]], qsets[qb.members[static_cast<std::size_t>(r)]]);
          E(r, c) = ed_matrix_element(full, pe.members[static_cast<std::size_t>(c)], reduced, qe.members[static_cast<std::size_t>(r)]);
        }
      double dev;
      if (rows == 1 && cols == 1) {
        dev = std::fabs(std::abs(F(0, 0)) - std::abs(E(0, 0)));
      } else {
        ++cmp.degenerate_block_pairs;
        const Eigen::VectorXd sf = Eigen::JacobiSVD<Eigen::MatrixXcd>(F).singularValues();
        const Eigen::VectorXd se = Eigen::JacobiSVD<Eigen::MatrixXcd>(E).singularValues();
        dev = (sf - se).cwiseAbs().maxCoeff();
      }
      cmp.max_abs_deviation = std::max(cmp.max_abs_deviation, dev);
      cmp.pairs += static_cast<std::size_t>(rows * cols);
    }
  }
  return cmp;
}

std::vector<GoldenRow> ed_golden_table(const std::vector<int>& sizes) {
  std::vector<GoldenRow> rows;
  for (int L : sizes) {
    for (int M = 1; M <= L; ++M) {
      const ChainSpec spec{L, M};
      const EdSector full(L, M);
      const EdSector reduced(L, M - 1);
      const auto pm = full.matching(ground_state_momenta(spec, Sector::Full));
      if (pm.size() != 1) throw StateMatchError("ed_golden_table: degenerate ground state");
      const auto qsets = enumerate_sector(L, M - 1);
      auto set_key = [](const MomentumSet& s) { return std::pair{s.energy(), s.total_momentum_twice()}; };
      for (const auto& qb : group_levels(qsets, set_key)) {
        std::string id;
        for (std::size_t i = 0; i < qb.members.size(); ++i) id += (i ? "+" : "") + set_label(qsets[qb.members[i]]);
        if (id.empty()) id = "-";
        double abs2 = 0.0;
        for (std::size_t iq : reduced.matching(qsets[qb.members.front()]))
          abs2 += std::norm(ed_matrix_element(full, pm[0], reduced, iq));
        rows.push_back({L, M, id, abs2});
      }
    }
  }
  return rows;
}

}  // namespace xxff::xxchain
