#include "doctest.h"

#include "oracles/ed_correlator.hpp"

#include "xxff/toeplitz/cauchy_product.hpp"
#include "xxff/xxchain/ed_oracle.hpp"
#include "xxff/xxchain/finite_correlator.hpp"
#include "xxff/xxchain/formfactor.hpp"
#include "xxff/xxchain/momentum_set.hpp"

#include <cmath>
#include <numbers>

using namespace xxff;
using namespace xxff::xxchain;

TEST_CASE("chain spec validation") {
  CHECK_NOTHROW((ChainSpec{8, 4}.validate()));
  CHECK_THROWS_AS((ChainSpec{7, 3}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((ChainSpec{8, 9}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((ChainSpec{0, 0}.validate()), std::invalid_argument);
  CHECK((ChainSpec{6, 3}.canonical_setup()));
  CHECK_FALSE((ChainSpec{8, 4}.canonical_setup()));
}

TEST_CASE("momentum sets") {
  CHECK(sector_grid(3) == MomentumGrid::Integer);
  CHECK(sector_grid(4) == MomentumGrid::HalfInteger);
  const MomentumSet s(8, MomentumGrid::Integer, {-1, 0, 1});
  CHECK(s.indices() == std::vector<int>{0, 1, 7});
  CHECK(s.total_momentum_twice() == 0);
  CHECK(s.energy() == doctest::Approx(4.0 + 8.0 * std::cos(std::numbers::pi / 4)));
  CHECK_THROWS_AS(MomentumSet(8, MomentumGrid::Integer, {1, 9}), std::invalid_argument);
  const auto g = ground_state_momenta({8, 4}, Sector::Full);
  CHECK(g.grid() == MomentumGrid::HalfInteger);
  CHECK(g.twice_indices() == std::vector<int>{1, 3, 13, 15});
  CHECK(centred_window(3, MomentumGrid::Integer) == std::vector<int>{-1, 0, 1});
}

TEST_CASE("formfactor preconditions") {
  const MomentumSet p(6, MomentumGrid::Integer, {-1, 0, 1});
  const MomentumSet same_grid(6, MomentumGrid::Integer, {0, 1});
  const MomentumSet q(6, MomentumGrid::HalfInteger, {-1, 0});
  CHECK_THROWS_AS(formfactor(p, same_grid), GridMismatch);
  CHECK_THROWS(formfactor(p, MomentumSet(6, MomentumGrid::HalfInteger, {0})));
  CHECK(std::isfinite(std::abs(formfactor(p, q))));
  CHECK_THROWS_AS(shifted_ground_formfactor({16, 8}, 2), std::out_of_range);
}

TEST_CASE("single-particle formfactor is L^{-1/2} in magnitude") {
  for (int L : {4, 6, 10}) {
    const MomentumSet p(L, MomentumGrid::Integer, {0});
    const MomentumSet empty(L, MomentumGrid::HalfInteger, {});
    CHECK(std::abs(formfactor(p, empty)) == doctest::Approx(1.0 / std::sqrt(L)).epsilon(1e-14));
  }
}

TEST_CASE("product formula against exact diagonalization") {
  for (int L : {4, 6, 8}) {
    for (int M = 1; M <= L; ++M) {
      const auto cmp = compare_with_ed(L, M);
      CAPTURE(L);
      CAPTURE(M);
      CHECK(cmp.pairs > 0);
      CHECK(cmp.max_abs_deviation <= 1e-10);
      CHECK(cmp.max_completeness_error_formula <= 1e-12);
      CHECK(cmp.max_completeness_error_ed <= 1e-12);
    }
  }
}

TEST_CASE("single ED eigenstate matrix elements") {
  const ChainSpec spec{6, 3};
  const auto p = ground_state_momenta(spec, Sector::Full);
  const auto q = ground_state_momenta(spec, Sector::Reduced);
  CHECK(std::abs(ed_oracle_formfactor(spec, p, q)) ==
        doctest::Approx(std::abs(formfactor(p, q))).epsilon(1e-10));
}

TEST_CASE("finite correlator against the ED ground state") {
  for (auto [L, M] : {std::pair{8, 4}, std::pair{8, 3}, std::pair{10, 5}}) {
    const ChainSpec spec{L, M};
    const EdSector sector(L, M);
    const auto idx = sector.matching(ground_state_momenta(spec, Sector::Full));
    REQUIRE(idx.size() == 1);
    for (int x = 1; x < L / 2; ++x) {
      CAPTURE(L);
      CAPTURE(x);
      CHECK(finite_correlator(spec, x) == doctest::Approx(oracle::ed_correlator(sector, idx[0], x)).epsilon(1e-10));
    }
  }
  CHECK_THROWS(finite_correlator({16, 8}, 8));
}

TEST_CASE("finite correlator approaches the thermodynamic limit") {
  const ChainSpec spec{2048, 1024};
  double worst = 0.0;
  for (int x = 1; x <= 32; ++x) {
    worst = std::max(worst, std::fabs(finite_correlator(spec, x) / toeplitz::exact_G(x) - 1.0));
  }
  // The leading correction is the chord factor (pi x / L)^2 / 12 ~ 2e-4 at x = 32.
  CHECK(worst <= 2.5e-4);
}

TEST_CASE("shifted formfactors: phase-stripped ratio sign") {
  // psi_m / psi_0 with the phase i^{M-1} e^{i sum q} removed is real; its
  // sign is (-1)^{m(m-1)/2 + m(M-m)} in this gauge.
  for (int L : {64, 128}) {
    const ChainSpec spec{L, L / 2};
    const auto base = shifted_ground_parts(spec, 0);
    for (int m = 1; m <= 3; ++m) {
      const auto parts = shifted_ground_parts(spec, m);
      const int e = m * (m - 1) / 2 + m * (spec.M - m);
      CHECK(parts.sign * base.sign == (e % 2 == 0 ? 1 : -1));
    }
  }
}

TEST_CASE("particle-hole sets") {
  const ChainSpec spec{16, 8};
  ParticleHoleConfig cfg;
  cfg.m = 0;
  cfg.right = {{1}, {0}};
  const auto s = particle_hole_set(spec, cfg);
  const auto base = shifted_ground_set(spec, 0);
  CHECK(s.size() == base.size());
  CHECK(s != base);
  ParticleHoleConfig bad;
  bad.right = {{0}, {0}};
  CHECK_THROWS_AS(particle_hole_formfactor(spec, bad), std::invalid_argument);
}
