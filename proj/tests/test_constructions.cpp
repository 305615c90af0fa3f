#include <set>

#include <gtest/gtest.h>

#include "oracle.hpp"
#include "twoabs/constructions.hpp"
#include "twoabs/predicates.hpp"

using namespace twoabs;

namespace {

std::set<int> as_set(const Subset& s) {
  std::set<int> out;
  for (Index i : s.members()) out.insert(static_cast<int>(i));
  return out;
}

AmalgContext identity_amalgam(const RingPtr& R, const Ideal& J) {
  auto M = regular_module(R);
  return amalgamated_module(RingHom::identity(R), J, ModuleHom::identity(M));
}

}  // namespace

TEST(Amalgamation, CarrierMatchesOracle) {
  for (int n = 2; n <= 12; ++n) {
    auto R = mk_zmod(n);
    for (const auto& J : enumerate_ideals(R)) {
      const auto ctx = identity_amalgam(R, J);
      const auto want = oracle::zn_amalgamation(n, as_set(J.members()));
      std::set<std::pair<int, int>> ring_pairs, module_pairs;
      for (const auto& [a, b] : ctx.ring.carrier.members()) ring_pairs.insert({int(a), int(b)});
      for (const auto& [a, b] : ctx.carrier.members()) module_pairs.insert({int(a), int(b)});
      EXPECT_EQ(ring_pairs, want) << n;
      EXPECT_EQ(module_pairs, want) << n;
      EXPECT_EQ(ctx.ring.ring->size(), std::size_t(n) * J.size());
      EXPECT_EQ(ctx.module->size(), std::size_t(n) * ctx.JN.size());
    }
  }
}

TEST(Amalgamation, Z6HalfIdeal) {
  auto R = mk_zmod(6);
  const auto ctx = identity_amalgam(R, Ideal::of(R, Subset(6, {0, 3})));
  EXPECT_EQ(ctx.ring.ring->size(), 12u);
  EXPECT_EQ(ctx.module->size(), 12u);
  EXPECT_EQ(ctx.target->size(), 6u);
}

TEST(Amalgamation, ActionIsComponentwise) {
  auto R = mk_zmod(12);
  const auto ctx = identity_amalgam(R, ideal_generated(R, {4}));
  const auto& rc = ctx.ring.carrier;
  for (Index x = 0; x < rc.size(); ++x)
    for (Index y = 0; y < ctx.carrier.size(); ++y) {
      const auto [r, s] = rc[x];
      const auto [m, n] = ctx.carrier[y];
      const auto [m2, n2] = ctx.carrier[ctx.module->act(x, y)];
      EXPECT_EQ(int(m2), int(r * m % 12));
      EXPECT_EQ(int(n2), int(s * n % 12));
    }
}

TEST(Amalgamation, NonIdentityHom) {
  auto A = mk_zmod(6), B = mk_zmod(3);
  auto f = RingHom::make(A, B, {0, 1, 2, 0, 1, 2});
  auto M = regular_module(A), N = regular_module(B);
  auto phi = ModuleHom::make(f, M, N, {0, 1, 2, 0, 1, 2});
  const auto ctx = amalgamated_module(f, Ideal::whole(B), phi);
  EXPECT_EQ(ctx.ring.ring->size(), 18u);
  EXPECT_EQ(ctx.module->size(), 18u);
  EXPECT_EQ(ctx.target->size(), 3u);
  const auto pg = projection_p_gamma(ctx);
  EXPECT_TRUE(pg.hom.is_surjective());
  EXPECT_EQ(pg.kernel.members(), pg.expected_kernel.members());
}

TEST(Amalgamation, TwoAbsorbingTransfers) {
  for (int n = 2; n <= 12; ++n) {
    auto R = mk_zmod(n);
    for (const auto& J : enumerate_ideals(R)) {
      const auto ctx = identity_amalgam(R, J);
      for (const auto& F : enumerate_submodules(ctx.M)) {
        if (!F.is_proper()) continue;
        const auto FJ = amalgam_submodule(ctx, F);
        EXPECT_EQ(FJ.size(), F.size() * ctx.JN.size());
        const int g = n / int(F.size());  // F = (g)
        EXPECT_EQ(is_2absorbing_submodule(FJ).holds, oracle::zn_ideal_2absorbing_formula(g)) << n << " " << g;
      }
    }
  }
}

TEST(Amalgamation, ZeroInZ30NeverTwoAbsorbing) {
  auto R = mk_zmod(30);
  for (const auto& J : enumerate_ideals(R)) {
    const auto ctx = identity_amalgam(R, J);
    EXPECT_FALSE(is_2absorbing_submodule(amalgam_submodule(ctx, Submodule::zero(ctx.M)), Budget{0, true}).holds);
  }
}

TEST(Amalgamation, PGammaMechanics) {
  auto R = mk_zmod(12);
  for (const auto& J : enumerate_ideals(R)) {
    const auto ctx = identity_amalgam(R, J);
    const auto pg = projection_p_gamma(ctx);
    EXPECT_TRUE(pg.hom.is_surjective());
    EXPECT_EQ(pg.kernel.members(), pg.expected_kernel.members());
    for (const auto& N2 : enumerate_submodules(ctx.target)) {
      const auto bar = bar_submodule(ctx, N2);
      const auto img = image_submodule(pg.hom, bar);
      EXPECT_EQ(img.members, N2.members());
      EXPECT_EQ(preimage_submodule(pg.hom, N2).members(), bar.members());
    }
  }
}

TEST(Amalgamation, QuotientMapIsBijective) {
  auto R = mk_zmod(12);
  for (const auto& J : enumerate_ideals(R)) {
    const auto ctx = identity_amalgam(R, J);
    for (const auto& F : enumerate_submodules(ctx.M))
      EXPECT_TRUE(quotient_isomorphism(ctx, F).bijective);
  }
}

TEST(Duplication, CarrierMatchesOracle) {
  for (int n = 2; n <= 12; ++n) {
    auto R = mk_zmod(n);
    for (const auto& J : enumerate_ideals(R)) {
      const auto dup = duplication_module(R, J, regular_module(R));
      EXPECT_TRUE(dup.carrier_matches_definition);
      std::set<std::pair<int, int>> got;
      for (const auto& [a, b] : dup.ctx.carrier.members()) got.insert({int(a), int(b)});
      EXPECT_EQ(got, oracle::zn_duplication(n, as_set(J.members())));
    }
  }
}

TEST(Duplication, BowtieAndBarAreSubmodules) {
  auto R = mk_zmod(8);
  const auto dup = duplication_module(R, ideal_generated(R, {4}), regular_module(R));
  for (const auto& N : enumerate_submodules(dup.ctx.M)) {
    const auto s = dup_submodules(dup, N);
    EXPECT_TRUE(s.bowtie.has_value()) << s.bowtie_error;
    EXPECT_TRUE(s.bar.has_value()) << s.bar_error;
  }
}

TEST(Idealization, MultiplicationRule) {
  auto M = regular_module(mk_zmod(4));
  const auto idz = idealization(M);
  ASSERT_EQ(idz.ring->size(), 16u);
  EXPECT_TRUE(idz.ring->axioms_fully_checked());
  for (int r1 = 0; r1 < 4; ++r1)
    for (int m1 = 0; m1 < 4; ++m1)
      for (int r2 = 0; r2 < 4; ++r2)
        for (int m2 = 0; m2 < 4; ++m2) {
          const Index p = idz.ring->mul(idz.index_of(r1, m1), idz.index_of(r2, m2));
          EXPECT_EQ(p, idz.index_of(r1 * r2 % 4, (r1 * m2 + r2 * m1) % 4));
        }
  // (0, m)^2 = 0
  for (Index m = 0; m < 4; ++m) EXPECT_EQ(idz.ring->mul(idz.index_of(0, m), idz.index_of(0, m)), idz.ring->zero());
}

TEST(Idealization, IdealNeedsIMInF) {
  auto R = mk_zmod(4);
  auto M = regular_module(R);
  const auto idz = idealization(M);
  const Ideal I = ideal_generated(R, {2});
  EXPECT_EQ(idealization_ideal(idz, I, submodule_generated(M, {2})).size(), 4u);
  try {
    idealization_ideal(idz, I, Submodule::zero(M));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::IMNotInF);
  }
}
