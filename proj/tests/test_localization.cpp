#include <set>

#include <gtest/gtest.h>

#include "oracle.hpp"
#include "twoabs/localization.hpp"
#include "twoabs/predicates.hpp"

using namespace twoabs;

namespace {

std::set<int> as_set(const Subset& s) {
  std::set<int> out;
  for (Index i : s.members()) out.insert(static_cast<int>(i));
  return out;
}

std::vector<int> ints(const MultSet& S) {
  std::vector<int> v;
  for (Index i : S.members().members()) v.push_back(int(i));
  return v;
}

}  // namespace

TEST(Localization, Z12AtPowersOfTwo) {
  auto R = mk_zmod(12);
  const auto S = MultSet::of(R, Subset(12, {1, 2, 4, 8}));
  const auto L = localize_ring(S);
  EXPECT_EQ(L.ring->size(), 3u);
  EXPECT_EQ(as_set(L.canonical.kernel().members()), (std::set<int>{0, 3, 6, 9}));
  EXPECT_TRUE(L.canonical.is_surjective());
  EXPECT_FALSE(L.collapsed);
}

TEST(Localization, UnitsGiveIsomorphism) {
  for (int n = 2; n <= 12; ++n) {
    auto R = mk_zmod(n);
    std::vector<Index> units;
    for (int u = 1; u < n; ++u)
      if (std::gcd(u, n) == 1) units.push_back(u);
    const auto L = localize_ring(MultSet::generated(R, units));
    EXPECT_EQ(L.ring->size(), std::size_t(n));
    EXPECT_TRUE(L.canonical.is_injective());
    EXPECT_TRUE(L.canonical.is_surjective());
  }
}

TEST(Localization, AllSmallMultsetsMatchOracle) {
  for (int n = 2; n <= 12; ++n) {
    auto R = mk_zmod(n);
    for (const auto& S : enumerate_small_multsets(R)) {
      const auto L = localize_ring(S);
      const auto s = ints(S);
      EXPECT_EQ(int(L.ring->size()), oracle::zn_localization_size(n, s)) << n;
      EXPECT_EQ(as_set(L.canonical.kernel().members()), oracle::zn_localization_kernel(n, s)) << n;
      // Finite rings: R -> S^-1 R is onto.
      EXPECT_TRUE(L.canonical.is_surjective());
    }
  }
}

TEST(Localization, ZeroInSCollapses) {
  auto R = mk_zmod(6);
  const auto L = localize_ring(MultSet::generated(R, {0}));
  EXPECT_TRUE(L.collapsed);
  EXPECT_EQ(L.ring->size(), 1u);
}

TEST(Localization, FractionArithmetic) {
  auto R = mk_zmod(12);
  const auto L = localize_ring(MultSet::generated(R, {2}));
  // 1/2 * 2/1 = 1
  EXPECT_EQ(L.ring->mul(L.fraction(1, 2), L.fraction(2, 1)), L.ring->one());
  // 3/1 = 0
  EXPECT_EQ(L.fraction(3, 1), L.ring->zero());
  EXPECT_EQ(L.fraction(1, 2), L.fraction(2, 4));
}

TEST(Localization, ModuleOfSum) {
  auto Rn = mk_zmod(12), Rd = mk_zmod(6);
  std::vector<Index> q(12);
  for (int r = 0; r < 12; ++r) q[r] = r % 6;
  auto M = direct_sum(*regular_module(Rn), *restrict_scalars(*regular_module(Rd), RingHom::make(Rn, Rd, q)));
  const auto S = MultSet::generated(Rn, {2});
  const auto L = localize_ring(S);
  const auto LM = localize_module(M, L);
  // Z12 localizes to Z3, Z6 to Z3.
  EXPECT_EQ(LM.module->size(), 9u);
  std::set<int> ker;
  for (int x = 0; x < 12; ++x)
    for (int y = 0; y < 6; ++y)
      if (x % 3 == 0 && y % 3 == 0) ker.insert(x * 6 + y);
  EXPECT_EQ(as_set(LM.canonical.kernel().members()), ker);
}

TEST(Localization, SubmoduleAndIdeal) {
  auto R = mk_zmod(12);
  const auto S = MultSet::generated(R, {2});
  const auto L = localize_ring(S);
  auto M = regular_module(R);
  const auto LM = localize_module(M, L);
  const auto F = submodule_generated(M, {3});
  EXPECT_EQ(localize_submodule(LM, S, F).size(), 1u);
  const auto G = submodule_generated(M, {2});
  EXPECT_EQ(localize_submodule(LM, S, G).size(), 3u);
  EXPECT_EQ(localize_ideal(L, ideal_generated(R, {4})).size(), 3u);
}

TEST(Localization, RejectsBadS) {
  auto R = mk_zmod(12);
  try {
    MultSet::of(R, Subset(12, {1, 3}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SNotMultClosed);
  }
}
