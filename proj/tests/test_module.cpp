#include <set>

#include <gtest/gtest.h>

#include "oracle.hpp"
#include "twoabs/module.hpp"
#include "twoabs/predicates.hpp"

using namespace twoabs;

namespace {

ModulePtr sum_module(int n, int d) {
  auto Rn = mk_zmod(n), Rd = mk_zmod(d);
  std::vector<Index> q(n);
  for (int r = 0; r < n; ++r) q[r] = r % d;
  auto B = restrict_scalars(*regular_module(Rd), RingHom::make(Rn, Rd, q));
  return direct_sum(*regular_module(Rn), *B);
}

// Subgroups of Z_n x Z_d generated by at most two elements, as sets of x*d+y.
std::set<std::set<int>> subgroups(int n, int d) {
  std::set<std::set<int>> out;
  const int m = n * d;
  for (int g = 0; g < m; ++g)
    for (int h = g; h < m; ++h) {
      std::set<int> s;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          const int x = (i * (g / d) + j * (h / d)) % n;
          const int y = (i * (g % d) + j * (h % d)) % d;
          s.insert(x * d + y);
        }
      out.insert(s);
    }
  return out;
}

std::set<int> as_set(const Subset& s) {
  std::set<int> out;
  for (Index i : s.members()) out.insert(static_cast<int>(i));
  return out;
}

}  // namespace

TEST(Module, RegularModuleMatchesRing) {
  auto R = mk_zmod(10);
  auto M = regular_module(R);
  EXPECT_TRUE(is_regular_module(*M));
  for (Index r = 0; r < 10; ++r)
    for (Index x = 0; x < 10; ++x) EXPECT_EQ(M->act(r, x), R->mul(r, x));
}

TEST(Module, DirectSumAction) {
  auto M = sum_module(12, 6);
  ASSERT_EQ(M->size(), 72u);
  for (int r = 0; r < 12; ++r)
    for (int x = 0; x < 12; ++x)
      for (int y = 0; y < 6; ++y) EXPECT_EQ(M->act(r, x * 6 + y), Index((r * x % 12) * 6 + r * y % 6));
  EXPECT_EQ(M->name(1), "(0,1)");
}

TEST(Module, RejectsBadAction) {
  auto R = mk_zmod(2);
  // Z2 acting on Z2 with 1.x = 0 is not unital.
  std::vector<Index> add{0, 1, 1, 0}, act{0, 0, 0, 0};
  EXPECT_THROW(FiniteModule::make("bad", R, 2, add, act, 0), Error);
}

TEST(Submodule, LatticeMatchesSubgroups) {
  for (auto [n, d] : std::vector<std::pair<int, int>>{{4, 2}, {6, 2}, {6, 3}, {8, 2}, {12, 6}}) {
    auto M = sum_module(n, d);
    std::set<std::set<int>> got;
    for (const auto& F : enumerate_submodules(M)) got.insert(as_set(F.members()));
    EXPECT_EQ(got, subgroups(n, d)) << n << "," << d;
  }
}

TEST(Submodule, LatticeSortedBySizeThenMembers) {
  const auto L = enumerate_submodules(sum_module(6, 2));
  for (std::size_t i = 1; i < L.size(); ++i) EXPECT_TRUE(L[i - 1].members() < L[i].members());
  EXPECT_EQ(L.front().size(), 1u);
  EXPECT_EQ(L.back().size(), 12u);
}

TEST(Submodule, RejectsNonClosed) {
  auto M = regular_module(mk_zmod(6));
  EXPECT_THROW(Submodule::of(M, Subset(6, {0, 1})), Error);
  EXPECT_THROW(Submodule::of(M, Subset(6, {2, 4})), Error);
}

TEST(Predicate, TwoAbsorbingOnSumsMatchesOracle) {
  for (auto [n, d] : std::vector<std::pair<int, int>>{{4, 2}, {6, 2}, {6, 3}, {8, 2}, {12, 6}, {9, 3}}) {
    auto M = sum_module(n, d);
    for (const auto& F : enumerate_submodules(M)) {
      if (!F.is_proper()) continue;
      const auto members = as_set(F.members());
      oracle::SumModule O{n, d, [&](int x, int y) { return members.count(x * d + y) > 0; }};
      EXPECT_EQ(is_2absorbing_submodule(F).holds, O.is_2absorbing()) << n << "," << d;
      EXPECT_EQ(is_prime_submodule(F).holds, O.is_prime()) << n << "," << d;
    }
  }
}

TEST(Predicate, RegularModuleWitnessMatchesOracle) {
  for (int n = 2; n <= 30; ++n) {
    auto M = regular_module(mk_zmod(n));
    for (int g : oracle::divisors(n)) {
      if (g == 1) continue;
      const auto F = submodule_generated(M, {Index(g % n)});
      const Verdict v = is_2absorbing_submodule(F);
      const auto w = oracle::zn_2absorbing_witness(n, g);
      ASSERT_EQ(v.holds, !w.has_value()) << n << " " << g;
      if (w) {
        EXPECT_EQ(v.at("a"), Index((*w)[0]));
        EXPECT_EQ(v.at("b"), Index((*w)[1]));
        EXPECT_EQ(v.at("m"), Index((*w)[2]));
      }
    }
  }
}

TEST(Predicate, Z30ZeroWitness) {
  auto M = regular_module(mk_zmod(30));
  const Verdict v = is_2absorbing_submodule(Submodule::zero(M));
  ASSERT_FALSE(v.holds);
  ASSERT_EQ(v.witness.size(), 3u);
  EXPECT_EQ(v.witness[0], (WitnessEntry{"a", 2, "2"}));
  EXPECT_EQ(v.witness[1], (WitnessEntry{"b", 3, "3"}));
  EXPECT_EQ(v.witness[2], (WitnessEntry{"m", 5, "5"}));
}

TEST(Predicate, Z12PlusZ6Pattern) {
  auto M = sum_module(12, 6);
  const auto F = Submodule::zero(M);
  const Verdict v = is_2absorbing_submodule(F);
  ASSERT_FALSE(v.holds);
  const Index m = *M->find("(0,1)");
  EXPECT_EQ(M->act(6, m), M->zero());
  EXPECT_NE(M->act(2, m), M->zero());
  EXPECT_NE(M->act(3, m), M->zero());
  EXPECT_FALSE(residual_ideal(F).contains(6));
}

TEST(Predicate, PrimaryReportsRadical) {
  auto M = regular_module(mk_zmod(8));
  const auto p = is_primary_submodule(Submodule::zero(M));
  EXPECT_TRUE(p.verdict.holds);
  EXPECT_EQ(as_set(p.radical.members()), oracle::zn_ideal(8, 2));
  EXPECT_FALSE(is_primary_submodule(Submodule::zero(regular_module(mk_zmod(6)))).verdict.holds);
}

TEST(Predicate, ProperRequired) {
  auto M = regular_module(mk_zmod(6));
  try {
    is_2absorbing_submodule(Submodule::whole(M));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotProper);
  }
}

TEST(Residual, ColonAndResidualByIdeal) {
  auto R = mk_zmod(12);
  auto M = regular_module(R);
  const auto F = submodule_generated(M, {4});
  EXPECT_EQ(as_set(residual_ideal(F).members()), oracle::zn_ideal(12, 4));
  EXPECT_EQ(as_set(colon_by_element(F, 2).members()), oracle::zn_ideal(12, 2));
  EXPECT_EQ(as_set(residual_by_ideal(F, ideal_generated(R, {2})).members()), oracle::zn_ideal(12, 2));
  EXPECT_EQ(as_set(ideal_times_module(ideal_generated(R, {3}), M).members()), oracle::zn_ideal(12, 3));
}

TEST(Residual, ZeroDivisorsOnQuotient) {
  auto M = regular_module(mk_zmod(6));
  const auto F = submodule_generated(M, {3});
  // r kills some m outside (3) iff 3 | r m for some m not in (3), i.e. r in (3).
  EXPECT_EQ(as_set(zero_divisors_on_quotient(F)), (std::set<int>{0, 3}));
}

TEST(Module, CyclicAndMultiplication) {
  EXPECT_TRUE(is_cyclic(*regular_module(mk_zmod(12))).holds);
  EXPECT_FALSE(is_cyclic(*sum_module(6, 2)).holds);
  EXPECT_TRUE(is_multiplication_module(regular_module(mk_zmod(12))).holds);
  EXPECT_FALSE(is_multiplication_module(sum_module(4, 2)).holds);
}

TEST(Module, QuotientSizes) {
  auto M = sum_module(12, 6);
  for (const auto& F : enumerate_submodules(M)) {
    const auto Q = quotient_module(F);
    EXPECT_EQ(Q.module->size() * F.size(), M->size());
    EXPECT_TRUE(Q.projection.is_surjective());
    EXPECT_EQ(Q.projection.kernel().members(), F.members());
  }
}

TEST(Chain, UnionAndIntersection) {
  auto M = regular_module(mk_zmod(8));
  const auto a = submodule_generated(M, {4}), b = submodule_generated(M, {2});
  EXPECT_EQ(union_chain({a, b}).members(), b.members());
  EXPECT_EQ(intersect_chain({a, b}).members(), a.members());
  EXPECT_THROW(union_chain({a, submodule_generated(M, {1})}), Error);
  auto M12 = regular_module(mk_zmod(12));
  try {
    validate_chain({submodule_generated(M12, {4}), submodule_generated(M12, {6})});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotAChain);
  }
}
