#include <gtest/gtest.h>

#include "twoabs/twoabs.hpp"

using namespace twoabs;

namespace {

std::vector<ModulePtr> module_family() {
  std::vector<ModulePtr> out;
  for (int n = 2; n <= 12; ++n) out.push_back(regular_module(mk_zmod(n)));
  for (int a = 2; a <= 4; ++a)
    for (int b = a; b <= 4; ++b) out.push_back(regular_module(product_ring(*mk_zmod(a), *mk_zmod(b))));
  for (auto [n, d] : {std::pair{4, 2}, {6, 3}, {8, 4}, {9, 3}, {12, 6}}) {
    auto R = mk_zmod(n), Q = mk_zmod(d);
    std::vector<Index> map(n);
    for (int r = 0; r < n; ++r) map[r] = r % d;
    out.push_back(direct_sum(*regular_module(R), *restrict_scalars(*regular_module(Q), RingHom::make(R, Q, map))));
  }
  return out;
}

std::vector<ModulePtr> random_modules(std::uint64_t seed, std::size_t count) {
  std::vector<ModulePtr> out;
  for (const auto& spec : verify::expand_family("random:" + std::to_string(count), seed))
    out.push_back(verify::Instance(spec, Budget{}).M);
  return out;
}

template <class Fn>
void for_each_proper(const ModulePtr& M, Fn fn) {
  for (const auto& F : enumerate_submodules(M))
    if (F.is_proper()) fn(F);
}

}  // namespace

TEST(Property, PrimeImpliesTwoAbsorbing) {
  for (const auto& M : module_family())
    for_each_proper(M, [&](const Submodule& F) {
      if (is_prime_submodule(F).holds) {
        EXPECT_TRUE(is_2absorbing_submodule(F).holds) << M->label();
      }
    });
  for (int n = 2; n <= 30; ++n)
    for (const auto& I : enumerate_ideals(mk_zmod(n)))
      if (I.is_proper() && is_prime_ideal(I).holds) {
        EXPECT_TRUE(is_2absorbing_ideal(I).holds) << n;
      }
}

TEST(Property, IntersectionOfTwoPrimesIsTwoAbsorbing) {
  for (const auto& M : module_family()) {
    std::vector<Submodule> primes;
    for_each_proper(M, [&](const Submodule& F) {
      if (is_prime_submodule(F).holds) primes.push_back(F);
    });
    for (std::size_t i = 0; i < primes.size(); ++i)
      for (std::size_t j = i + 1; j < primes.size(); ++j)
        EXPECT_TRUE(is_2absorbing_submodule(submodule_intersection(primes[i], primes[j])).holds) << M->label();
  }
}

TEST(Property, ResidualOfTwoAbsorbingIsTwoAbsorbing) {
  for (const auto& M : module_family())
    for_each_proper(M, [&](const Submodule& F) {
      if (is_2absorbing_submodule(F).holds) {
        EXPECT_TRUE(is_2absorbing_ideal(residual_ideal(F)).holds) << M->label();
      }
    });
}

TEST(Property, CyclicModulesReduceToIdeals) {
  for (const auto& M : module_family()) {
    if (!is_cyclic(*M).holds) continue;
    for_each_proper(M, [&](const Submodule& F) {
      EXPECT_EQ(is_2absorbing_submodule(F).holds, is_2absorbing_ideal(residual_ideal(F)).holds) << M->label();
    });
  }
}

TEST(Property, QuotientByItselfPreservesTwoAbsorption) {
  for (const auto& M : module_family())
    for_each_proper(M, [&](const Submodule& F) {
      const auto Q = quotient_module(F);
      EXPECT_EQ(is_2absorbing_submodule(F).holds, is_2absorbing_submodule(Submodule::zero(Q.module)).holds)
          << M->label();
      EXPECT_EQ(Q.module->size() * F.size(), M->size());
    });
}

TEST(Property, WitnessesAreGenuine) {
  for (const auto& M : module_family())
    for_each_proper(M, [&](const Submodule& F) {
      const auto v = is_2absorbing_submodule(F);
      if (v.holds) return;
      const FiniteRing& R = *M->ring();
      const Index a = v.at("a"), b = v.at("b"), m = v.at("m");
      EXPECT_TRUE(F.contains(M->act(R.mul(a, b), m)));
      EXPECT_FALSE(F.contains(M->act(a, m)));
      EXPECT_FALSE(F.contains(M->act(b, m)));
      EXPECT_FALSE(residual_ideal(F).contains(R.mul(a, b)));
    });
}

TEST(Property, LatticeClosedUnderSumAndIntersection) {
  for (const auto& M : random_modules(11, 12)) {
    const auto lattice = enumerate_submodules(M);
    for (const auto& A : lattice)
      for (const auto& B : lattice) {
        const auto s = submodule_sum(A, B), i = submodule_intersection(A, B);
        EXPECT_TRUE(A.members().is_subset_of(s.members()));
        EXPECT_TRUE(i.members().is_subset_of(B.members()));
        EXPECT_EQ(s.size() * i.size(), A.size() * B.size());
      }
  }
}

TEST(Property, RandomModulesPrimeImpliesTwoAbsorbing) {
  for (std::uint64_t seed : {3u, 5u, 8u})
    for (const auto& M : random_modules(seed, 10))
      for_each_proper(M, [&](const Submodule& F) {
        if (is_prime_submodule(F).holds) {
          EXPECT_TRUE(is_2absorbing_submodule(F).holds);
        }
        if (is_2absorbing_submodule(F).holds) {
          EXPECT_TRUE(is_2absorbing_ideal(residual_ideal(F)).holds);
        }
      });
}

TEST(Property, RandomAmalgamationsPreserveTwoAbsorption) {
  const auto specs = verify::expand_family("random:12", 21);
  const auto sweep = verify::run_sweep({verify::StatementId::T3_4a, verify::StatementId::L3_3}, specs, {Budget{}, 1});
  for (const auto& s : sweep.statements) {
    EXPECT_TRUE(s.holds()) << verify::tag(s.id);
    EXPECT_GT(s.confirmed, 0u);
  }
}

TEST(Property, AmalgamSizeIsProduct) {
  for (const auto& spec : verify::expand_family("random:10", 4)) {
    verify::Instance inst(spec, Budget{});
    for (const auto& J : inst.ideals("J", inst.R2)) {
      const auto ctx = amalgamated_module(inst.f, J, inst.phi);
      EXPECT_EQ(ctx.ring.ring->size(), inst.R1->size() * J.size());
      EXPECT_EQ(ctx.module->size(), inst.M->size() * ctx.JN.size());
    }
  }
}
