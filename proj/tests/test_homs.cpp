#include <gtest/gtest.h>

#include "oracle.hpp"
#include "twoabs/homs.hpp"

using namespace twoabs;

TEST(Homs, RingHomCountsBetweenCyclicRings) {
  for (int m = 2; m <= 12; ++m)
    for (int n = 2; n <= 12; ++n) {
      const auto homs = enumerate_ring_homs(mk_zmod(m), mk_zmod(n));
      EXPECT_EQ(int(homs.size()), oracle::zn_hom_count(m, n)) << m << "->" << n;
      for (const auto& f : homs)
        for (int r = 0; r < m; ++r) EXPECT_EQ(int(f(r)), r % n);
    }
}

TEST(Homs, RingHomsIntoProducts) {
  // Unital homs Z6 -> Z2 x Z3: exactly one, r -> (r mod 2, r mod 3).
  auto P = product_ring(*mk_zmod(2), *mk_zmod(3));
  const auto homs = enumerate_ring_homs(mk_zmod(6), P);
  ASSERT_EQ(homs.size(), 1u);
  for (int r = 0; r < 6; ++r) EXPECT_EQ(int(homs[0](r)), (r % 2) * 3 + r % 3);
  // Z2 x Z2 -> Z2: two projections.
  auto Q = product_ring(*mk_zmod(2), *mk_zmod(2));
  EXPECT_EQ(enumerate_ring_homs(Q, mk_zmod(2)).size(), 2u);
}

TEST(Homs, ModuleHomCounts) {
  for (int n = 2; n <= 12; ++n) {
    auto R = mk_zmod(n);
    auto M = regular_module(R);
    EXPECT_EQ(int(enumerate_module_homs(RingHom::identity(R), M, M).size()), oracle::zn_module_hom_count(n, n));
  }
  // Z6-linear maps Z6 -> Z3 (restricted along Z6 -> Z3): three of them.
  auto A = mk_zmod(6), B = mk_zmod(3);
  auto f = RingHom::make(A, B, {0, 1, 2, 0, 1, 2});
  EXPECT_EQ(int(enumerate_module_homs(f, regular_module(A), regular_module(B)).size()),
            oracle::zn_module_hom_count(6, 3));
}

TEST(Homs, ModuleHomValidation) {
  auto R = mk_zmod(4);
  auto M = regular_module(R);
  try {
    ModuleHom::make(RingHom::identity(R), M, M, {0, 1, 1, 0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotAHom);
  }
}

TEST(Homs, ImageAndPreimage) {
  auto A = mk_zmod(6), B = mk_zmod(3);
  auto f = RingHom::make(A, B, {0, 1, 2, 0, 1, 2});
  auto M = regular_module(A), N = regular_module(B);
  auto phi = ModuleHom::make(f, M, N, {0, 1, 2, 0, 1, 2});
  const auto img = image_submodule(phi, submodule_generated(M, {2}));
  EXPECT_TRUE(img.is_submodule);
  EXPECT_TRUE(img.members.is_full());
  EXPECT_EQ(preimage_submodule(phi, Submodule::zero(N)).members(), Subset(6, {0, 3}));
}
