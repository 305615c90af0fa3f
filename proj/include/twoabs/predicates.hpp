#pragma once

#include <optional>
#include <vector>

#include "twoabs/budget.hpp"
#include "twoabs/module.hpp"
#include "twoabs/ring.hpp"
#include "twoabs/verdict.hpp"

namespace twoabs {

/// a m in F implies a in (F :_R M) or m in F. Witness (a, m).
inline Verdict is_prime_submodule(const Submodule& F) {
  if (!F.is_proper()) fail(ErrorKind::NotProper, "prime test needs a proper submodule");
  const FiniteModule& M = *F.module();
  const FiniteRing& R = *M.ring();
  const Ideal colon = residual_ideal(F);
  std::uint64_t iters = 0;
  for (Index a = 0; a < R.size(); ++a) {
    if (colon.contains(a)) continue;
    for (Index m = 0; m < M.size(); ++m) {
      ++iters;
      if (F.contains(M.act(a, m)) && !F.contains(m))
        return Verdict::no({ring_entry(R, "a", a), module_entry(M, "m", m)}, iters);
    }
  }
  return Verdict::yes(iters);
}

/// a b m in F implies a b in (F :_R M) or a m in F or b m in F.
/// Witness (a, b, m), least in lexicographic order.
inline Verdict is_2absorbing_submodule(const Submodule& F, const Budget& budget = {}) {
  if (!F.is_proper()) fail(ErrorKind::NotProper, "2-absorbing test needs a proper submodule");
  const FiniteModule& M = *F.module();
  const FiniteRing& R = *M.ring();
  const Index n = static_cast<Index>(R.size());
  const Index m = static_cast<Index>(M.size());
  budget.require(std::uint64_t{n} * n * m, "2-absorbing test of a submodule of " + M.label());
  const Ideal colon = residual_ideal(F);
  const Subset& in_F = F.members();
  std::uint64_t iters = 0;
  for (Index a = 0; a < n; ++a)
    for (Index b = a; b < n; ++b) {
      const Index ab = R.mul(a, b);
      if (colon.contains(ab)) continue;
      for (Index x = 0; x < m; ++x) {
        ++iters;
        if (!in_F.contains(M.act(ab, x))) continue;
        if (in_F.contains(M.act(a, x)) || in_F.contains(M.act(b, x))) continue;
        return Verdict::no({ring_entry(R, "a", a), ring_entry(R, "b", b), module_entry(M, "m", x)}, iters);
      }
    }
  return Verdict::yes(iters);
}

struct PrimaryVerdict {
  Verdict verdict;
  Ideal radical;  // radical of (F :_R M)
};

/// a m in F with m outside F implies a in rad(F :_R M). Witness (a, m).
inline PrimaryVerdict is_primary_submodule(const Submodule& F) {
  if (!F.is_proper()) fail(ErrorKind::NotProper, "primary test needs a proper submodule");
  const FiniteModule& M = *F.module();
  const FiniteRing& R = *M.ring();
  Ideal rad = ideal_radical(residual_ideal(F));
  std::uint64_t iters = 0;
  for (Index a = 0; a < R.size(); ++a) {
    if (rad.contains(a)) continue;
    for (Index m = 0; m < M.size(); ++m) {
      ++iters;
      if (!F.contains(m) && F.contains(M.act(a, m)))
        return {Verdict::no({ring_entry(R, "a", a), module_entry(M, "m", m)}, iters), std::move(rad)};
    }
  }
  return {Verdict::yes(iters), std::move(rad)};
}

struct RadicalResult {
  Submodule radical;
  std::size_t primes_containing = 0;  // 0 means the empty-intersection convention returned M
};

/// Intersection of the prime submodules containing F (M when there are none).
inline RadicalResult radical_submodule(const Submodule& F, const Budget& budget = {}) {
  if (!F.is_proper()) fail(ErrorKind::NotProper, "radical needs a proper submodule");
  const ModulePtr& M = F.module();
  Subset acc = Subset::full(M->size());
  std::size_t count = 0;
  for (const auto& P : enumerate_submodules(M, budget)) {
    if (!P.is_proper() || !F.members().is_subset_of(P.members())) continue;
    if (!is_prime_submodule(P).holds) continue;
    acc = acc & P.members();
    ++count;
  }
  return {Submodule::of(M, std::move(acc)), count};
}

/// Generator m with R m = M, if any.
inline std::optional<Index> cyclic_generator(const FiniteModule& M) {
  const FiniteRing& R = *M.ring();
  for (Index x = 0; x < M.size(); ++x) {
    Subset c(M.size());
    for (Index r = 0; r < R.size(); ++r) c.insert(M.act(r, x));
    if (c.is_full()) return x;
  }
  return std::nullopt;
}

inline Verdict is_cyclic(const FiniteModule& M) {
  if (auto g = cyclic_generator(M)) return Verdict::yes();
  return Verdict::no({});
}

/// Every submodule F equals (F :_R M) M. On failure the witness lists the
/// members of the first offending submodule in lattice order.
inline Verdict is_multiplication_module(const ModulePtr& M, const Budget& budget = {}) {
  std::uint64_t iters = 0;
  for (const auto& F : enumerate_submodules(M, budget)) {
    ++iters;
    const Submodule IM = ideal_times_module(residual_ideal(F), M);
    if (IM.members() != F.members()) {
      Witness w;
      F.members().for_each([&](Index x) { w.push_back(module_entry(*M, "member", x)); });
      return Verdict::no(std::move(w), iters);
    }
  }
  return Verdict::yes(iters);
}

}  // namespace twoabs
