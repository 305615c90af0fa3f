#pragma once

#include <string>
#include <utility>
#include <vector>

#include "twoabs/module.hpp"
#include "twoabs/ring.hpp"

namespace twoabs {

// Fractions x/s (x in the carrier, s in S) are stored at pair index x*|R| + s.
// Two fractions x/s, y/t are identified when u(t x - s y) = 0 for some u in S;
// classes are numbered by their least pair in lexicographic order.

struct LocalizedRing {
  RingPtr ring;
  RingHom canonical;  // r -> r/1
  MultSet S;
  std::vector<Index> class_of;                          // pair index -> class (kNoIndex when s not in S)
  std::vector<std::pair<Index, Index>> representative;  // class -> least (r, s)
  bool collapsed = false;                               // 0 in S: the zero ring

  Index fraction(Index r, Index s) const { return class_of.at(r * S.ring()->size() + s); }
};

struct LocalizedModule {
  ModulePtr module;
  ModuleHom canonical;  // m -> m/1, over the ring's canonical map
  std::vector<Index> class_of;
  std::vector<std::pair<Index, Index>> representative;
  std::size_t ring_size = 0;

  Index fraction(Index m, Index s) const { return class_of.at(m * ring_size + s); }
};

namespace detail {

/// Groups fractions of a carrier with addition `add`, negation `neg` and
/// action `act(r, x)` into classes.
template <class Add, class Neg, class Act>
inline void fraction_classes(std::size_t carrier, Index zero, const MultSet& S, Add add, Neg neg, Act act,
                             std::vector<Index>& class_of, std::vector<std::pair<Index, Index>>& reps) {
  const FiniteRing& R = *S.ring();
  const auto svals = S.members().members();
  class_of.assign(carrier * R.size(), kNoIndex);
  reps.clear();
  for (Index x = 0; x < carrier; ++x)
    for (Index s : svals) {
      if (class_of[x * R.size() + s] != kNoIndex) continue;
      const Index c = static_cast<Index>(reps.size());
      reps.emplace_back(x, s);
      class_of[x * R.size() + s] = c;
      for (Index y = x; y < carrier; ++y)
        for (Index t : svals) {
          if (class_of[y * R.size() + t] != kNoIndex) continue;
          const Index diff = add(act(t, x), neg(act(s, y)));
          for (Index u : svals)
            if (act(u, diff) == zero) {
              class_of[y * R.size() + t] = c;
              break;
            }
        }
    }
}

}  // namespace detail

inline LocalizedRing localize_ring(const MultSet& S) {
  const RingPtr& ring = S.ring();
  const FiniteRing& R = *ring;
  LocalizedRing L;
  L.S = S;
  L.collapsed = S.contains(R.zero());
  detail::fraction_classes(
      R.size(), R.zero(), S, [&](Index a, Index b) { return R.add(a, b); }, [&](Index a) { return R.neg(a); },
      [&](Index r, Index x) { return R.mul(r, x); }, L.class_of, L.representative);
  const std::size_t q = L.representative.size();
  std::vector<Index> add(q * q), mul(q * q);
  std::vector<std::string> names(q);
  for (Index c = 0; c < q; ++c) {
    const auto [a, s] = L.representative[c];
    names[c] = s == R.one() ? R.name(a) : R.name(a) + "/" + R.name(s);
    for (Index d = 0; d < q; ++d) {
      const auto [b, t] = L.representative[d];
      add[c * q + d] = L.fraction(R.add(R.mul(a, t), R.mul(b, s)), R.mul(s, t));
      mul[c * q + d] = L.fraction(R.mul(a, b), R.mul(s, t));
    }
  }
  RingOptions opts;
  opts.allow_zero_ring = true;
  opts.axioms_inherited = true;
  L.ring = FiniteRing::make("S^-1 " + R.label(), q, std::move(add), std::move(mul), L.fraction(R.zero(), R.one()),
                            L.fraction(R.one(), R.one()), std::move(names), opts);
  std::vector<Index> canon(R.size());
  for (Index r = 0; r < R.size(); ++r) canon[r] = L.fraction(r, R.one());
  L.canonical = RingHom::make(ring, L.ring, std::move(canon));
  return L;
}

inline LocalizedModule localize_module(const ModulePtr& M, const LocalizedRing& L) {
  const FiniteModule& Mm = *M;
  const FiniteRing& R = *Mm.ring();
  if (!same_ring(M->ring(), L.S.ring())) fail(ErrorKind::InvalidStructure, "module and multiplicative set live over different rings");
  LocalizedModule out;
  out.ring_size = R.size();
  detail::fraction_classes(
      Mm.size(), Mm.zero(), L.S, [&](Index a, Index b) { return Mm.add(a, b); }, [&](Index a) { return Mm.neg(a); },
      [&](Index r, Index x) { return Mm.act(r, x); }, out.class_of, out.representative);
  const std::size_t q = out.representative.size();
  const std::size_t nr = L.ring->size();
  std::vector<Index> add(q * q), act(nr * q);
  std::vector<std::string> names(q);
  for (Index c = 0; c < q; ++c) {
    const auto [x, s] = out.representative[c];
    names[c] = s == R.one() ? Mm.name(x) : Mm.name(x) + "/" + R.name(s);
    for (Index d = 0; d < q; ++d) {
      const auto [y, t] = out.representative[d];
      add[c * q + d] = out.fraction(Mm.add(Mm.act(t, x), Mm.act(s, y)), R.mul(s, t));
    }
    for (Index k = 0; k < nr; ++k) {
      const auto [a, t] = L.representative[k];
      act[k * q + c] = out.fraction(Mm.act(a, x), R.mul(t, s));
    }
  }
  ModuleOptions opts;
  opts.axioms_inherited = true;
  out.module = FiniteModule::make("S^-1 " + Mm.label(), L.ring, q, std::move(add), std::move(act),
                                  out.fraction(Mm.zero(), R.one()), std::move(names), opts);
  std::vector<Index> canon(Mm.size());
  for (Index x = 0; x < Mm.size(); ++x) canon[x] = out.fraction(x, R.one());
  out.canonical = ModuleHom::make(L.canonical, M, out.module, std::move(canon));
  return out;
}

/// S^-1 F = {x/s : x in F, s in S}.
inline Submodule localize_submodule(const LocalizedModule& LM, const MultSet& S, const Submodule& F) {
  Subset s(LM.module->size());
  F.members().for_each([&](Index x) { S.members().for_each([&](Index t) { s.insert(LM.fraction(x, t)); }); });
  return Submodule::of(LM.module, std::move(s));
}

/// S^-1 I = {i/s : i in I, s in S}.
inline Ideal localize_ideal(const LocalizedRing& L, const Ideal& I) {
  Subset s(L.ring->size());
  I.members().for_each([&](Index i) { L.S.members().for_each([&](Index t) { s.insert(L.fraction(i, t)); }); });
  return Ideal::of(L.ring, std::move(s));
}

}  // namespace twoabs
