#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "twoabs/budget.hpp"
#include "twoabs/module.hpp"
#include "twoabs/ring.hpp"

namespace twoabs {

/// Element set of a construction living inside a product A x B. Members are
/// kept in lexicographic order and `index_of` inverts the enumeration.
class PairCarrier {
 public:
  PairCarrier() = default;

  PairCarrier(std::size_t first_size, std::size_t second_size, std::vector<std::pair<Index, Index>> pairs)
      : first_size_(first_size), second_size_(second_size), members_(std::move(pairs)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    lookup_.assign(first_size_ * second_size_, kNoIndex);
    for (Index i = 0; i < members_.size(); ++i) lookup_[members_[i].first * second_size_ + members_[i].second] = i;
  }

  std::size_t size() const noexcept { return members_.size(); }
  std::size_t first_size() const noexcept { return first_size_; }
  std::size_t second_size() const noexcept { return second_size_; }
  const std::vector<std::pair<Index, Index>>& members() const noexcept { return members_; }
  const std::pair<Index, Index>& operator[](Index i) const { return members_.at(i); }

  Index index_of(Index a, Index b) const noexcept {
    if (a >= first_size_ || b >= second_size_) return kNoIndex;
    return lookup_[a * second_size_ + b];
  }

  bool contains(Index a, Index b) const noexcept { return index_of(a, b) != kNoIndex; }

 private:
  std::size_t first_size_ = 0;
  std::size_t second_size_ = 0;
  std::vector<std::pair<Index, Index>> members_;
  std::vector<Index> lookup_;
};

// ---------------------------------------------------------------------------
// Amalgamated ring R1 |><|^f J

struct AmalgRing {
  RingPtr ring;
  PairCarrier carrier;
  RingHom first_projection;  // (r, f(r)+j) -> r
  Subring scalars;           // f(R1) + J inside R2
  RingHom to_scalars;        // (r, f(r)+j) -> f(r)+j
};

inline AmalgRing amalgamated_ring(const RingHom& f, const Ideal& J) {
  if (!same_ring(J.ring(), f.cod())) fail(ErrorKind::NotAnIdeal, "J must be an ideal of the codomain of f");
  const FiniteRing& A = *f.dom();
  const FiniteRing& B = *f.cod();
  std::vector<std::pair<Index, Index>> pairs;
  for (Index r = 0; r < A.size(); ++r) J.members().for_each([&](Index j) { pairs.emplace_back(r, B.add(f(r), j)); });
  PairCarrier carrier(A.size(), B.size(), std::move(pairs));
  const std::size_t n = carrier.size();
  std::vector<Index> add(n * n), mul(n * n);
  std::vector<std::string> names(n);
  for (Index x = 0; x < n; ++x) {
    const auto [r1, s1] = carrier[x];
    names[x] = "(" + A.name(r1) + "," + B.name(s1) + ")";
    for (Index y = 0; y < n; ++y) {
      const auto [r2, s2] = carrier[y];
      const Index sum = carrier.index_of(A.add(r1, r2), B.add(s1, s2));
      const Index prod = carrier.index_of(A.mul(r1, r2), B.mul(s1, s2));
      if (sum == kNoIndex || prod == kNoIndex)
        fail(ErrorKind::InvalidStructure, "amalgamated carrier not closed", {{"x", x, names[x]}, {"y", y, {}}});
      add[x * n + y] = sum;
      mul[x * n + y] = prod;
    }
  }
  RingOptions opts;
  opts.axioms_inherited = true;
  auto ring = FiniteRing::make(A.label() + "><J", n, std::move(add), std::move(mul),
                               carrier.index_of(A.zero(), B.zero()), carrier.index_of(A.one(), B.one()),
                               std::move(names), opts);
  Subring scalars = subring_f_plus_J(f, J);
  std::vector<Index> first(n), second(n);
  for (Index x = 0; x < n; ++x) {
    first[x] = carrier[x].first;
    second[x] = scalars.index_of[carrier[x].second];
  }
  auto pi1 = RingHom::make(ring, f.dom(), std::move(first));
  auto pi2 = RingHom::make(ring, scalars.ring, std::move(second));
  return AmalgRing{std::move(ring), std::move(carrier), std::move(pi1), std::move(scalars), std::move(pi2)};
}

// ---------------------------------------------------------------------------
// Amalgamated module M |><|^phi JN

struct AmalgContext {
  RingHom f;
  Ideal J;
  ModuleHom phi;
  ModulePtr M;
  ModulePtr N;
  Submodule JN;
  AmalgRing ring;
  ModulePtr module;
  PairCarrier carrier;
  /// phi(M) + JN as a module over f(R1) + J.
  ModulePtr target;
  std::vector<Index> target_embedding;  // target index -> N index
  std::vector<Index> target_index_of;   // N index -> target index or kNoIndex
};

/// Builds the amalgamation; the componentwise action is cross-checked against
/// the expanded formula (rm, phi(rm) + f(r)n + j phi(m) + jn) on every pair.
inline AmalgContext amalgamated_module(const RingHom& f, const Ideal& J, const ModuleHom& phi) {
  if (!same_ring(phi.ring_map().dom(), f.dom()) || !same_ring(phi.ring_map().cod(), f.cod()) ||
      phi.ring_map().map() != f.map())
    fail(ErrorKind::IncompatibleHom, "phi is not a homomorphism over f");
  if (!same_ring(J.ring(), f.cod())) fail(ErrorKind::NotAnIdeal, "J must be an ideal of the codomain of f");
  AmalgContext ctx;
  ctx.f = f;
  ctx.J = J;
  ctx.phi = phi;
  ctx.M = phi.dom();
  ctx.N = phi.cod();
  ctx.JN = ideal_times_module(J, ctx.N);
  ctx.ring = amalgamated_ring(f, J);

  const FiniteModule& M = *ctx.M;
  const FiniteModule& N = *ctx.N;
  const FiniteRing& A = *f.dom();
  const FiniteRing& B = *f.cod();

  std::vector<std::pair<Index, Index>> pairs;
  for (Index m = 0; m < M.size(); ++m) ctx.JN.members().for_each([&](Index n) { pairs.emplace_back(m, N.add(phi(m), n)); });
  ctx.carrier = PairCarrier(M.size(), N.size(), std::move(pairs));
  const PairCarrier& C = ctx.carrier;
  const std::size_t size = C.size();
  const std::size_t scalars = ctx.ring.carrier.size();

  std::vector<Index> add(size * size), act(scalars * size);
  std::vector<std::string> names(size);
  for (Index x = 0; x < size; ++x) {
    const auto [m1, y1] = C[x];
    names[x] = "(" + M.name(m1) + "," + N.name(y1) + ")";
    for (Index y = 0; y < size; ++y) {
      const auto [m2, y2] = C[y];
      const Index s = C.index_of(M.add(m1, m2), N.add(y1, y2));
      if (s == kNoIndex) fail(ErrorKind::InvalidStructure, "amalgamated module not closed under addition");
      add[x * size + y] = s;
    }
    for (Index t = 0; t < scalars; ++t) {
      const auto [r, rj] = ctx.ring.carrier[t];
      const Index rm = M.act(r, m1);
      const Index componentwise = N.act(rj, y1);
      const Index j = B.sub(rj, f(r));
      const Index n = N.sub(y1, phi(m1));
      const Index expanded =
          N.add(N.add(phi(rm), N.act(f(r), n)), N.add(N.act(j, phi(m1)), N.act(j, n)));
      if (componentwise != expanded)
        fail(ErrorKind::InvalidStructure, "componentwise action disagrees with the expanded scalar formula",
             {{"scalar", t, ctx.ring.ring->name(t)}, {"element", x, names[x]}});
      const Index p = C.index_of(rm, componentwise);
      if (p == kNoIndex) fail(ErrorKind::InvalidStructure, "amalgamated module not closed under the action");
      act[t * size + x] = p;
    }
  }
  ModuleOptions opts;
  opts.axioms_inherited = true;
  ctx.module = FiniteModule::make(M.label() + "><JN", ctx.ring.ring, size, std::move(add), std::move(act),
                                  C.index_of(M.zero(), N.zero()), std::move(names), opts);

  Subset target_set(N.size());
  for (const auto& pr : C.members()) target_set.insert(pr.second);
  ctx.target = module_on_subset(N, target_set, ctx.ring.scalars.ring, ctx.ring.scalars.embedding,
                                "phi(" + M.label() + ")+JN", &ctx.target_embedding);
  ctx.target_index_of.assign(N.size(), kNoIndex);
  for (Index i = 0; i < ctx.target_embedding.size(); ++i) ctx.target_index_of[ctx.target_embedding[i]] = i;
  (void)A;
  return ctx;
}

/// F |><|^phi JN = {(m, phi(m)+n) : m in F, n in JN}.
inline Submodule amalgam_submodule(const AmalgContext& ctx, const Submodule& F) {
  if (!same_module(F.module(), ctx.M)) fail(ErrorKind::NotASubmodule, "F is not a submodule of M");
  Subset s(ctx.carrier.size());
  for (Index x = 0; x < ctx.carrier.size(); ++x)
    if (F.contains(ctx.carrier[x].first)) s.insert(x);
  return Submodule::of(ctx.module, std::move(s));
}

/// {(m, phi(m)+n) : phi(m)+n in N2} for a submodule N2 of the target module.
inline Submodule bar_submodule(const AmalgContext& ctx, const Submodule& N2) {
  if (!same_module(N2.module(), ctx.target)) fail(ErrorKind::NotASubmodule, "N2 is not a submodule of phi(M)+JN");
  Subset s(ctx.carrier.size());
  for (Index x = 0; x < ctx.carrier.size(); ++x)
    if (N2.contains(ctx.target_index_of[ctx.carrier[x].second])) s.insert(x);
  return Submodule::of(ctx.module, std::move(s));
}

inline ModulePtr target_module(const AmalgContext& ctx) { return ctx.target; }

struct PGamma {
  ModuleHom hom;
  Submodule kernel;
  Submodule expected_kernel;  // phi^{-1}(JN) x {0}
};

/// (m, phi(m)+n) -> phi(m)+n over the ring map (r, f(r)+j) -> f(r)+j.
inline PGamma projection_p_gamma(const AmalgContext& ctx) {
  std::vector<Index> map(ctx.carrier.size());
  for (Index x = 0; x < ctx.carrier.size(); ++x) map[x] = ctx.target_index_of[ctx.carrier[x].second];
  auto hom = ModuleHom::make(ctx.ring.to_scalars, ctx.module, ctx.target, std::move(map));
  auto kernel = hom.kernel();
  Subset expected(ctx.carrier.size());
  const FiniteModule& N = *ctx.N;
  for (Index m = 0; m < ctx.M->size(); ++m)
    if (ctx.JN.contains(ctx.phi(m))) {
      const Index x = ctx.carrier.index_of(m, N.zero());
      if (x != kNoIndex) expected.insert(x);
    }
  auto expected_kernel = Submodule::of(ctx.module, std::move(expected));
  return PGamma{std::move(hom), std::move(kernel), std::move(expected_kernel)};
}

/// The explicit map (M |><| JN)/(F |><| JN) -> M/F, validated as a module
/// homomorphism over the first projection of the amalgamated ring.
struct QuotientIsomorphism {
  QuotientModule amalg_quotient;
  QuotientModule base_quotient;
  ModuleHom mu;
  bool bijective = false;
};

inline QuotientIsomorphism quotient_isomorphism(const AmalgContext& ctx, const Submodule& F) {
  const Submodule FJ = amalgam_submodule(ctx, F);
  QuotientIsomorphism out{quotient_module(FJ), quotient_module(F), {}, false};
  const auto& reps = out.amalg_quotient.representative;
  std::vector<Index> map(reps.size());
  for (Index q = 0; q < reps.size(); ++q) map[q] = out.base_quotient.projection(ctx.carrier[reps[q]].first);
  out.mu = ModuleHom::make(ctx.ring.first_projection, out.amalg_quotient.module, out.base_quotient.module, std::move(map));
  out.bijective = out.mu.is_injective() && out.mu.is_surjective();
  return out;
}

// ---------------------------------------------------------------------------
// Duplication M |><| J

struct Duplication {
  AmalgContext ctx;
  /// Amalgamated carrier equals {(m, m') : m - m' in JM}.
  bool carrier_matches_definition = false;
};

inline Duplication duplication_module(const RingPtr& R, const Ideal& J, const ModulePtr& M) {
  if (!same_ring(M->ring(), R)) fail(ErrorKind::InvalidStructure, "M is not a module over R");
  auto id = RingHom::identity(M->ring());
  Ideal J_on = Ideal::of(M->ring(), J.members());
  Duplication d{amalgamated_module(id, J_on, ModuleHom::identity(M)), false};
  const Submodule JM = ideal_times_module(J_on, M);
  std::vector<std::pair<Index, Index>> def;
  for (Index m = 0; m < M->size(); ++m)
    for (Index m2 = 0; m2 < M->size(); ++m2)
      if (JM.contains(M->sub(m, m2))) def.emplace_back(m, m2);
  std::sort(def.begin(), def.end());
  d.carrier_matches_definition = def == d.ctx.carrier.members();
  return d;
}

/// N |><| J = {(n, m) : n in N, n - m in JM} and N-bar = {(m, n) : n in N, m - n in JM}.
/// Each is returned only when it is closed in the duplication; otherwise the
/// corresponding error message is filled in.
struct DupSubmodules {
  std::optional<Submodule> bowtie;
  std::optional<Submodule> bar;
  std::string bowtie_error;
  std::string bar_error;
};

inline DupSubmodules dup_submodules(const Duplication& dup, const Submodule& Nsub) {
  const auto& C = dup.ctx.carrier;
  Subset bowtie(C.size()), bar(C.size());
  for (Index x = 0; x < C.size(); ++x) {
    if (Nsub.contains(C[x].first)) bowtie.insert(x);
    if (Nsub.contains(C[x].second)) bar.insert(x);
  }
  DupSubmodules out;
  try {
    out.bowtie = Submodule::of(dup.ctx.module, bowtie);
  } catch (const Error& e) {
    out.bowtie_error = e.what();
  }
  try {
    out.bar = Submodule::of(dup.ctx.module, bar);
  } catch (const Error& e) {
    out.bar_error = e.what();
  }
  return out;
}

// ---------------------------------------------------------------------------
// Idealization R(+)M

struct Idealization {
  RingPtr ring;
  RingPtr base;
  ModulePtr module;

  Index index_of(Index r, Index m) const noexcept { return static_cast<Index>(r * module->size() + m); }
};

/// Ring on R x M with (r1,m1)(r2,m2) = (r1 r2, r1 m2 + r2 m1); (1,0) is the identity.
inline Idealization idealization(const ModulePtr& M, const Budget& budget = {}) {
  const FiniteModule& Mm = *M;
  const FiniteRing& R = *Mm.ring();
  const std::size_t nm = Mm.size(), n = R.size() * nm;
  std::vector<Index> add(n * n), mul(n * n);
  std::vector<std::string> names(n);
  for (Index r1 = 0; r1 < R.size(); ++r1)
    for (Index m1 = 0; m1 < nm; ++m1) {
      const std::size_t x = r1 * nm + m1;
      names[x] = "(" + R.name(r1) + "," + Mm.name(m1) + ")";
      for (Index r2 = 0; r2 < R.size(); ++r2)
        for (Index m2 = 0; m2 < nm; ++m2) {
          const std::size_t y = r2 * nm + m2;
          add[x * n + y] = static_cast<Index>(R.add(r1, r2) * nm + Mm.add(m1, m2));
          mul[x * n + y] =
              static_cast<Index>(R.mul(r1, r2) * nm + Mm.add(Mm.act(r1, m2), Mm.act(r2, m1)));
        }
    }
  RingOptions opts;
  opts.budget = budget;
  opts.axioms_inherited = true;
  auto ring = FiniteRing::make(R.label() + "(+)" + Mm.label(), n, std::move(add), std::move(mul),
                               static_cast<Index>(R.zero() * nm + Mm.zero()),
                               static_cast<Index>(R.one() * nm + Mm.zero()), std::move(names), opts);
  return Idealization{std::move(ring), Mm.ring(), M};
}

/// I(+)F, defined when IM is contained in F.
inline Ideal idealization_ideal(const Idealization& idz, const Ideal& I, const Submodule& F) {
  if (!same_module(F.module(), idz.module)) fail(ErrorKind::NotASubmodule, "F is not a submodule of M");
  const Submodule IM = ideal_times_module(I, idz.module);
  if (!IM.members().is_subset_of(F.members())) fail(ErrorKind::IMNotInF, "IM is not contained in F");
  Subset s(idz.ring->size());
  I.members().for_each([&](Index i) { F.members().for_each([&](Index m) { s.insert(idz.index_of(i, m)); }); });
  return Ideal::of(idz.ring, std::move(s));
}

}  // namespace twoabs
