#pragma once

#include <algorithm>
#include <cstddef>
#include <memory>
#include <numeric>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "twoabs/budget.hpp"
#include "twoabs/error.hpp"
#include "twoabs/ring.hpp"
#include "twoabs/subset.hpp"

namespace twoabs {

struct ModuleOptions {
  /// Restriction or combination of validated structures; cubic axioms may be
  /// skipped when they do not fit in the budget.
  bool axioms_inherited = false;
  Budget budget{};
};

/// Unital module over a FiniteRing: addition table plus |R| x |M| action table.
class FiniteModule {
 public:
  static std::shared_ptr<const FiniteModule> make(std::string label, RingPtr ring, std::size_t m,
                                                  std::vector<Index> add, std::vector<Index> act, Index zero,
                                                  std::vector<std::string> names = {},
                                                  const ModuleOptions& options = {}) {
    if (m == 0) fail(ErrorKind::InvalidSize, "module carrier must be nonempty");
    if (add.size() != m * m) fail(ErrorKind::InvalidStructure, "module addition table has wrong size");
    if (act.size() != ring->size() * m) fail(ErrorKind::InvalidStructure, "action table has wrong size");
    if (names.empty())
      for (std::size_t i = 0; i < m; ++i) names.push_back(std::to_string(i));
    if (names.size() != m) fail(ErrorKind::InvalidStructure, "element name count differs from carrier size");
    auto mod = std::shared_ptr<FiniteModule>(new FiniteModule());
    mod->label_ = std::move(label);
    mod->ring_ = std::move(ring);
    mod->m_ = m;
    mod->add_ = std::move(add);
    mod->act_ = std::move(act);
    mod->zero_ = zero;
    mod->names_ = std::move(names);
    mod->validate(options);
    return mod;
  }

  const RingPtr& ring() const noexcept { return ring_; }
  std::size_t size() const noexcept { return m_; }
  Index zero() const noexcept { return zero_; }
  const std::string& label() const noexcept { return label_; }
  const std::string& name(Index i) const { return names_.at(i); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  bool axioms_fully_checked() const noexcept { return fully_checked_; }

  Index add(Index x, Index y) const noexcept { return add_[x * m_ + y]; }
  Index act(Index r, Index x) const noexcept { return act_[r * m_ + x]; }
  Index neg(Index x) const noexcept { return neg_[x]; }
  Index sub(Index x, Index y) const noexcept { return add(x, neg(y)); }

  std::optional<Index> find(const std::string& name) const {
    for (Index i = 0; i < m_; ++i)
      if (names_[i] == name) return i;
    return std::nullopt;
  }

  bool same_structure(const FiniteModule& other) const noexcept {
    return m_ == other.m_ && zero_ == other.zero_ && add_ == other.add_ && act_ == other.act_ &&
           same_ring(ring_, other.ring_);
  }

 private:
  FiniteModule() = default;

  void validate(const ModuleOptions& options) {
    const FiniteRing& R = *ring_;
    const Index m = static_cast<Index>(m_);
    const Index n = static_cast<Index>(R.size());
    for (Index v : add_)
      if (v >= m) fail(ErrorKind::InvalidStructure, label_ + ": addition leaves the carrier");
    for (Index v : act_)
      if (v >= m) fail(ErrorKind::InvalidStructure, label_ + ": action leaves the carrier");
    if (zero_ >= m) fail(ErrorKind::InvalidStructure, label_ + ": zero outside carrier");
    neg_.assign(m_, kNoIndex);
    for (Index x = 0; x < m; ++x) {
      if (add(zero_, x) != x) fail(ErrorKind::InvalidStructure, label_ + ": zero is not additive identity");
      if (act(R.one(), x) != x) fail(ErrorKind::InvalidStructure, label_ + ": module is not unital", {{"x", x, name(x)}});
      for (Index y = 0; y < m; ++y) {
        if (add(x, y) != add(y, x)) fail(ErrorKind::InvalidStructure, label_ + ": addition not commutative");
        if (add(x, y) == zero_ && neg_[x] == kNoIndex) neg_[x] = y;
      }
      if (neg_[x] == kNoIndex) fail(ErrorKind::InvalidStructure, label_ + ": element without additive inverse");
    }
    const std::uint64_t cost = cube(m_) + std::uint64_t{n} * m_ * m_ + 2ull * n * n * m_;
    const bool fits = options.budget.allows(cost);
    if (!fits && !options.axioms_inherited) options.budget.require(cost, "validating module axioms of " + label_);
    fully_checked_ = fits;
    if (!fits) return;
    for (Index x = 0; x < m; ++x)
      for (Index y = 0; y < m; ++y) {
        const Index xy = add(x, y);
        for (Index z = 0; z < m; ++z)
          if (add(xy, z) != add(x, add(y, z)))
            fail(ErrorKind::InvalidStructure, label_ + ": addition not associative");
        for (Index r = 0; r < n; ++r)
          if (act(r, xy) != add(act(r, x), act(r, y)))
            fail(ErrorKind::InvalidStructure, label_ + ": r(x+y) != rx+ry",
                 {{"r", r, R.name(r)}, {"x", x, name(x)}, {"y", y, name(y)}});
      }
    for (Index r = 0; r < n; ++r)
      for (Index s = 0; s < n; ++s)
        for (Index x = 0; x < m; ++x) {
          if (act(R.add(r, s), x) != add(act(r, x), act(s, x)))
            fail(ErrorKind::InvalidStructure, label_ + ": (r+s)x != rx+sx",
                 {{"r", r, R.name(r)}, {"s", s, R.name(s)}, {"x", x, name(x)}});
          if (act(R.mul(r, s), x) != act(r, act(s, x)))
            fail(ErrorKind::InvalidStructure, label_ + ": (rs)x != r(sx)",
                 {{"r", r, R.name(r)}, {"s", s, R.name(s)}, {"x", x, name(x)}});
        }
  }

  std::string label_;
  RingPtr ring_;
  std::size_t m_ = 0;
  std::vector<Index> add_;
  std::vector<Index> act_;
  std::vector<Index> neg_;
  Index zero_ = 0;
  std::vector<std::string> names_;
  bool fully_checked_ = false;
};

using ModulePtr = std::shared_ptr<const FiniteModule>;

inline bool same_module(const ModulePtr& a, const ModulePtr& b) {
  return a == b || (a && b && a->same_structure(*b));
}

inline WitnessEntry module_entry(const FiniteModule& M, const std::string& role, Index i) {
  return WitnessEntry{role, i, M.name(i)};
}

// ---------------------------------------------------------------------------
// Submodules

class Submodule {
 public:
  Submodule() = default;

  static Submodule of(ModulePtr module, Subset members) {
    const FiniteModule& M = *module;
    const FiniteRing& R = *M.ring();
    if (members.universe() != M.size()) fail(ErrorKind::NotASubmodule, "subset universe differs from module size");
    if (!members.contains(M.zero())) fail(ErrorKind::NotASubmodule, "submodule must contain zero");
    const auto elems = members.members();
    for (Index x : elems) {
      for (Index y : elems)
        if (!members.contains(M.add(x, y)))
          fail(ErrorKind::NotASubmodule, "not closed under addition", {module_entry(M, "x", x), module_entry(M, "y", y)});
      for (Index r = 0; r < R.size(); ++r)
        if (!members.contains(M.act(r, x)))
          fail(ErrorKind::NotASubmodule, "not closed under the action", {ring_entry(R, "r", r), module_entry(M, "x", x)});
    }
    Submodule F;
    F.module_ = std::move(module);
    F.members_ = std::move(members);
    return F;
  }

  static Submodule zero(ModulePtr module) {
    Subset s(module->size());
    s.insert(module->zero());
    return of(std::move(module), std::move(s));
  }

  static Submodule whole(ModulePtr module) {
    const auto m = module->size();
    return of(std::move(module), Subset::full(m));
  }

  const ModulePtr& module() const noexcept { return module_; }
  const Subset& members() const noexcept { return members_; }
  bool contains(Index x) const noexcept { return members_.contains(x); }
  std::size_t size() const noexcept { return members_.count(); }
  bool is_proper() const noexcept { return members_.count() < module_->size(); }

  friend bool operator==(const Submodule& a, const Submodule& b) noexcept { return a.members_ == b.members_; }

 private:
  ModulePtr module_;
  Subset members_;
};

// ---------------------------------------------------------------------------
// Module homomorphisms

class ModuleHom {
 public:
  ModuleHom() = default;

  /// Validates additivity then compatibility phi(r x) = f(r) phi(x).
  static ModuleHom make(RingHom f, ModulePtr dom, ModulePtr cod, std::vector<Index> map) {
    if (!same_ring(f.dom(), dom->ring()) || !same_ring(f.cod(), cod->ring()))
      fail(ErrorKind::IncompatibleHom, "ring map does not connect the module rings");
    const FiniteModule& M = *dom;
    const FiniteModule& N = *cod;
    const FiniteRing& R = *dom->ring();
    if (map.size() != M.size())
      fail(ErrorKind::NotAHom, "map length " + std::to_string(map.size()) + " differs from |" + M.label() + "|");
    for (Index x = 0; x < map.size(); ++x)
      if (map[x] >= N.size()) fail(ErrorKind::NotAHom, "image outside codomain", {module_entry(M, "x", x)});
    for (Index x = 0; x < M.size(); ++x)
      for (Index y = 0; y < M.size(); ++y)
        if (map[M.add(x, y)] != N.add(map[x], map[y]))
          fail(ErrorKind::NotAHom, "additivity", {module_entry(M, "x", x), module_entry(M, "y", y)});
    for (Index r = 0; r < R.size(); ++r)
      for (Index x = 0; x < M.size(); ++x)
        if (map[M.act(r, x)] != N.act(f(r), map[x]))
          fail(ErrorKind::NotAHom, "compatibility", {ring_entry(R, "r", r), module_entry(M, "x", x)});
    ModuleHom h;
    h.f_ = std::move(f);
    h.dom_ = std::move(dom);
    h.cod_ = std::move(cod);
    h.map_ = std::move(map);
    return h;
  }

  static ModuleHom identity(const ModulePtr& M) {
    std::vector<Index> map(M->size());
    std::iota(map.begin(), map.end(), Index{0});
    return make(RingHom::identity(M->ring()), M, M, std::move(map));
  }

  const RingHom& ring_map() const noexcept { return f_; }
  const ModulePtr& dom() const noexcept { return dom_; }
  const ModulePtr& cod() const noexcept { return cod_; }
  const std::vector<Index>& map() const noexcept { return map_; }
  Index operator()(Index x) const noexcept { return map_[x]; }

  Subset image_set() const {
    Subset s(cod_->size());
    for (Index y : map_) s.insert(y);
    return s;
  }
  bool is_surjective() const { return image_set().is_full(); }
  bool is_injective() const { return image_set().count() == dom_->size(); }

  Submodule kernel() const {
    Subset k(dom_->size());
    for (Index x = 0; x < map_.size(); ++x)
      if (map_[x] == cod_->zero()) k.insert(x);
    return Submodule::of(dom_, std::move(k));
  }

 private:
  RingHom f_;
  ModulePtr dom_;
  ModulePtr cod_;
  std::vector<Index> map_;
};

inline ModuleHom mk_module_hom(const RingHom& f, const ModulePtr& M, const ModulePtr& N, std::vector<Index> map) {
  return ModuleHom::make(f, M, N, std::move(map));
}

// ---------------------------------------------------------------------------
// Constructors

inline ModulePtr regular_module(const RingPtr& ring) {
  const FiniteRing& R = *ring;
  std::vector<Index> add(R.add_table().begin(), R.add_table().end());
  std::vector<Index> act(R.mul_table().begin(), R.mul_table().end());
  ModuleOptions opts;
  opts.axioms_inherited = true;
  return FiniteModule::make(R.label(), ring, R.size(), std::move(add), std::move(act), R.zero(), R.names(), opts);
}

inline bool is_regular_module(const FiniteModule& M) {
  const FiniteRing& R = *M.ring();
  if (M.size() != R.size() || M.zero() != R.zero()) return false;
  for (Index a = 0; a < R.size(); ++a)
    for (Index b = 0; b < R.size(); ++b)
      if (M.add(a, b) != R.add(a, b) || M.act(a, b) != R.mul(a, b)) return false;
  return true;
}

inline ModulePtr zero_module(const RingPtr& ring) {
  return FiniteModule::make("0", ring, 1, {0}, std::vector<Index>(ring->size(), 0), 0, {"0"});
}

/// Ma x Mb over product_ring(Ra, Rb); pass `over` to reuse an existing,
/// structurally equal product ring.
inline ModulePtr product_module(const FiniteModule& A, const FiniteModule& B, RingPtr over = nullptr) {
  RingPtr P = product_ring(*A.ring(), *B.ring());
  if (over) {
    if (!same_ring(over, P)) fail(ErrorKind::InvalidStructure, "declared scalar ring is not the product of the factor rings");
    P = std::move(over);
  }
  const FiniteRing& Ra = *A.ring();
  const FiniteRing& Rb = *B.ring();
  const std::size_t ma = A.size(), mb = B.size(), m = ma * mb;
  std::vector<Index> add(m * m), act(P->size() * m);
  std::vector<std::string> names(m);
  for (Index x1 = 0; x1 < ma; ++x1)
    for (Index y1 = 0; y1 < mb; ++y1) {
      const std::size_t u = x1 * mb + y1;
      names[u] = "(" + A.name(x1) + "," + B.name(y1) + ")";
      for (Index x2 = 0; x2 < ma; ++x2)
        for (Index y2 = 0; y2 < mb; ++y2)
          add[u * m + x2 * mb + y2] = static_cast<Index>(A.add(x1, x2) * mb + B.add(y1, y2));
      for (Index ra = 0; ra < Ra.size(); ++ra)
        for (Index rb = 0; rb < Rb.size(); ++rb)
          act[(ra * Rb.size() + rb) * m + u] = static_cast<Index>(A.act(ra, x1) * mb + B.act(rb, y1));
    }
  ModuleOptions opts;
  opts.axioms_inherited = true;
  return FiniteModule::make(A.label() + "x" + B.label(), std::move(P), m, std::move(add), std::move(act),
                            static_cast<Index>(A.zero() * mb + B.zero()), std::move(names), opts);
}

/// A (+) B over their common ring, scalars acting diagonally.
inline ModulePtr direct_sum(const FiniteModule& A, const FiniteModule& B) {
  if (!same_ring(A.ring(), B.ring())) fail(ErrorKind::InvalidStructure, "direct sum needs modules over the same ring");
  const FiniteRing& R = *A.ring();
  const std::size_t ma = A.size(), mb = B.size(), m = ma * mb;
  std::vector<Index> add(m * m), act(R.size() * m);
  std::vector<std::string> names(m);
  for (Index x1 = 0; x1 < ma; ++x1)
    for (Index y1 = 0; y1 < mb; ++y1) {
      const std::size_t u = x1 * mb + y1;
      names[u] = "(" + A.name(x1) + "," + B.name(y1) + ")";
      for (Index x2 = 0; x2 < ma; ++x2)
        for (Index y2 = 0; y2 < mb; ++y2)
          add[u * m + x2 * mb + y2] = static_cast<Index>(A.add(x1, x2) * mb + B.add(y1, y2));
      for (Index r = 0; r < R.size(); ++r) act[r * m + u] = static_cast<Index>(A.act(r, x1) * mb + B.act(r, y1));
    }
  ModuleOptions opts;
  opts.axioms_inherited = true;
  return FiniteModule::make(A.label() + "+" + B.label(), A.ring(), m, std::move(add), std::move(act),
                            static_cast<Index>(A.zero() * mb + B.zero()), std::move(names), opts);
}

/// N viewed over dom(f) through r.x := f(r).x
inline ModulePtr restrict_scalars(const FiniteModule& N, const RingHom& f) {
  if (!same_ring(f.cod(), N.ring())) fail(ErrorKind::IncompatibleHom, "codomain of f is not the ring of N");
  const std::size_t m = N.size();
  std::vector<Index> add(m * m), act(f.dom()->size() * m);
  for (Index x = 0; x < m; ++x)
    for (Index y = 0; y < m; ++y) add[x * m + y] = N.add(x, y);
  for (Index r = 0; r < f.dom()->size(); ++r)
    for (Index x = 0; x < m; ++x) act[r * m + x] = N.act(f(r), x);
  ModuleOptions opts;
  opts.axioms_inherited = true;
  return FiniteModule::make(N.label() + "|" + f.dom()->label(), f.dom(), m, std::move(add), std::move(act), N.zero(),
                            N.names(), opts);
}

/// The subset `carrier` of N (closed under + and under the action of the
/// subring `scalars` of N's ring) as a module over that subring.
inline ModulePtr module_on_subset(const FiniteModule& N, const Subset& carrier, const RingPtr& scalars,
                                  const std::vector<Index>& scalar_embedding, std::string label,
                                  std::vector<Index>* embedding_out = nullptr) {
  const auto emb = carrier.members();
  std::vector<Index> local(N.size(), kNoIndex);
  for (Index i = 0; i < emb.size(); ++i) local[emb[i]] = i;
  const std::size_t m = emb.size();
  std::vector<Index> add(m * m), act(scalars->size() * m);
  std::vector<std::string> names(m);
  for (Index i = 0; i < m; ++i) {
    names[i] = N.name(emb[i]);
    for (Index j = 0; j < m; ++j) {
      const Index s = local[N.add(emb[i], emb[j])];
      if (s == kNoIndex) fail(ErrorKind::NotASubmodule, label + ": not closed under addition");
      add[i * m + j] = s;
    }
    for (Index t = 0; t < scalars->size(); ++t) {
      const Index p = local[N.act(scalar_embedding[t], emb[i])];
      if (p == kNoIndex) fail(ErrorKind::NotASubmodule, label + ": not closed under the scalar action");
      act[t * m + i] = p;
    }
  }
  if (local[N.zero()] == kNoIndex) fail(ErrorKind::NotASubmodule, label + ": misses zero");
  if (embedding_out) *embedding_out = emb;
  ModuleOptions opts;
  opts.axioms_inherited = true;
  return FiniteModule::make(std::move(label), scalars, m, std::move(add), std::move(act), local[N.zero()],
                            std::move(names), opts);
}

struct QuotientModule {
  ModulePtr module;
  ModuleHom projection;
  std::vector<Index> representative;  // quotient index -> least element of the coset
};

inline QuotientModule quotient_module(const ModulePtr& M, const Subset& F_members) {
  const Submodule F = Submodule::of(M, F_members);
  const FiniteModule& Mm = *M;
  const FiniteRing& R = *Mm.ring();
  std::vector<Index> coset(Mm.size(), kNoIndex);
  std::vector<Index> reps;
  for (Index x = 0; x < Mm.size(); ++x) {
    if (coset[x] != kNoIndex) continue;
    const Index c = static_cast<Index>(reps.size());
    reps.push_back(x);
    F.members().for_each([&](Index f) { coset[Mm.add(x, f)] = c; });
  }
  const std::size_t q = reps.size();
  std::vector<Index> add(q * q), act(R.size() * q);
  std::vector<std::string> names(q);
  for (Index a = 0; a < q; ++a) {
    names[a] = Mm.name(reps[a]);
    for (Index b = 0; b < q; ++b) add[a * q + b] = coset[Mm.add(reps[a], reps[b])];
    for (Index r = 0; r < R.size(); ++r) act[r * q + a] = coset[Mm.act(r, reps[a])];
  }
  ModuleOptions opts;
  opts.axioms_inherited = true;
  auto Q = FiniteModule::make(Mm.label() + "/(" + std::to_string(F.size()) + ")", Mm.ring(), q, std::move(add),
                              std::move(act), coset[Mm.zero()], std::move(names), opts);
  auto proj = ModuleHom::make(RingHom::identity(Mm.ring()), M, Q, coset);
  return QuotientModule{std::move(Q), std::move(proj), std::move(reps)};
}

inline QuotientModule quotient_module(const Submodule& F) { return quotient_module(F.module(), F.members()); }

// ---------------------------------------------------------------------------
// Generation and lattice

namespace detail {

inline Subset submodule_closure(const FiniteModule& M, const Subset& seed) {
  const FiniteRing& R = *M.ring();
  Subset out(M.size());
  out.insert(M.zero());
  std::vector<Index> work;
  auto push = [&](Index x) {
    if (!out.contains(x)) {
      out.insert(x);
      work.push_back(x);
    }
  };
  seed.for_each([&](Index g) {
    for (Index r = 0; r < R.size(); ++r) push(M.act(r, g));
  });
  while (!work.empty()) {
    const Index x = work.back();
    work.pop_back();
    for (Index y : out.members()) push(M.add(x, y));
  }
  return out;
}

inline Subset sum_sets(const FiniteModule& M, const Subset& A, const Subset& B) {
  Subset s(M.size());
  const auto a = A.members();
  B.for_each([&](Index y) {
    for (Index x : a) s.insert(M.add(x, y));
  });
  return s;
}

}  // namespace detail

inline Submodule submodule_generated(const ModulePtr& M, const std::vector<Index>& gens) {
  Subset seed(M->size());
  for (Index g : gens) {
    if (g >= M->size()) fail(ErrorKind::BadElement, "generator " + std::to_string(g) + " outside " + M->label());
    seed.insert(g);
  }
  return Submodule::of(M, detail::submodule_closure(*M, seed));
}

inline Submodule submodule_sum(const Submodule& A, const Submodule& B) {
  return Submodule::of(A.module(), detail::sum_sets(*A.module(), A.members(), B.members()));
}

inline Submodule submodule_intersection(const Submodule& A, const Submodule& B) {
  return Submodule::of(A.module(), A.members() & B.members());
}

/// Every submodule, sorted by (size, members); sums of cyclic submodules.
inline std::vector<Submodule> enumerate_submodules(const ModulePtr& module, const Budget& budget = {}) {
  const FiniteModule& M = *module;
  const FiniteRing& R = *M.ring();
  budget.require(std::uint64_t{M.size()} * M.size() * (R.size() + M.size()), "enumerating submodules of " + M.label());
  std::vector<Subset> cyclic;
  std::unordered_set<Subset, SubsetHash> seen_cyclic;
  for (Index x = 0; x < M.size(); ++x) {
    Subset c(M.size());
    for (Index r = 0; r < R.size(); ++r) c.insert(M.act(r, x));
    if (seen_cyclic.insert(c).second) cyclic.push_back(std::move(c));
  }
  std::unordered_set<Subset, SubsetHash> seen;
  std::vector<Subset> all;
  for (const auto& c : cyclic)
    if (seen.insert(c).second) all.push_back(c);
  std::uint64_t work = 0;
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (const auto& c : cyclic) {
      if (c.is_subset_of(all[i])) continue;
      work += all[i].count() * c.count();
      budget.require(work, "enumerating submodules of " + M.label());
      Subset s = detail::sum_sets(M, all[i], c);
      if (seen.insert(s).second) all.push_back(std::move(s));
    }
  }
  std::sort(all.begin(), all.end());
  std::vector<Submodule> out;
  out.reserve(all.size());
  for (auto& s : all) out.push_back(Submodule::of(module, std::move(s)));
  return out;
}

// ---------------------------------------------------------------------------
// Residuals

/// (F :_R K) = {r : rK in F} for a nonempty subset K of M.
inline Ideal residual_ideal(const Submodule& F, const Subset& K) {
  const FiniteModule& M = *F.module();
  const FiniteRing& R = *M.ring();
  if (K.empty()) fail(ErrorKind::EmptySubset, "residual needs a nonempty subset");
  const auto ks = K.members();
  Subset out(R.size());
  for (Index r = 0; r < R.size(); ++r) {
    bool inside = true;
    for (Index k : ks)
      if (!F.contains(M.act(r, k))) {
        inside = false;
        break;
      }
    if (inside) out.insert(r);
  }
  return Ideal::of(M.ring(), std::move(out));
}

/// (F :_R M).
inline Ideal residual_ideal(const Submodule& F) { return residual_ideal(F, Subset::full(F.module()->size())); }

/// (F :_M r) = {m : r m in F}.
inline Submodule colon_by_element(const Submodule& F, Index r) {
  const FiniteModule& M = *F.module();
  if (r >= M.ring()->size()) fail(ErrorKind::BadElement, "scalar outside ring");
  Subset out(M.size());
  for (Index x = 0; x < M.size(); ++x)
    if (F.contains(M.act(r, x))) out.insert(x);
  return Submodule::of(F.module(), std::move(out));
}

/// (F :_M I) = {m : I m in F}.
inline Submodule residual_by_ideal(const Submodule& F, const Ideal& I) {
  const FiniteModule& M = *F.module();
  if (!same_ring(I.ring(), M.ring())) fail(ErrorKind::NotAnIdeal, "ideal is not over the ring of the module");
  const auto is = I.members().members();
  Subset out(M.size());
  for (Index x = 0; x < M.size(); ++x) {
    bool inside = true;
    for (Index i : is)
      if (!F.contains(M.act(i, x))) {
        inside = false;
        break;
      }
    if (inside) out.insert(x);
  }
  return Submodule::of(F.module(), std::move(out));
}

/// J N: submodule generated by {j n}.
inline Submodule ideal_times_module(const Ideal& J, const ModulePtr& N) {
  if (!same_ring(J.ring(), N->ring())) fail(ErrorKind::NotAnIdeal, "ideal is not over the ring of the module");
  Subset seed(N->size());
  J.members().for_each([&](Index j) {
    for (Index x = 0; x < N->size(); ++x) seed.insert(N->act(j, x));
  });
  return Submodule::of(N, detail::submodule_closure(*N, seed));
}

inline Ideal annihilator(const ModulePtr& M) { return residual_ideal(Submodule::zero(M)); }

/// Z(M/F) = {r : some m outside F has r m in F}.
inline Subset zero_divisors_on_quotient(const Submodule& F) {
  if (!F.is_proper()) fail(ErrorKind::NotProper, "zero divisors on M/F need F proper");
  const FiniteModule& M = *F.module();
  const FiniteRing& R = *M.ring();
  Subset out(R.size());
  for (Index r = 0; r < R.size(); ++r)
    for (Index x = 0; x < M.size(); ++x)
      if (!F.contains(x) && F.contains(M.act(r, x))) {
        out.insert(r);
        break;
      }
  return out;
}

// ---------------------------------------------------------------------------
// Chains

inline void validate_chain(const std::vector<Submodule>& chain) {
  if (chain.empty()) fail(ErrorKind::NotAChain, "empty chain");
  for (std::size_t i = 0; i < chain.size(); ++i)
    for (std::size_t j = i + 1; j < chain.size(); ++j) {
      const auto& a = chain[i].members();
      const auto& b = chain[j].members();
      if (!a.is_subset_of(b) && !b.is_subset_of(a))
        fail(ErrorKind::NotAChain, "members " + std::to_string(i) + " and " + std::to_string(j) + " are incomparable");
    }
}

inline Submodule intersect_chain(const std::vector<Submodule>& chain) {
  validate_chain(chain);
  Subset s = chain.front().members();
  for (const auto& F : chain) s = s & F.members();
  return Submodule::of(chain.front().module(), std::move(s));
}

inline Submodule union_chain(const std::vector<Submodule>& chain) {
  validate_chain(chain);
  Subset s = chain.front().members();
  for (const auto& F : chain) s = s | F.members();
  if (s.is_full()) fail(ErrorKind::UnionNotProper, "union of the chain is the whole module");
  return Submodule::of(chain.front().module(), std::move(s));
}

// ---------------------------------------------------------------------------
// Images

/// phi(F). When f is not surjective the image need not be closed under the
/// whole codomain ring; `is_submodule` records whether it is.
struct ImageResult {
  Subset members;
  bool is_submodule = false;

  Submodule as_submodule(const ModulePtr& N) const { return Submodule::of(N, members); }
};

inline ImageResult image_submodule(const ModuleHom& phi, const Submodule& F) {
  Subset s(phi.cod()->size());
  F.members().for_each([&](Index x) { s.insert(phi(x)); });
  ImageResult out{s, false};
  try {
    (void)Submodule::of(phi.cod(), s);
    out.is_submodule = true;
  } catch (const Error&) {
    out.is_submodule = false;
  }
  return out;
}

inline Submodule preimage_submodule(const ModuleHom& phi, const Submodule& N2) {
  Subset s(phi.dom()->size());
  for (Index x = 0; x < phi.dom()->size(); ++x)
    if (N2.contains(phi(x))) s.insert(x);
  return Submodule::of(phi.dom(), std::move(s));
}

}  // namespace twoabs
