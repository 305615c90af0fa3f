#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <memory>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "twoabs/budget.hpp"
#include "twoabs/error.hpp"
#include "twoabs/subset.hpp"
#include "twoabs/verdict.hpp"

namespace twoabs {

inline constexpr Index kNoIndex = std::numeric_limits<Index>::max();

/// How much of the ring axioms a constructor asks `FiniteRing::make` to check.
struct RingOptions {
  /// Accept the one-element ring (arises from localizing at a set containing 0).
  bool allow_zero_ring = false;
  /// The tables are a restriction of an already validated structure, so the
  /// cubic axioms may be skipped when they do not fit in the budget.
  bool axioms_inherited = false;
  Budget budget{};
};

/// Commutative ring with identity on the carrier 0..n-1, given by dense tables.
class FiniteRing {
 public:
  static std::shared_ptr<const FiniteRing> make(std::string label, std::size_t n, std::vector<Index> add,
                                                std::vector<Index> mul, Index zero, Index one,
                                                std::vector<std::string> names = {},
                                                const RingOptions& options = {}) {
    if (n == 0) fail(ErrorKind::InvalidSize, "ring carrier must be nonempty");
    if (add.size() != n * n || mul.size() != n * n)
      fail(ErrorKind::InvalidStructure, "ring tables must be " + std::to_string(n) + "x" + std::to_string(n));
    if (names.empty()) {
      names.reserve(n);
      for (std::size_t i = 0; i < n; ++i) names.push_back(std::to_string(i));
    }
    if (names.size() != n) fail(ErrorKind::InvalidStructure, "element name count differs from carrier size");
    auto ring = std::shared_ptr<FiniteRing>(new FiniteRing());
    ring->label_ = std::move(label);
    ring->n_ = n;
    ring->add_ = std::move(add);
    ring->mul_ = std::move(mul);
    ring->zero_ = zero;
    ring->one_ = one;
    ring->names_ = std::move(names);
    ring->validate(options);
    return ring;
  }

  std::size_t size() const noexcept { return n_; }
  Index zero() const noexcept { return zero_; }
  Index one() const noexcept { return one_; }
  const std::string& label() const noexcept { return label_; }
  const std::string& name(Index i) const { return names_.at(i); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  bool is_zero_ring() const noexcept { return n_ == 1; }
  bool axioms_fully_checked() const noexcept { return fully_checked_; }

  Index add(Index a, Index b) const noexcept { return add_[a * n_ + b]; }
  Index mul(Index a, Index b) const noexcept { return mul_[a * n_ + b]; }
  Index neg(Index a) const noexcept { return neg_[a]; }
  Index sub(Index a, Index b) const noexcept { return add(a, neg(b)); }

  Index pow(Index a, std::size_t k) const noexcept {
    Index r = one_;
    for (std::size_t i = 0; i < k; ++i) r = mul(r, a);
    return r;
  }

  std::span<const Index> add_table() const noexcept { return add_; }
  std::span<const Index> mul_table() const noexcept { return mul_; }

  bool is_unit(Index a) const noexcept {
    for (Index b = 0; b < n_; ++b)
      if (mul(a, b) == one_) return true;
    return false;
  }

  std::optional<Index> find(const std::string& name) const {
    for (Index i = 0; i < n_; ++i)
      if (names_[i] == name) return i;
    return std::nullopt;
  }

  /// Same carrier size, identity elements and tables.
  bool same_structure(const FiniteRing& other) const noexcept {
    return n_ == other.n_ && zero_ == other.zero_ && one_ == other.one_ && add_ == other.add_ &&
           mul_ == other.mul_;
  }

 private:
  FiniteRing() = default;

  void validate(const RingOptions& options) {
    const Index n = static_cast<Index>(n_);
    for (Index v : add_)
      if (v >= n) fail(ErrorKind::InvalidStructure, label_ + ": addition table leaves the carrier");
    for (Index v : mul_)
      if (v >= n) fail(ErrorKind::InvalidStructure, label_ + ": multiplication table leaves the carrier");
    if (zero_ >= n || one_ >= n) fail(ErrorKind::InvalidStructure, label_ + ": identity outside carrier");
    if (one_ == zero_ && !(options.allow_zero_ring && n == 1))
      fail(ErrorKind::InvalidStructure, label_ + ": requires 1 != 0");

    neg_.assign(n_, kNoIndex);
    for (Index a = 0; a < n; ++a) {
      if (add(zero_, a) != a) fail(ErrorKind::InvalidStructure, label_ + ": zero is not additive identity", {{"x", a, {}}});
      if (mul(one_, a) != a) fail(ErrorKind::InvalidStructure, label_ + ": one is not multiplicative identity", {{"x", a, {}}});
      for (Index b = 0; b < n; ++b) {
        if (add(a, b) != add(b, a)) fail(ErrorKind::InvalidStructure, label_ + ": addition not commutative", {{"a", a, {}}, {"b", b, {}}});
        if (mul(a, b) != mul(b, a)) fail(ErrorKind::InvalidStructure, label_ + ": multiplication not commutative", {{"a", a, {}}, {"b", b, {}}});
        if (add(a, b) == zero_ && neg_[a] == kNoIndex) neg_[a] = b;
      }
      if (neg_[a] == kNoIndex) fail(ErrorKind::InvalidStructure, label_ + ": element without additive inverse", {{"x", a, {}}});
    }

    const bool cubic_fits = options.budget.allows(3 * cube(n_));
    if (!cubic_fits && !options.axioms_inherited)
      options.budget.require(3 * cube(n_), "validating ring axioms of " + label_);
    fully_checked_ = cubic_fits;
    if (!cubic_fits) return;
    for (Index a = 0; a < n; ++a)
      for (Index b = 0; b < n; ++b) {
        const Index ab_add = add(a, b);
        const Index ab_mul = mul(a, b);
        for (Index c = 0; c < n; ++c) {
          if (add(ab_add, c) != add(a, add(b, c)))
            fail(ErrorKind::InvalidStructure, label_ + ": addition not associative", {{"a", a, {}}, {"b", b, {}}, {"c", c, {}}});
          if (mul(ab_mul, c) != mul(a, mul(b, c)))
            fail(ErrorKind::InvalidStructure, label_ + ": multiplication not associative", {{"a", a, {}}, {"b", b, {}}, {"c", c, {}}});
          if (mul(a, add(b, c)) != add(ab_mul, mul(a, c)))
            fail(ErrorKind::InvalidStructure, label_ + ": not distributive", {{"a", a, {}}, {"b", b, {}}, {"c", c, {}}});
        }
      }
  }

  std::string label_;
  std::size_t n_ = 0;
  std::vector<Index> add_;
  std::vector<Index> mul_;
  std::vector<Index> neg_;
  Index zero_ = 0;
  Index one_ = 0;
  std::vector<std::string> names_;
  bool fully_checked_ = false;
};

using RingPtr = std::shared_ptr<const FiniteRing>;

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
  return a == b || (a && b && a->same_structure(*b));
}

inline WitnessEntry ring_entry(const FiniteRing& r, const std::string& role, Index i) {
  return WitnessEntry{role, i, r.name(i)};
}

/// Integers mod n with index = residue.
inline RingPtr mk_zmod(std::size_t n) {
  if (n < 2) fail(ErrorKind::InvalidSize, "zmod needs n >= 2, got " + std::to_string(n));
  std::vector<Index> add(n * n), mul(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      add[a * n + b] = static_cast<Index>((a + b) % n);
      mul[a * n + b] = static_cast<Index>((a * b) % n);
    }
  return FiniteRing::make("Z" + std::to_string(n), n, std::move(add), std::move(mul), 0, 1 % n);
}

/// Componentwise product; element (a, b) has index a*|B| + b.
inline RingPtr product_ring(const FiniteRing& A, const FiniteRing& B) {
  const std::size_t na = A.size(), nb = B.size(), n = na * nb;
  std::vector<Index> add(n * n), mul(n * n);
  std::vector<std::string> names(n);
  for (Index a1 = 0; a1 < na; ++a1)
    for (Index b1 = 0; b1 < nb; ++b1) {
      const std::size_t x = a1 * nb + b1;
      names[x] = "(" + A.name(a1) + "," + B.name(b1) + ")";
      for (Index a2 = 0; a2 < na; ++a2)
        for (Index b2 = 0; b2 < nb; ++b2) {
          const std::size_t y = a2 * nb + b2;
          add[x * n + y] = static_cast<Index>(A.add(a1, a2) * nb + B.add(b1, b2));
          mul[x * n + y] = static_cast<Index>(A.mul(a1, a2) * nb + B.mul(b1, b2));
        }
    }
  RingOptions opts;
  opts.axioms_inherited = true;
  opts.allow_zero_ring = A.is_zero_ring() && B.is_zero_ring();
  return FiniteRing::make(A.label() + "x" + B.label(), n, std::move(add), std::move(mul),
                          static_cast<Index>(A.zero() * nb + B.zero()),
                          static_cast<Index>(A.one() * nb + B.one()), std::move(names), opts);
}

/// Restriction of `parent` to a subset closed under +, *, negation and containing 0 and 1.
/// Returns the ring together with the embedding (sub index -> parent index).
inline std::pair<RingPtr, std::vector<Index>> subring_on(const FiniteRing& parent, const Subset& carrier,
                                                         std::string label) {
  const std::vector<Index> emb = carrier.members();
  std::vector<Index> local(parent.size(), kNoIndex);
  for (Index i = 0; i < emb.size(); ++i) local[emb[i]] = i;
  const std::size_t n = emb.size();
  std::vector<Index> add(n * n), mul(n * n);
  std::vector<std::string> names(n);
  for (Index i = 0; i < n; ++i) {
    names[i] = parent.name(emb[i]);
    for (Index j = 0; j < n; ++j) {
      const Index s = local[parent.add(emb[i], emb[j])];
      const Index p = local[parent.mul(emb[i], emb[j])];
      if (s == kNoIndex || p == kNoIndex)
        fail(ErrorKind::InvalidStructure, label + ": subset not closed under ring operations",
             {ring_entry(parent, "a", emb[i]), ring_entry(parent, "b", emb[j])});
      add[i * n + j] = s;
      mul[i * n + j] = p;
    }
  }
  if (local[parent.zero()] == kNoIndex || local[parent.one()] == kNoIndex)
    fail(ErrorKind::InvalidStructure, label + ": subset misses 0 or 1");
  RingOptions opts;
  opts.axioms_inherited = true;
  opts.allow_zero_ring = parent.is_zero_ring();
  auto ring = FiniteRing::make(std::move(label), n, std::move(add), std::move(mul), local[parent.zero()],
                               local[parent.one()], std::move(names), opts);
  return {std::move(ring), emb};
}

// ---------------------------------------------------------------------------
// Ideals

class Ideal {
 public:
  Ideal() = default;

  /// Validates zero membership, additive closure and absorption.
  static Ideal of(RingPtr ring, Subset members) {
    const FiniteRing& R = *ring;
    if (members.universe() != R.size()) fail(ErrorKind::NotAnIdeal, "subset universe differs from ring size");
    if (!members.contains(R.zero())) fail(ErrorKind::NotAnIdeal, "ideal must contain zero");
    const auto elems = members.members();
    for (Index a : elems) {
      for (Index b : elems)
        if (!members.contains(R.add(a, b)))
          fail(ErrorKind::NotAnIdeal, "not closed under addition", {ring_entry(R, "a", a), ring_entry(R, "b", b)});
      for (Index r = 0; r < R.size(); ++r)
        if (!members.contains(R.mul(r, a)))
          fail(ErrorKind::NotAnIdeal, "not absorbing", {ring_entry(R, "r", r), ring_entry(R, "i", a)});
    }
    Ideal I;
    I.ring_ = std::move(ring);
    I.members_ = std::move(members);
    return I;
  }

  static Ideal zero(RingPtr ring) {
    Subset s(ring->size());
    s.insert(ring->zero());
    return of(std::move(ring), std::move(s));
  }

  static Ideal whole(RingPtr ring) {
    const auto n = ring->size();
    return of(std::move(ring), Subset::full(n));
  }

  const RingPtr& ring() const noexcept { return ring_; }
  const Subset& members() const noexcept { return members_; }
  bool contains(Index i) const noexcept { return members_.contains(i); }
  std::size_t size() const noexcept { return members_.count(); }
  bool is_proper() const noexcept { return !members_.contains(ring_->one()); }
  bool is_zero() const noexcept { return members_.count() == 1; }

  friend bool operator==(const Ideal& a, const Ideal& b) noexcept { return a.members_ == b.members_; }

 private:
  RingPtr ring_;
  Subset members_;
};

namespace detail {

/// Closure of `seed` under addition and absorption in R.
inline Subset ideal_closure(const FiniteRing& R, const Subset& seed) {
  Subset out(R.size());
  out.insert(R.zero());
  std::vector<Index> work;
  auto push = [&](Index x) {
    if (!out.contains(x)) {
      out.insert(x);
      work.push_back(x);
    }
  };
  seed.for_each([&](Index g) {
    for (Index r = 0; r < R.size(); ++r) push(R.mul(r, g));
  });
  while (!work.empty()) {
    const Index x = work.back();
    work.pop_back();
    for (Index y : out.members()) push(R.add(x, y));
  }
  return out;
}

}  // namespace detail

inline Ideal ideal_generated(const RingPtr& ring, const std::vector<Index>& gens) {
  Subset seed(ring->size());
  for (Index g : gens) {
    if (g >= ring->size())
      fail(ErrorKind::BadElement, "generator " + std::to_string(g) + " outside " + ring->label());
    seed.insert(g);
  }
  return Ideal::of(ring, detail::ideal_closure(*ring, seed));
}

inline Ideal ideal_sum(const Ideal& I, const Ideal& J) {
  return Ideal::of(I.ring(), detail::ideal_closure(*I.ring(), I.members() | J.members()));
}

inline Ideal ideal_intersection(const Ideal& I, const Ideal& J) {
  return Ideal::of(I.ring(), I.members() & J.members());
}

inline Ideal ideal_product(const Ideal& I, const Ideal& J) {
  const FiniteRing& R = *I.ring();
  Subset seed(R.size());
  I.members().for_each([&](Index a) { J.members().for_each([&](Index b) { seed.insert(R.mul(a, b)); }); });
  return Ideal::of(I.ring(), detail::ideal_closure(R, seed));
}

/// {r : r^k in I for some k <= |R|}.
inline Ideal ideal_radical(const Ideal& I) {
  const FiniteRing& R = *I.ring();
  Subset rad(R.size());
  for (Index r = 0; r < R.size(); ++r) {
    Index p = r;
    for (std::size_t k = 1; k <= R.size(); ++k) {
      if (I.contains(p)) {
        rad.insert(r);
        break;
      }
      p = R.mul(p, r);
    }
  }
  return Ideal::of(I.ring(), std::move(rad));
}

/// All ideals, sorted by (size, members). Built as sums of principal ideals.
inline std::vector<Ideal> enumerate_ideals(const RingPtr& ring, const Budget& budget = {}) {
  const FiniteRing& R = *ring;
  budget.require(cube(R.size()), "enumerating ideals of " + R.label());
  std::vector<Subset> principal;
  std::unordered_set<Subset, SubsetHash> seen_principal;
  for (Index x = 0; x < R.size(); ++x) {
    Subset p(R.size());
    for (Index r = 0; r < R.size(); ++r) p.insert(R.mul(r, x));
    if (seen_principal.insert(p).second) principal.push_back(p);
  }
  std::unordered_set<Subset, SubsetHash> seen;
  std::vector<Subset> all;
  for (const auto& p : principal)
    if (seen.insert(p).second) all.push_back(p);
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (const auto& p : principal) {
      if (p.is_subset_of(all[i])) continue;
      Subset s(R.size());
      const auto a_members = all[i].members();
      p.for_each([&](Index y) {
        for (Index x : a_members) s.insert(R.add(x, y));
      });
      if (seen.insert(s).second) all.push_back(std::move(s));
    }
  }
  std::sort(all.begin(), all.end());
  std::vector<Ideal> out;
  out.reserve(all.size());
  for (auto& s : all) out.push_back(Ideal::of(ring, std::move(s)));
  return out;
}

inline Verdict is_prime_ideal(const Ideal& I) {
  if (!I.is_proper()) fail(ErrorKind::NotProper, "prime test needs a proper ideal");
  const FiniteRing& R = *I.ring();
  std::uint64_t iters = 0;
  for (Index a = 0; a < R.size(); ++a) {
    if (I.contains(a)) continue;
    for (Index b = 0; b < R.size(); ++b) {
      ++iters;
      if (I.contains(R.mul(a, b)) && !I.contains(b))
        return Verdict::no({ring_entry(R, "a", a), ring_entry(R, "b", b)}, iters);
    }
  }
  return Verdict::yes(iters);
}

/// abc in I implies ab, ac or bc in I. The zero ideal is accepted unless
/// `strict_nonzero` asks for the nonzero-ideal convention.
inline Verdict is_2absorbing_ideal(const Ideal& I, bool strict_nonzero = false, const Budget& budget = {}) {
  if (!I.is_proper()) fail(ErrorKind::NotProper, "2-absorbing test needs a proper ideal");
  if (strict_nonzero && I.is_zero()) fail(ErrorKind::ZeroIdealRejected, "zero ideal excluded by strict_nonzero");
  const FiniteRing& R = *I.ring();
  budget.require(cube(R.size()), "2-absorbing ideal test over " + R.label());
  std::uint64_t iters = 0;
  const Index n = static_cast<Index>(R.size());
  // The condition is symmetric, so the least violating triple is sorted.
  for (Index a = 0; a < n; ++a)
    for (Index b = a; b < n; ++b) {
      const Index ab = R.mul(a, b);
      if (I.contains(ab)) continue;
      for (Index c = b; c < n; ++c) {
        ++iters;
        if (!I.contains(R.mul(ab, c))) continue;
        if (I.contains(R.mul(a, c)) || I.contains(R.mul(b, c))) continue;
        return Verdict::no({ring_entry(R, "a", a), ring_entry(R, "b", b), ring_entry(R, "c", c)}, iters);
      }
    }
  return Verdict::yes(iters);
}

// ---------------------------------------------------------------------------
// Ring homomorphisms

class RingHom {
 public:
  RingHom() = default;

  /// Validates unitality, additivity and multiplicativity; the first violation
  /// (in that order, pairs in lexicographic order) is reported as NotAHom.
  static RingHom make(RingPtr dom, RingPtr cod, std::vector<Index> map) {
    const FiniteRing& A = *dom;
    const FiniteRing& B = *cod;
    if (map.size() != A.size())
      fail(ErrorKind::NotAHom, "map length " + std::to_string(map.size()) + " differs from |" + A.label() + "|");
    for (Index x = 0; x < map.size(); ++x)
      if (map[x] >= B.size()) fail(ErrorKind::NotAHom, "image outside codomain", {ring_entry(A, "x", x)});
    if (map[A.one()] != B.one()) fail(ErrorKind::NotAHom, "unitality: f(1) != 1", {ring_entry(A, "x", A.one())});
    for (Index a = 0; a < A.size(); ++a)
      for (Index b = 0; b < A.size(); ++b)
        if (map[A.add(a, b)] != B.add(map[a], map[b]))
          fail(ErrorKind::NotAHom, "additivity", {ring_entry(A, "a", a), ring_entry(A, "b", b)});
    for (Index a = 0; a < A.size(); ++a)
      for (Index b = 0; b < A.size(); ++b)
        if (map[A.mul(a, b)] != B.mul(map[a], map[b]))
          fail(ErrorKind::NotAHom, "multiplicativity", {ring_entry(A, "a", a), ring_entry(A, "b", b)});
    RingHom h;
    h.dom_ = std::move(dom);
    h.cod_ = std::move(cod);
    h.map_ = std::move(map);
    return h;
  }

  static RingHom identity(const RingPtr& ring) {
    std::vector<Index> map(ring->size());
    std::iota(map.begin(), map.end(), Index{0});
    return make(ring, ring, std::move(map));
  }

  const RingPtr& dom() const noexcept { return dom_; }
  const RingPtr& cod() const noexcept { return cod_; }
  const std::vector<Index>& map() const noexcept { return map_; }
  Index operator()(Index x) const noexcept { return map_[x]; }

  Subset image() const {
    Subset s(cod_->size());
    for (Index y : map_) s.insert(y);
    return s;
  }

  bool is_surjective() const { return image().is_full(); }
  bool is_injective() const { return image().count() == dom_->size(); }

  Ideal kernel() const {
    Subset k(dom_->size());
    for (Index x = 0; x < map_.size(); ++x)
      if (map_[x] == cod_->zero()) k.insert(x);
    return Ideal::of(dom_, std::move(k));
  }

  /// {x : f(x) in I} for an ideal I of the codomain.
  Ideal preimage(const Ideal& I) const {
    Subset k(dom_->size());
    for (Index x = 0; x < map_.size(); ++x)
      if (I.contains(map_[x])) k.insert(x);
    return Ideal::of(dom_, std::move(k));
  }

 private:
  RingPtr dom_;
  RingPtr cod_;
  std::vector<Index> map_;
};

/// Quotient with carrier = least index of each coset, plus the canonical projection.
struct QuotientRing {
  RingPtr ring;
  RingHom projection;
  std::vector<Index> representative;  // quotient index -> least element of the coset
};

inline QuotientRing quotient_ring(const RingPtr& ring, const Subset& ideal_members) {
  const Ideal I = Ideal::of(ring, ideal_members);
  const FiniteRing& R = *ring;
  std::vector<Index> coset(R.size(), kNoIndex);
  std::vector<Index> reps;
  for (Index x = 0; x < R.size(); ++x) {
    if (coset[x] != kNoIndex) continue;
    const Index c = static_cast<Index>(reps.size());
    reps.push_back(x);
    I.members().for_each([&](Index i) { coset[R.add(x, i)] = c; });
  }
  const std::size_t q = reps.size();
  std::vector<Index> add(q * q), mul(q * q);
  std::vector<std::string> names(q);
  for (Index a = 0; a < q; ++a) {
    names[a] = R.name(reps[a]);
    for (Index b = 0; b < q; ++b) {
      add[a * q + b] = coset[R.add(reps[a], reps[b])];
      mul[a * q + b] = coset[R.mul(reps[a], reps[b])];
    }
  }
  RingOptions opts;
  opts.axioms_inherited = true;
  opts.allow_zero_ring = true;
  std::string label = R.label() + "/(" + std::to_string(I.size()) + ")";
  auto Q = FiniteRing::make(std::move(label), q, std::move(add), std::move(mul), coset[R.zero()], coset[R.one()],
                            std::move(names), opts);
  auto proj = RingHom::make(ring, Q, coset);
  return QuotientRing{std::move(Q), std::move(proj), std::move(reps)};
}

inline QuotientRing quotient_ring(const Ideal& I) { return quotient_ring(I.ring(), I.members()); }

// ---------------------------------------------------------------------------
// Multiplicatively closed subsets

class MultSet {
 public:
  MultSet() = default;

  static MultSet of(RingPtr ring, Subset members) {
    const FiniteRing& R = *ring;
    if (members.universe() != R.size()) fail(ErrorKind::SNotMultClosed, "subset universe differs from ring size");
    if (!members.contains(R.one())) fail(ErrorKind::SNotMultClosed, "multiplicative set must contain 1");
    const auto elems = members.members();
    for (Index a : elems)
      for (Index b : elems)
        if (!members.contains(R.mul(a, b)))
          fail(ErrorKind::SNotMultClosed, "not closed under multiplication",
               {ring_entry(R, "s1", a), ring_entry(R, "s2", b)});
    MultSet S;
    S.ring_ = std::move(ring);
    S.members_ = std::move(members);
    return S;
  }

  /// Smallest multiplicatively closed set containing 1 and `gens`.
  static MultSet generated(RingPtr ring, const std::vector<Index>& gens) {
    const FiniteRing& R = *ring;
    Subset s(R.size());
    s.insert(R.one());
    std::vector<Index> work{R.one()};
    while (!work.empty()) {
      const Index x = work.back();
      work.pop_back();
      for (Index g : gens) {
        if (g >= R.size()) fail(ErrorKind::BadElement, "generator outside ring");
        const Index y = R.mul(x, g);
        if (!s.contains(y)) {
          s.insert(y);
          work.push_back(y);
        }
      }
    }
    return of(std::move(ring), std::move(s));
  }

  const RingPtr& ring() const noexcept { return ring_; }
  const Subset& members() const noexcept { return members_; }
  bool contains(Index i) const noexcept { return members_.contains(i); }
  std::size_t size() const noexcept { return members_.count(); }

  friend bool operator==(const MultSet& a, const MultSet& b) noexcept { return a.members_ == b.members_; }

 private:
  RingPtr ring_;
  Subset members_;
};

/// Distinct multiplicative sets generated by at most two elements, sorted.
inline std::vector<MultSet> enumerate_small_multsets(const RingPtr& ring) {
  const Index n = static_cast<Index>(ring->size());
  std::unordered_set<Subset, SubsetHash> seen;
  std::vector<Subset> sets;
  auto add = [&](const std::vector<Index>& gens) {
    auto S = MultSet::generated(ring, gens);
    if (seen.insert(S.members()).second) sets.push_back(S.members());
  };
  add({});
  for (Index a = 0; a < n; ++a) {
    add({a});
    for (Index b = a + 1; b < n; ++b) add({a, b});
  }
  std::sort(sets.begin(), sets.end());
  std::vector<MultSet> out;
  for (auto& s : sets) out.push_back(MultSet::of(ring, std::move(s)));
  return out;
}

// ---------------------------------------------------------------------------

/// f(R1) + J as a subring of the codomain of f.
struct Subring {
  RingPtr ring;
  std::vector<Index> embedding;  // sub index -> parent index
  std::vector<Index> index_of;   // parent index -> sub index or kNoIndex
};

inline Subring subring_f_plus_J(const RingHom& f, const Ideal& J) {
  const FiniteRing& B = *f.cod();
  if (!same_ring(J.ring(), f.cod())) fail(ErrorKind::NotAnIdeal, "J is not an ideal of the codomain of f");
  Subset carrier(B.size());
  for (Index r = 0; r < f.dom()->size(); ++r) J.members().for_each([&](Index j) { carrier.insert(B.add(f(r), j)); });
  auto [ring, emb] = subring_on(B, carrier, "f(" + f.dom()->label() + ")+J");
  std::vector<Index> index_of(B.size(), kNoIndex);
  for (Index i = 0; i < emb.size(); ++i) index_of[emb[i]] = i;
  return Subring{std::move(ring), std::move(emb), std::move(index_of)};
}

}  // namespace twoabs
