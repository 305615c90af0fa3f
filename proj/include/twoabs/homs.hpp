#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "twoabs/module.hpp"
#include "twoabs/ring.hpp"

namespace twoabs {

namespace detail {

/// Greedy additive generating set, starting from `first`.
template <class Add>
std::vector<Index> additive_generators(std::size_t n, Index zero, Index first, Add add) {
  std::vector<Index> gens;
  Subset span(n);
  span.insert(zero);
  auto extend = [&](Index g) {
    gens.push_back(g);
    std::vector<Index> work = span.members();
    while (!work.empty()) {
      const Index x = work.back();
      work.pop_back();
      for (Index h : gens) {
        const Index y = add(x, h);
        if (!span.contains(y)) {
          span.insert(y);
          work.push_back(y);
        }
      }
    }
  };
  extend(first);
  for (Index x = 0; x < n; ++x)
    if (!span.contains(x)) extend(x);
  return gens;
}

/// Extends generator images to a full additive map; nullopt when inconsistent.
template <class AddSrc, class AddDst>
std::optional<std::vector<Index>> extend_additive(std::size_t n, Index zero_src, Index zero_dst,
                                                  const std::vector<Index>& gens, const std::vector<Index>& images,
                                                  AddSrc add_src, AddDst add_dst) {
  std::vector<Index> val(n, kNoIndex);
  val[zero_src] = zero_dst;
  std::vector<Index> work{zero_src};
  while (!work.empty()) {
    const Index x = work.back();
    work.pop_back();
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const Index y = add_src(x, gens[i]);
      const Index v = add_dst(val[x], images[i]);
      if (val[y] == kNoIndex) {
        val[y] = v;
        work.push_back(y);
      } else if (val[y] != v) {
        return std::nullopt;
      }
    }
  }
  return val;
}

/// Calls `visit` on every tuple in targets^k (odometer order, first entry fixed to `first_fixed` if given).
inline void for_each_tuple(std::size_t k, std::size_t targets, std::optional<Index> first_fixed,
                           const std::function<void(const std::vector<Index>&)>& visit) {
  std::vector<Index> t(k, 0);
  if (first_fixed && k > 0) t[0] = *first_fixed;
  while (true) {
    visit(t);
    std::size_t pos = k;
    while (pos > 0) {
      --pos;
      if (pos == 0 && first_fixed) return;
      if (++t[pos] < targets) break;
      t[pos] = 0;
      if (pos == 0) return;
    }
    if (k == 0) return;
  }
}

}  // namespace detail

/// All unital ring homomorphisms A -> B, by brute force over images of an
/// additive generating set (the first generator is 1 and must map to 1).
inline std::vector<RingHom> enumerate_ring_homs(const RingPtr& A, const RingPtr& B) {
  const auto gens = detail::additive_generators(A->size(), A->zero(), A->one(),
                                                [&](Index x, Index y) { return A->add(x, y); });
  std::vector<RingHom> out;
  detail::for_each_tuple(gens.size(), B->size(), B->one(), [&](const std::vector<Index>& images) {
    auto map = detail::extend_additive(
        A->size(), A->zero(), B->zero(), gens, images, [&](Index x, Index y) { return A->add(x, y); },
        [&](Index x, Index y) { return B->add(x, y); });
    if (!map) return;
    try {
      out.push_back(RingHom::make(A, B, std::move(*map)));
    } catch (const Error&) {
    }
  });
  return out;
}

/// All module homomorphisms M -> N over f.
inline std::vector<ModuleHom> enumerate_module_homs(const RingHom& f, const ModulePtr& M, const ModulePtr& N) {
  const auto gens = detail::additive_generators(M->size(), M->zero(), M->size() > 1 ? Index{1} : M->zero(),
                                                [&](Index x, Index y) { return M->add(x, y); });
  std::vector<ModuleHom> out;
  if (M->size() == 1) {
    out.push_back(ModuleHom::make(f, M, N, {N->zero()}));
    return out;
  }
  detail::for_each_tuple(gens.size(), N->size(), std::nullopt, [&](const std::vector<Index>& images) {
    auto map = detail::extend_additive(
        M->size(), M->zero(), N->zero(), gens, images, [&](Index x, Index y) { return M->add(x, y); },
        [&](Index x, Index y) { return N->add(x, y); });
    if (!map) return;
    try {
      out.push_back(ModuleHom::make(f, M, N, std::move(*map)));
    } catch (const Error&) {
    }
  });
  return out;
}

}  // namespace twoabs
