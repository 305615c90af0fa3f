#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

#include "twoabs/error.hpp"

namespace twoabs {

/// Fixed-universe bitset over carrier indices 0..n-1.
class Subset {
 public:
  Subset() = default;
  explicit Subset(std::size_t universe) : n_(universe), words_((universe + 63) / 64, 0) {}

  Subset(std::size_t universe, std::initializer_list<Index> members) : Subset(universe) {
    for (Index i : members) insert(i);
  }

  static Subset full(std::size_t universe) {
    Subset s(universe);
    for (std::size_t i = 0; i < universe; ++i) s.insert(static_cast<Index>(i));
    return s;
  }

  static Subset from_indices(std::size_t universe, const std::vector<Index>& members) {
    Subset s(universe);
    for (Index i : members) s.insert(i);
    return s;
  }

  std::size_t universe() const noexcept { return n_; }

  bool contains(Index i) const noexcept {
    return i < n_ && ((words_[i >> 6] >> (i & 63)) & 1u) != 0;
  }

  void insert(Index i) {
    if (i >= n_) fail(ErrorKind::BadElement, "index " + std::to_string(i) + " outside carrier of size " + std::to_string(n_));
    words_[i >> 6] |= (std::uint64_t{1} << (i & 63));
  }

  void erase(Index i) {
    if (i < n_) words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool empty() const noexcept { return count() == 0; }
  bool is_full() const noexcept { return count() == n_; }

  bool is_subset_of(const Subset& other) const noexcept {
    if (other.n_ != n_) return false;
    for (std::size_t k = 0; k < words_.size(); ++k)
      if ((words_[k] & ~other.words_[k]) != 0) return false;
    return true;
  }

  bool intersects(const Subset& other) const noexcept {
    for (std::size_t k = 0; k < std::min(words_.size(), other.words_.size()); ++k)
      if ((words_[k] & other.words_[k]) != 0) return true;
    return false;
  }

  Subset operator&(const Subset& other) const {
    Subset r(n_);
    for (std::size_t k = 0; k < words_.size(); ++k) r.words_[k] = words_[k] & other.words_[k];
    return r;
  }

  Subset operator|(const Subset& other) const {
    Subset r(n_);
    for (std::size_t k = 0; k < words_.size(); ++k) r.words_[k] = words_[k] | other.words_[k];
    return r;
  }

  std::vector<Index> members() const {
    std::vector<Index> out;
    out.reserve(count());
    for (std::size_t k = 0; k < words_.size(); ++k) {
      std::uint64_t w = words_[k];
      while (w != 0) {
        const int bit = std::countr_zero(w);
        out.push_back(static_cast<Index>(k * 64 + static_cast<std::size_t>(bit)));
        w &= w - 1;
      }
    }
    return out;
  }

  template <class Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      std::uint64_t w = words_[k];
      while (w != 0) {
        const int bit = std::countr_zero(w);
        fn(static_cast<Index>(k * 64 + static_cast<std::size_t>(bit)));
        w &= w - 1;
      }
    }
  }

  std::size_t hash() const noexcept {
    std::size_t h = 1469598103934665603ull ^ n_;
    for (auto w : words_) h = (h ^ static_cast<std::size_t>(w)) * 1099511628211ull;
    return h;
  }

  friend bool operator==(const Subset& a, const Subset& b) noexcept {
    return a.n_ == b.n_ && a.words_ == b.words_;
  }

  /// Canonical order: by cardinality, then lexicographically by sorted member list.
  friend std::strong_ordering operator<=>(const Subset& a, const Subset& b) {
    if (auto c = a.count() <=> b.count(); c != 0) return c;
    const auto ma = a.members();
    const auto mb = b.members();
    return std::lexicographical_compare_three_way(ma.begin(), ma.end(), mb.begin(), mb.end());
  }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

struct SubsetHash {
  std::size_t operator()(const Subset& s) const noexcept { return s.hash(); }
};

}  // namespace twoabs
