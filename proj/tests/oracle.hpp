#pragma once

// Reference computations in plain integer arithmetic. Nothing here touches
// the library's tables; tests compare library output against these.

#include <array>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

inline int omega(int n) {
  int k = 0;
  for (int p = 2; p * p <= n; ++p)
    while (n % p == 0) {
      n /= p;
      ++k;
    }
  return k + (n > 1 ? 1 : 0);
}

inline bool is_prime(int n) { return n >= 2 && omega(n) == 1; }

inline std::vector<int> divisors(int n) {
  std::vector<int> d;
  for (int k = 1; k <= n; ++k)
    if (n % k == 0) d.push_back(k);
  return d;
}

/// Members of the ideal (d) in Z_n.
inline std::set<int> zn_ideal(int n, int d) {
  std::set<int> s;
  const int g = std::gcd(d, n);
  for (int k = 0; k < n; k += g) s.insert(k);
  return s;
}

/// (g) in Z_n for g | n, g < n, is 2-absorbing iff Z_g has at most two prime factors.
inline bool zn_ideal_2absorbing_formula(int g) { return g > 1 && omega(g) <= 2; }

inline bool zn_ideal_2absorbing_brute(int n, int g) {
  auto in = [&](long x) { return (x % n) % g == 0; };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (in(long(a) * b * c) && !in(long(a) * b) && !in(long(a) * c) && !in(long(b) * c)) return false;
  return true;
}

/// Lexicographically least (a, b, m) violating 2-absorption for (g) as a
/// submodule of the regular Z_n-module.
inline std::optional<std::array<int, 3>> zn_2absorbing_witness(int n, int g) {
  auto in = [&](long x) { return (x % n) % g == 0; };
  // (F :_R M) = (g) for the regular module.
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int m = 0; m < n; ++m)
        if (in(long(a) * b * m) && !in(long(a) * b) && !in(long(a) * m) && !in(long(b) * m))
          return std::array<int, 3>{a, b, m};
  return std::nullopt;
}

/// Elements of Z_n (+) Z_d over Z_n: (x, y); F given as a membership predicate.
struct SumModule {
  int n, d;
  std::function<bool(int, int)> in_F;

  bool in_colon(int r) const {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < d; ++y)
        if (!in_F(r * x % n, r * y % d)) return false;
    return true;
  }

  bool is_2absorbing() const {
    std::vector<bool> colon(n);
    for (int r = 0; r < n; ++r) colon[r] = in_colon(r);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int x = 0; x < n; ++x)
          for (int y = 0; y < d; ++y) {
            const int ab = a * b % n;
            if (!in_F(ab * x % n, ab * y % d)) continue;
            if (colon[ab] || in_F(a * x % n, a * y % d) || in_F(b * x % n, b * y % d)) continue;
            return false;
          }
    return true;
  }

  bool is_prime() const {
    for (int a = 0; a < n; ++a)
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < d; ++y)
          if (in_F(a * x % n, a * y % d) && !in_colon(a) && !in_F(x, y)) return false;
    return true;
  }
};

/// Kernel of Z_n -> S^-1 Z_n: {r : s r = 0 for some s in S}.
inline std::set<int> zn_localization_kernel(int n, const std::vector<int>& S) {
  std::set<int> k;
  for (int r = 0; r < n; ++r)
    for (int s : S)
      if (s * r % n == 0) k.insert(r);
  return k;
}

/// Number of classes of pairs (r, s) under (r, s) ~ (r', s') iff u (s' r - s r') = 0 for some u in S.
inline int zn_localization_size(int n, const std::vector<int>& S) {
  std::vector<std::pair<int, int>> reps;
  for (int r = 0; r < n; ++r)
    for (int s : S) {
      bool found = false;
      for (auto [r2, s2] : reps) {
        for (int u : S)
          if (((u * (s2 * r - s * r2)) % n + n) % n == 0) {
            found = true;
            break;
          }
        if (found) break;
      }
      if (!found) reps.emplace_back(r, s);
    }
  return static_cast<int>(reps.size());
}

/// Pairs (r, r + j) for r in Z_n, j in J.
inline std::set<std::pair<int, int>> zn_amalgamation(int n, const std::set<int>& J) {
  std::set<std::pair<int, int>> out;
  for (int r = 0; r < n; ++r)
    for (int j : J) out.insert({r, (r + j) % n});
  return out;
}

/// Pairs (m, m') with m - m' in J (the duplication of Z_n along J, since J Z_n = J).
inline std::set<std::pair<int, int>> zn_duplication(int n, const std::set<int>& J) {
  std::set<std::pair<int, int>> out;
  for (int m = 0; m < n; ++m)
    for (int m2 = 0; m2 < n; ++m2)
      if (J.count(((m - m2) % n + n) % n)) out.insert({m, m2});
  return out;
}

/// Unital ring homs Z_m -> Z_n: one when n | m, none otherwise.
inline int zn_hom_count(int m, int n) { return m % n == 0 ? 1 : 0; }

/// Z_m-module homs Z_m -> Z_n over the identity: determined by the image e of 1, with m e = 0 in Z_n.
inline int zn_module_hom_count(int m, int n) {
  int c = 0;
  for (int e = 0; e < n; ++e)
    if (long(m) * e % n == 0) ++c;
  return c;
}

}  // namespace oracle
