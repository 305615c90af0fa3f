#pragma once

#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "twoabs/homs.hpp"
#include "twoabs/instance_file.hpp"
#include "twoabs/verifier/instance.hpp"

namespace twoabs::verify {

inline InstanceSpec zmod_instance(std::size_t n) { return {"ring R1 = zmod " + std::to_string(n) + "\n", 0}; }

inline InstanceSpec product_instance(std::size_t a, std::size_t b) {
  std::ostringstream s;
  s << "ring A = zmod " << a << "\nring B = zmod " << b << "\nring R1 = product [A, B]\n";
  return {s.str(), 0};
}

/// Z_n (+) Z_d over Z_n for d dividing n; not cyclic.
inline InstanceSpec sum_instance(std::size_t n, std::size_t d) {
  std::ostringstream s;
  s << "ring R1 = zmod " << n << "\n"
    << "ideal D of R1 = generated {" << d << "}\n"
    << "ring Q = quotient R1 by D\n"
    << "hom q : R1 -> Q = canonical\n"
    << "module MQ over Q = regular\n"
    << "module B over R1 = restrict MQ along q\n"
    << "module A over R1 = regular\n"
    << "module M over R1 = sum [A, B]\n";
  return {s.str(), 0};
}

inline std::vector<InstanceSpec> sum_family() {
  std::vector<InstanceSpec> out;
  for (std::size_t n = 2; n <= 12; ++n)
    for (std::size_t d = 2; d <= n && n * d <= 12; ++d)
      if (n % d == 0) out.push_back(sum_instance(n, d));
  return out;
}

struct Bounds {
  std::size_t max_ring = 8;
  std::size_t max_module = 8;
  int max_attempts = 200;
};

namespace detail {

template <class T>
const T& choose(std::mt19937_64& rng, const std::vector<T>& v) {
  std::uniform_int_distribution<std::size_t> pick(0, v.size() - 1);
  return v[pick(rng)];
}

/// Declares a ring called `name` (helper bindings get the name as prefix).
inline std::string random_ring(std::mt19937_64& rng, const std::string& name, std::size_t max) {
  std::vector<std::string> options;
  for (std::size_t n = 2; n <= max; ++n) options.push_back(name + " = zmod " + std::to_string(n));
  for (std::size_t a = 2; a <= max; ++a)
    for (std::size_t b = a; a * b <= max; ++b)
      options.push_back("@product " + std::to_string(a) + " " + std::to_string(b));
  for (std::size_t a = 2; a <= 6; ++a)
    for (std::size_t b = a; b <= 6; ++b)
      for (std::size_t g = 2; g < a; ++g)
        if (a % g == 0 && g * b <= max) options.push_back("@quotient " + std::to_string(a) + " " + std::to_string(b) + " " + std::to_string(g));
  if (options.empty()) return {};
  const std::string choice = choose(rng, options);
  std::istringstream in(choice);
  std::string kind;
  in >> kind;
  if (kind == "@product") {
    std::size_t a, b;
    in >> a >> b;
    return "ring " + name + "a = zmod " + std::to_string(a) + "\nring " + name + "b = zmod " + std::to_string(b) +
           "\nring " + name + " = product [" + name + "a, " + name + "b]\n";
  }
  if (kind == "@quotient") {
    // (Z_a x Z_b) / ((g,0)), isomorphic to Z_g x Z_b.
    std::size_t a, b, g;
    in >> a >> b >> g;
    return "ring " + name + "a = zmod " + std::to_string(a) + "\nring " + name + "b = zmod " + std::to_string(b) +
           "\nring " + name + "p = product [" + name + "a, " + name + "b]\nideal " + name + "i of " + name +
           "p = generated {(" + std::to_string(g) + ",0)}\nring " + name + " = quotient " + name + "p by " + name + "i\n";
  }
  return "ring " + choice + "\n";
}

}  // namespace detail

/// Reproducible random instance: rings from zmod / products / quotients,
/// a random hom f, ideal J and module hom phi among the enumerated ones.
inline InstanceSpec random_instance(std::uint64_t seed, const Bounds& bounds = {}) {
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < bounds.max_attempts; ++attempt) {
    const std::size_t cap = std::min(bounds.max_ring, bounds.max_module);
    const std::string r1 = detail::random_ring(rng, "R1", cap), r2 = detail::random_ring(rng, "R2", cap);
    if (r1.empty() || r2.empty()) continue;
    std::string text = r1 + r2;
    InstanceFile base = parse_instance_text(text);
    const RingPtr R1 = base.rings.at("R1"), R2 = base.rings.at("R2");
    if (R1->size() > cap || R2->size() > cap) continue;
    const auto homs = enumerate_ring_homs(R1, R2);
    if (homs.empty()) continue;
    const RingHom& f = detail::choose(rng, homs);
    const auto ideals = enumerate_ideals(R2);
    const Ideal& J = detail::choose(rng, ideals);
    const ModulePtr M = regular_module(R1), N = regular_module(R2);
    const auto phis = enumerate_module_homs(f, M, N);
    if (phis.empty()) continue;
    const ModuleHom& phi = detail::choose(rng, phis);
    text += "hom f : R1 -> R2 = map " + list_literal(f.map()) + "\n";
    text += "ideal J of R2 = " + set_literal(J.members()) + "\n";
    text += "module M over R1 = regular\nmodule N over R2 = regular\n";
    text += "modhom phi : M -> N over f = map " + list_literal(phi.map()) + "\n";
    InstanceSpec spec{text, seed};
    Instance check(spec, Budget{});
    return spec;
  }
  fail(ErrorKind::NoValidInstance, "no valid instance after " + std::to_string(bounds.max_attempts) + " attempts");
}

namespace detail {

inline std::pair<std::size_t, std::size_t> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const auto v = std::stoul(text);
      return {v, v};
    }
    return {std::stoul(text.substr(0, dots)), std::stoul(text.substr(dots + 2))};
  } catch (const std::exception&) {
    fail(ErrorKind::ParseError, "bad range '" + text + "'");
  }
}

}  // namespace detail

/// Expands a family description. Parts are joined with ',':
///   zmod:A..B        Z_n for A <= n <= B
///   products:A..B    Z_a x Z_b for A <= a <= b <= B
///   sums             Z_n (+) Z_d over Z_n with d | n, n d <= 12
///   random:C[:SEED[:MAX]]  C random instances with rings of size <= MAX
///   acceptance       zmod:2..12,products:2..4
inline std::vector<InstanceSpec> expand_family(const std::string& family, std::uint64_t default_seed = 1) {
  std::vector<InstanceSpec> out;
  std::istringstream in(family);
  std::string part;
  while (std::getline(in, part, ',')) {
    if (part.empty()) continue;
    const auto colon = part.find(':');
    const std::string kind = part.substr(0, colon);
    const std::string rest = colon == std::string::npos ? "" : part.substr(colon + 1);
    if (kind == "zmod") {
      const auto [a, b] = detail::parse_range(rest);
      for (std::size_t n = std::max<std::size_t>(a, 2); n <= b; ++n) out.push_back(zmod_instance(n));
    } else if (kind == "products") {
      const auto [a, b] = detail::parse_range(rest);
      for (std::size_t x = std::max<std::size_t>(a, 2); x <= b; ++x)
        for (std::size_t y = x; y <= b; ++y) out.push_back(product_instance(x, y));
    } else if (kind == "sums") {
      for (auto& s : sum_family()) out.push_back(std::move(s));
    } else if (kind == "random") {
      std::istringstream r(rest);
      std::string count, seed, max;
      std::getline(r, count, ':');
      std::getline(r, seed, ':');
      std::getline(r, max, ':');
      try {
        const std::size_t c = std::stoul(count);
        const std::uint64_t s = seed.empty() ? default_seed : std::stoull(seed);
        Bounds bounds;
        if (!max.empty()) bounds.max_ring = bounds.max_module = std::stoul(max);
        for (std::size_t i = 0; i < c; ++i) out.push_back(random_instance(s + i, bounds));
      } catch (const std::logic_error&) {
        fail(ErrorKind::ParseError, "bad random family '" + part + "'");
      }
    } else if (kind == "acceptance") {
      for (auto& s : expand_family("zmod:2..12,products:2..4")) out.push_back(std::move(s));
    } else {
      fail(ErrorKind::ParseError, "unknown family '" + part + "'");
    }
  }
  if (out.empty()) fail(ErrorKind::ParseError, "family '" + family + "' is empty");
  return out;
}

}  // namespace twoabs::verify
