#pragma once

#include <cstdint>
#include <cstdio>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "twoabs/budget.hpp"
#include "twoabs/constructions.hpp"
#include "twoabs/instance_file.hpp"
#include "twoabs/predicates.hpp"
#include "twoabs/verifier/catalog.hpp"

namespace twoabs::verify {

inline std::string fnv1a_hex(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

/// An instance is its instance-file text; the seed only matters for
/// instances that were drawn at random and is kept for provenance.
struct InstanceSpec {
  std::string source;
  std::uint64_t seed = 0;

  std::string digest() const { return fnv1a_hex(source); }
  bool operator==(const InstanceSpec&) const = default;
};

struct Counterexample {
  std::string case_label;
  InstanceSpec spec;  // the instance with every enumerated role pinned
  Witness witness;
  std::string detail;
};

struct StatementReport {
  StatementId id{};
  std::size_t instances = 0;
  std::size_t cases = 0;
  std::size_t hypotheses_satisfied = 0;
  std::size_t confirmed = 0;
  std::size_t hypothesis_failed = 0;
  std::size_t skipped = 0;
  std::uint64_t iterations = 0;
  std::vector<Counterexample> counterexamples;
  std::vector<std::string> flags;

  bool holds() const { return counterexamples.empty(); }

  void merge(const StatementReport& o) {
    instances += o.instances;
    cases += o.cases;
    hypotheses_satisfied += o.hypotheses_satisfied;
    confirmed += o.confirmed;
    hypothesis_failed += o.hypothesis_failed;
    skipped += o.skipped;
    iterations += o.iterations;
    counterexamples.insert(counterexamples.end(), o.counterexamples.begin(), o.counterexamples.end());
    for (const auto& f : o.flags)
      if (std::find(flags.begin(), flags.end(), f) == flags.end()) flags.push_back(f);
  }
};

using Pins = std::vector<std::pair<std::string, std::vector<Index>>>;

inline std::string pin_lines(const Pins& pins) {
  std::string out;
  for (const auto& [role, v] : pins) {
    out += "pin " + role + " = {";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
    out += "}\n";
  }
  return out;
}

/// Resolved objects of an instance file under the conventional names
/// R1, R2, f, J, M, N, phi; absent roles fall back to defaults or enumeration.
class Instance {
 public:
  Instance(const InstanceSpec& spec, Budget budget) : spec_(spec), budget_(budget) {
    file_ = parse_instance_text(spec.source);
    if (file_.rings.count("R1")) R1 = file_.rings.at("R1");
    else if (file_.modules.count("M")) R1 = file_.modules.at("M")->ring();
    else fail(ErrorKind::ValidationError, "instance declares neither R1 nor M");
    R2 = file_.rings.count("R2") ? file_.rings.at("R2") : R1;
    if (file_.homs.count("f")) f = file_.homs.at("f");
    else if (same_ring(R1, R2)) f = RingHom::identity(R1);
    else fail(ErrorKind::ValidationError, "R1 and R2 differ, so the instance must declare hom f");
    if (!same_ring(f.dom(), R1) || !same_ring(f.cod(), R2)) fail(ErrorKind::ValidationError, "f must map R1 to R2");
    M = file_.modules.count("M") ? file_.modules.at("M") : regular_module(R1);
    if (!same_ring(M->ring(), R1)) fail(ErrorKind::ValidationError, "M must be a module over R1");
    if (file_.modules.count("N")) N = file_.modules.at("N");
    else if (same_ring(R1, R2) && f.map() == RingHom::identity(R1).map()) N = M;
    else N = regular_module(R2);
    if (!same_ring(N->ring(), R2)) fail(ErrorKind::ValidationError, "N must be a module over R2");
    if (file_.modhoms.count("phi")) {
      phi = file_.modhoms.at("phi");
    } else if (same_module(M, N) && f.map() == RingHom::identity(R1).map()) {
      phi = ModuleHom::make(f, M, N, ModuleHom::identity(M).map());
    } else {
      fail(ErrorKind::ValidationError, "the instance must declare modhom phi : M -> N over f");
    }
    if (!same_module(phi.dom(), M) || !same_module(phi.cod(), N) || phi.ring_map().map() != f.map())
      fail(ErrorKind::ValidationError, "phi must be a homomorphism M -> N over f");
  }

  const InstanceSpec& spec() const { return spec_; }
  const InstanceFile& file() const { return file_; }
  const Budget& budget() const { return budget_; }

  bool has_binding(const std::string& name) const { return file_.declared(name); }

  std::optional<std::vector<Index>> pin(const std::string& role) const {
    auto it = file_.pins.find(role);
    if (it == file_.pins.end()) return std::nullopt;
    return it->second;
  }

  /// Role `role` as submodules of `mod`: the binding, the pin, or every submodule.
  std::vector<Submodule> submodules(const std::string& role, const ModulePtr& mod) {
    if (auto it = file_.submodules.find(role); it != file_.submodules.end()) {
      if (!same_module(it->second.module(), mod))
        fail(ErrorKind::ValidationError, "binding " + role + " is not a submodule of " + mod->label());
      return {Submodule::of(mod, it->second.members())};
    }
    if (auto p = pin(role)) return {Submodule::of(mod, Subset::from_indices(mod->size(), *p))};
    return lattice(mod);
  }

  std::vector<Ideal> ideals(const std::string& role, const RingPtr& ring) {
    if (auto it = file_.ideals.find(role); it != file_.ideals.end() && same_ring(it->second.ring(), ring))
      return {Ideal::of(ring, it->second.members())};
    if (auto p = pin(role)) return {Ideal::of(ring, Subset::from_indices(ring->size(), *p))};
    return enumerate_ideals(ring, budget_);
  }

  std::vector<Index> elements(const std::string& role, const RingPtr& ring) {
    if (auto it = file_.elements.find(role); it != file_.elements.end()) {
      if (!same_ring(file_.rings.at(it->second.first), ring))
        fail(ErrorKind::ValidationError, "element " + role + " lives in the wrong ring");
      return {it->second.second};
    }
    if (auto p = pin(role)) {
      if (p->size() != 1 || p->front() >= ring->size()) fail(ErrorKind::ValidationError, "pin " + role + " must hold one element");
      return {p->front()};
    }
    std::vector<Index> all(ring->size());
    for (Index i = 0; i < all.size(); ++i) all[i] = i;
    return all;
  }

  std::vector<MultSet> multsets(const std::string& role, const RingPtr& ring) {
    if (auto it = file_.multsets.find(role); it != file_.multsets.end()) {
      if (!same_ring(it->second.ring(), ring)) fail(ErrorKind::ValidationError, "multset " + role + " is not over " + ring->label());
      return {it->second};
    }
    if (auto p = pin(role)) return {MultSet::of(ring, Subset::from_indices(ring->size(), *p))};
    return enumerate_small_multsets(ring);
  }

  /// Chains of proper submodules of M, strictly increasing, length 1..3.
  std::vector<std::vector<Submodule>> chains(const std::string& role) {
    if (auto it = file_.chains.find(role); it != file_.chains.end()) {
      std::vector<Submodule> c;
      for (const auto& F : it->second) {
        if (!same_module(F.module(), M)) fail(ErrorKind::ValidationError, "chain " + role + " is not in M");
        c.push_back(F);
      }
      return {c};
    }
    if (pin(role + ".1")) {
      std::vector<Submodule> c;
      for (int k = 1; auto p = pin(role + "." + std::to_string(k)); ++k)
        c.push_back(Submodule::of(M, Subset::from_indices(M->size(), *p)));
      validate_chain(c);
      return {c};
    }
    std::vector<Submodule> proper;
    for (const auto& F : lattice(M))
      if (F.is_proper()) proper.push_back(F);
    std::vector<std::vector<Submodule>> out;
    auto strictly_below = [](const Submodule& a, const Submodule& b) {
      return a.size() < b.size() && a.members().is_subset_of(b.members());
    };
    for (std::size_t i = 0; i < proper.size(); ++i) {
      out.push_back({proper[i]});
      for (std::size_t j = 0; j < proper.size(); ++j) {
        if (!strictly_below(proper[i], proper[j])) continue;
        out.push_back({proper[i], proper[j]});
        for (std::size_t k = 0; k < proper.size(); ++k)
          if (strictly_below(proper[j], proper[k])) out.push_back({proper[i], proper[j], proper[k]});
      }
    }
    return out;
  }

  const std::vector<Submodule>& lattice(const ModulePtr& mod) {
    auto it = lattices_.find(mod.get());
    if (it == lattices_.end()) {
      it = lattices_.emplace(mod.get(), enumerate_submodules(mod, budget_)).first;
      keep_.push_back(mod);
    }
    return it->second;
  }

  RingPtr R1, R2;
  RingHom f;
  ModulePtr M, N;
  ModuleHom phi;

 private:
  InstanceSpec spec_;
  Budget budget_;
  InstanceFile file_;
  std::map<const FiniteModule*, std::vector<Submodule>> lattices_;
  std::vector<ModulePtr> keep_;
};

/// Collects case outcomes for one statement on one instance.
class Recorder {
 public:
  Recorder(StatementId id, const Instance& inst) : inst_(inst) {
    report_.id = id;
    report_.instances = 1;
  }

  StatementReport& report() { return report_; }
  const Budget& budget() const { return inst_.budget(); }

  void hypothesis_failed() {
    ++report_.cases;
    ++report_.hypothesis_failed;
  }

  void confirmed() {
    ++report_.cases;
    ++report_.hypotheses_satisfied;
    ++report_.confirmed;
  }

  void skipped() {
    ++report_.cases;
    ++report_.skipped;
  }

  void counterexample(const std::string& label, const Pins& pins, Witness w, std::string detail) {
    ++report_.cases;
    ++report_.hypotheses_satisfied;
    std::string src = inst_.spec().source;
    if (!src.empty() && src.back() != '\n') src += "\n";
    Pins fresh;
    for (const auto& p : pins)
      if (!inst_.has_binding(p.first)) fresh.push_back(p);
    src += pin_lines(fresh);
    report_.counterexamples.push_back({label, InstanceSpec{src, inst_.spec().seed}, std::move(w), std::move(detail)});
  }

  void flag(const std::string& f) {
    if (std::find(report_.flags.begin(), report_.flags.end(), f) == report_.flags.end()) report_.flags.push_back(f);
  }

  void count(std::uint64_t iterations) { report_.iterations += iterations; }

  /// Runs one case; budget refusals count as skipped cases.
  template <class Fn>
  void run(Fn&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::BudgetExceeded) throw;
      skipped();
    }
  }

 private:
  const Instance& inst_;
  StatementReport report_;
};

}  // namespace twoabs::verify
