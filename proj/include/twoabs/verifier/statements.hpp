#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "twoabs/constructions.hpp"
#include "twoabs/localization.hpp"
#include "twoabs/predicates.hpp"
#include "twoabs/verifier/catalog.hpp"
#include "twoabs/verifier/instance.hpp"

namespace twoabs::verify {

namespace detail {

inline std::vector<Index> idx(const Subset& s) { return s.members(); }

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

/// Predicates with improper inputs answered "no" (the definitions require properness).
class Checks {
 public:
  explicit Checks(Recorder& rec) : rec_(rec) {}

  Verdict sub2(const Submodule& F) {
    if (!F.is_proper()) return Verdict::no({});
    Verdict v = is_2absorbing_submodule(F, rec_.budget());
    rec_.count(v.iterations);
    return v;
  }

  Verdict prime(const Submodule& F) {
    if (!F.is_proper()) return Verdict::no({});
    Verdict v = is_prime_submodule(F);
    rec_.count(v.iterations);
    return v;
  }

  Verdict ideal2(const Ideal& I) {
    if (!I.is_proper()) return Verdict::no({});
    Verdict v = is_2absorbing_ideal(I, false, rec_.budget());
    rec_.count(v.iterations);
    return v;
  }

 private:
  Recorder& rec_;
};

/// Amalgamated contexts for one (f, phi), built lazily per ideal J, with
/// memoized 2-absorbing verdicts of F |><| JN keyed by the members of F.
class AmalgCache {
 public:
  struct Slot {
    std::optional<AmalgContext> ctx;
    std::optional<Error> error;
    std::map<Subset, Verdict> memo;
  };

  AmalgCache(RingHom f, ModuleHom phi, Budget budget) : f_(std::move(f)), phi_(std::move(phi)), budget_(budget) {}

  /// Throws BudgetExceeded when checking inside the amalgamation would exceed the budget.
  Slot& at(const Ideal& J) {
    auto it = slots_.find(J.members());
    if (it == slots_.end()) {
      Slot s;
      const Submodule JN = ideal_times_module(J, phi_.cod());
      const std::uint64_t rs = std::uint64_t{f_.dom()->size()} * J.size();
      const std::uint64_t ms = std::uint64_t{phi_.dom()->size()} * JN.size();
      if (!budget_.allows(rs * rs * ms))
        s.error = Error(ErrorKind::BudgetExceeded, "amalgamation over J of size " + std::to_string(J.size()));
      else
        s.ctx = amalgamated_module(f_, J, phi_);
      it = slots_.emplace(J.members(), std::move(s)).first;
    }
    if (it->second.error) throw *it->second.error;
    return it->second;
  }

  Verdict bowtie2(const Ideal& J, const Submodule& F, Recorder& rec) {
    Slot& s = at(J);
    auto m = s.memo.find(F.members());
    if (m != s.memo.end()) return m->second;
    const Submodule B = amalgam_submodule(*s.ctx, F);
    Verdict v = Checks(rec).sub2(B);
    s.memo.emplace(F.members(), v);
    return v;
  }

 private:
  RingHom f_;
  ModuleHom phi_;
  Budget budget_;
  std::map<Subset, Slot> slots_;
};

inline Pins pins_of(std::initializer_list<std::pair<std::string, std::vector<Index>>> items) { return Pins(items); }

inline std::string iff_detail(const std::string& left, bool l, const std::string& right, bool r) {
  return left + ": " + yes_no(l) + ", " + right + ": " + yes_no(r);
}

/// The conclusion "F |><|^phi JN is 2-absorbing" for every J; `hyp` decides the hypothesis.
inline void amalg_conclusion(Instance& inst, Recorder& rec, AmalgCache& cache, const std::string& label, Pins pins,
                             const Submodule& F, bool hyp) {
  for (const Ideal& J : inst.ideals("J", inst.R2)) {
    rec.run([&] {
      if (!hyp) return rec.hypothesis_failed();
      const Verdict v = cache.bowtie2(J, F, rec);
      if (v.holds) return rec.confirmed();
      Pins p = pins;
      p.push_back({"J", idx(J.members())});
      rec.counterexample(label, p, v.witness,
                         F.is_proper() ? "F |><| JN is not 2-absorbing" : "F |><| JN is not proper");
    });
  }
}

inline Subset product_subset(const FiniteModule& A, const Subset& FA, const FiniteModule& B, const Subset& FB) {
  Subset s(A.size() * B.size());
  FA.for_each([&](Index a) { FB.for_each([&](Index b) { s.insert(static_cast<Index>(a * B.size() + b)); }); });
  return s;
}

inline bool colon_meets(const Ideal& colon, const MultSet& S) { return colon.members().intersects(S.members()); }

struct LocalCache {
  LocalizedRing L;
  LocalizedModule LM;
};

// ---------------------------------------------------------------------------
// Module-level statements

inline void check_P2_1(Instance& inst, Recorder& rec) {
  rec.flag("ideal reading: (F :_R K1) is tested as a 2-absorbing ideal of R");
  Checks c(rec);
  for (const auto& F : inst.submodules("F", inst.M))
    for (const auto& K : inst.submodules("K", inst.M))
      rec.run([&] {
        if (!F.is_proper() || K.members().is_subset_of(F.members()) || !c.sub2(F).holds) return rec.hypothesis_failed();
        const Ideal I = residual_ideal(F, K.members());
        const Verdict v = c.ideal2(I);
        if (v.holds) return rec.confirmed();
        rec.counterexample("F, K1", pins_of({{"F", idx(F.members())}, {"K", idx(K.members())}}), v.witness,
                           "(F :_R K1) is not a 2-absorbing ideal");
      });
}

inline void check_P2_2(Instance& inst, Recorder& rec) {
  Checks c(rec);
  for (const auto& F : inst.submodules("F", inst.M)) {
    const bool hypF = F.is_proper() && c.sub2(F).holds;
    const Ideal colon = hypF ? residual_ideal(F) : Ideal::zero(inst.R1);
    for (Index r : inst.elements("r", inst.R1))
      rec.run([&] {
        if (!hypF || colon.contains(r)) return rec.hypothesis_failed();
        const Submodule C = colon_by_element(F, r);
        const bool contains = F.members().is_subset_of(C.members());
        const Verdict v = c.sub2(C);
        if (contains && v.holds) return rec.confirmed();
        rec.counterexample("F, r", pins_of({{"F", idx(F.members())}, {"r", {r}}}), v.witness,
                           contains ? "(F :_M r) is not 2-absorbing" : "(F :_M r) does not contain F");
      });
  }
}

inline std::vector<Index> chain_pin(const Submodule& F) { return F.members().members(); }

inline Pins chain_pins(const std::vector<Submodule>& chain) {
  Pins p;
  for (std::size_t i = 0; i < chain.size(); ++i) p.push_back({"C." + std::to_string(i + 1), chain_pin(chain[i])});
  return p;
}

inline void check_P2_3(Instance& inst, Recorder& rec, bool use_union) {
  Checks c(rec);
  for (const auto& chain : inst.chains("C"))
    rec.run([&] {
      for (const auto& F : chain)
        if (!c.sub2(F).holds) return rec.hypothesis_failed();
      const Submodule G = use_union ? union_chain(chain) : intersect_chain(chain);
      const Verdict v = c.sub2(G);
      if (v.holds) return rec.confirmed();
      rec.counterexample("chain", chain_pins(chain), v.witness,
                         use_union ? "union is not 2-absorbing" : "intersection is not 2-absorbing");
    });
}

inline void check_P2_4(Instance& inst, Recorder& rec, bool forward) {
  Checks c(rec);
  std::map<Subset, std::shared_ptr<LocalCache>> cache;
  auto local = [&](const MultSet& S) -> LocalCache& {
    auto& slot = cache[S.members()];
    if (!slot) {
      auto L = localize_ring(S);
      auto LM = localize_module(inst.M, L);
      slot = std::make_shared<LocalCache>(LocalCache{std::move(L), std::move(LM)});
    }
    return *slot;
  };
  for (const auto& F : inst.submodules("F", inst.M))
    for (const auto& S : inst.multsets("S", inst.R1))
      rec.run([&] {
        if (!F.is_proper()) return rec.hypothesis_failed();
        const Pins pins = pins_of({{"F", idx(F.members())}, {"S", idx(S.members())}});
        if (forward) {
          if (!c.sub2(F).holds || colon_meets(residual_ideal(F), S)) return rec.hypothesis_failed();
          LocalCache& lc = local(S);
          const Submodule SF = localize_submodule(lc.LM, S, F);
          const Verdict v = c.sub2(SF);
          if (v.holds) return rec.confirmed();
          rec.counterexample("F, S", pins, v.witness, SF.is_proper() ? "S^-1 F is not 2-absorbing" : "S^-1 F is not proper");
        } else {
          if (zero_divisors_on_quotient(F).intersects(S.members())) return rec.hypothesis_failed();
          LocalCache& lc = local(S);
          if (!c.sub2(localize_submodule(lc.LM, S, F)).holds) return rec.hypothesis_failed();
          const Verdict v = c.sub2(F);
          if (v.holds) return rec.confirmed();
          rec.counterexample("F, S", pins, v.witness, "F is not 2-absorbing");
        }
      });
}

inline void check_P2_6(Instance& inst, Recorder& rec) {
  Checks c(rec);
  std::optional<Idealization> idz;
  for (const auto& I : inst.ideals("I", inst.R1))
    rec.run([&] {
      if (!I.is_proper()) return rec.hypothesis_failed();
      if (!idz) {
        const std::uint64_t n = std::uint64_t{inst.R1->size()} * inst.M->size();
        rec.budget().require(cube(n), "idealization of " + inst.M->label());
        idz = idealization(inst.M, rec.budget());
      }
      const Verdict left = c.ideal2(I);
      const Verdict right = c.ideal2(idealization_ideal(*idz, I, Submodule::whole(inst.M)));
      if (left.holds == right.holds) return rec.confirmed();
      rec.counterexample("I", pins_of({{"I", idx(I.members())}}), left.holds ? right.witness : left.witness,
                         iff_detail("I", left.holds, "I(+)M", right.holds));
    });
}

inline void check_P2_7(Instance& inst, Recorder& rec) {
  Checks c(rec);
  std::optional<Idealization> idz;
  for (const auto& I : inst.ideals("I", inst.R1)) {
    const Submodule IM = ideal_times_module(I, inst.M);
    for (const auto& F : inst.submodules("F", inst.M))
      rec.run([&] {
        if (!I.is_proper() || !F.is_proper() || !IM.members().is_subset_of(F.members())) return rec.hypothesis_failed();
        if (!idz) {
          const std::uint64_t n = std::uint64_t{inst.R1->size()} * inst.M->size();
          rec.budget().require(cube(n), "idealization of " + inst.M->label());
          idz = idealization(inst.M, rec.budget());
        }
        if (!c.ideal2(idealization_ideal(*idz, I, F)).holds) return rec.hypothesis_failed();
        const Verdict v = c.ideal2(I);
        if (v.holds) return rec.confirmed();
        rec.counterexample("I, F", pins_of({{"I", idx(I.members())}, {"F", idx(F.members())}}), v.witness,
                           "I is not a 2-absorbing ideal");
      });
  }
}

/// phi_1 : M -> N over the identity of R1. Uses the declared phi (N restricted
/// to R1 along f) or, when phi is absent, the projections M -> M/K.
inline void check_L3_1(Instance& inst, Recorder& rec, bool image_side) {
  Checks c(rec);
  auto run_with = [&](const ModuleHom& phi1, const Pins& base) {
    if (image_side) {
      const bool surjective = phi1.is_surjective();
      const Submodule ker = phi1.kernel();
      for (const auto& F : inst.submodules("F", inst.M))
        rec.run([&] {
          if (!surjective || !ker.members().is_subset_of(F.members()) || !c.sub2(F).holds)
            return rec.hypothesis_failed();
          const auto img = image_submodule(phi1, F);
          if (!img.is_submodule) {
            Pins p = base;
            p.push_back({"F", idx(F.members())});
            return rec.counterexample("F", p, {}, "phi(F) is not a submodule");
          }
          const Verdict v = c.sub2(img.as_submodule(phi1.cod()));
          if (v.holds) return rec.confirmed();
          Pins p = base;
          p.push_back({"F", idx(F.members())});
          rec.counterexample("F", p, v.witness, "phi(F) is not 2-absorbing");
        });
    } else {
      for (const auto& N2 : inst.submodules("N2", phi1.cod()))
        rec.run([&] {
          if (!c.sub2(N2).holds) return rec.hypothesis_failed();
          const Submodule pre = preimage_submodule(phi1, N2);
          const Verdict v = c.sub2(pre);
          if (v.holds) return rec.confirmed();
          Pins p = base;
          p.push_back({"N2", idx(N2.members())});
          rec.counterexample("N2", p, v.witness,
                             pre.is_proper() ? "phi^-1(N2) is not 2-absorbing" : "phi^-1(N2) is all of M");
        });
    }
  };
  if (inst.file().modhoms.count("phi")) {
    const ModulePtr NR1 = restrict_scalars(*inst.N, inst.f);
    run_with(ModuleHom::make(RingHom::identity(inst.R1), inst.M, NR1, inst.phi.map()), {});
    return;
  }
  for (const auto& K : inst.submodules("K", inst.M)) {
    const QuotientModule q = quotient_module(K);
    run_with(q.projection, pins_of({{"K", idx(K.members())}}));
  }
}

inline void check_L3_2(Instance& inst, Recorder& rec) {
  Checks c(rec);
  for (const auto& K : inst.submodules("K", inst.M)) {
    std::optional<QuotientModule> q;
    for (const auto& F : inst.submodules("F", inst.M))
      rec.run([&] {
        if (!F.is_proper() || !K.members().is_subset_of(F.members())) return rec.hypothesis_failed();
        if (!q) q = quotient_module(K);
        const Submodule FK = image_submodule(q->projection, F).as_submodule(q->module);
        const Verdict left = c.sub2(F);
        const Verdict right = c.sub2(FK);
        if (left.holds == right.holds) return rec.confirmed();
        rec.counterexample("K, F", pins_of({{"K", idx(K.members())}, {"F", idx(F.members())}}),
                           left.holds ? right.witness : left.witness, iff_detail("F", left.holds, "F/K", right.holds));
      });
  }
}

inline void check_L3_3(Instance& inst, Recorder& rec) {
  Checks c(rec);
  for (const auto& F : inst.submodules("F", inst.M))
    rec.run([&] {
      if (!F.is_proper()) return rec.hypothesis_failed();
      const QuotientModule q = quotient_module(F);
      const Verdict left = c.sub2(F);
      const Verdict right = c.sub2(Submodule::zero(q.module));
      if (left.holds == right.holds) return rec.confirmed();
      rec.counterexample("F", pins_of({{"F", idx(F.members())}}), left.holds ? right.witness : left.witness,
                         iff_detail("F", left.holds, "(0) in M/F", right.holds));
    });
}

// ---------------------------------------------------------------------------
// Amalgamation statements

inline void check_T3_4a(Instance& inst, Recorder& rec) {
  Checks c(rec);
  AmalgCache cache(inst.f, inst.phi, rec.budget());
  for (const Ideal& J : inst.ideals("J", inst.R2)) {
    const Pins jp = pins_of({{"J", idx(J.members())}});
    bool broken = false;
    rec.run([&] {
      AmalgContext* ctx = nullptr;
      try {
        ctx = &*cache.at(J).ctx;
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::InvalidStructure) throw;
        broken = true;
        return rec.counterexample("structure", jp, e.witness(), e.what());
      }
      const bool ring_ok = ctx->ring.ring->size() == inst.R1->size() * J.size();
      const bool module_ok = ctx->module->size() == inst.M->size() * ctx->JN.size();
      if (ring_ok && module_ok) return rec.confirmed();
      broken = true;
      rec.counterexample("structure", jp, {}, ring_ok ? "|M |><| JN| != |M||JN|" : "|R1 |><| J| != |R1||J|");
    });
    if (broken) continue;
    for (const auto& F : inst.submodules("F", inst.M))
      rec.run([&] {
        if (!F.is_proper()) return rec.hypothesis_failed();
        const Pins pins = pins_of({{"J", idx(J.members())}, {"F", idx(F.members())}});
        AmalgContext& ctx = *cache.at(J).ctx;
        const Submodule FJ = amalgam_submodule(ctx, F);
        const Verdict left = c.sub2(FJ);
        const Verdict right = c.sub2(F);
        std::string mech;
        try {
          const auto qi = quotient_isomorphism(ctx, F);
          if (!qi.bijective) mech = "quotient map is not bijective";
          if (ctx.module->size() * F.size() != inst.M->size() * FJ.size()) mech = "quotient cardinalities differ";
        } catch (const Error& e) {
          if (e.kind() == ErrorKind::BudgetExceeded) throw;
          mech = std::string("quotient map: ") + e.what();
        }
        if (!mech.empty()) return rec.counterexample("F, J", pins, {}, mech);
        if (left.holds == right.holds) return rec.confirmed();
        rec.counterexample("F, J", pins, left.holds ? right.witness : left.witness,
                           iff_detail("F |><| JN", left.holds, "F", right.holds));
      });
  }
}

inline void check_T3_4b(Instance& inst, Recorder& rec) {
  Checks c(rec);
  AmalgCache cache(inst.f, inst.phi, rec.budget());
  for (const Ideal& J : inst.ideals("J", inst.R2)) {
    std::optional<PGamma> pg;
    const Pins jp = pins_of({{"J", idx(J.members())}});
    rec.run([&] {
      AmalgContext& ctx = *cache.at(J).ctx;
      pg = projection_p_gamma(ctx);
      std::string mech;
      if (!pg->hom.is_surjective()) mech = "p_gamma is not surjective";
      else if (pg->kernel.members() != pg->expected_kernel.members()) mech = "Ker(p_gamma) != phi^-1(JN) x {0}";
      if (mech.empty()) return rec.confirmed();
      rec.counterexample("p_gamma", jp, {}, mech);
    });
    if (!pg) continue;
    AmalgContext& ctx = *cache.at(J).ctx;
    for (const auto& N2 : inst.submodules("N2", ctx.target))
      rec.run([&] {
        if (!N2.is_proper()) return rec.hypothesis_failed();
        const Pins pins = pins_of({{"J", idx(J.members())}, {"N2", idx(N2.members())}});
        const Submodule bar = bar_submodule(ctx, N2);
        if (image_submodule(pg->hom, bar).members != N2.members())
          return rec.counterexample("N2, J", pins, {}, "p_gamma(N2-bar) != N2");
        if (preimage_submodule(pg->hom, N2).members() != bar.members())
          return rec.counterexample("N2, J", pins, {}, "p_gamma^-1(N2) != N2-bar");
        const Verdict left = c.sub2(bar);
        const Verdict right = c.sub2(N2);
        if (left.holds == right.holds) return rec.confirmed();
        rec.counterexample("N2, J", pins, left.holds ? right.witness : left.witness,
                           iff_detail("N2-bar", left.holds, "N2", right.holds));
      });
  }
}

inline void check_C3_5(Instance& inst, Recorder& rec) {
  Checks c(rec);
  std::vector<Ideal> Js;
  if (auto it = inst.file().ideals.find("J"); it != inst.file().ideals.end() && same_ring(it->second.ring(), inst.R1))
    Js = {Ideal::of(inst.R1, it->second.members())};
  else if (auto p = inst.pin("J"))
    Js = {Ideal::of(inst.R1, Subset::from_indices(inst.R1->size(), *p))};
  else
    Js = enumerate_ideals(inst.R1, rec.budget());
  for (const Ideal& J : Js) {
    std::optional<Duplication> dup;
    const Pins jp = pins_of({{"J", idx(J.members())}});
    rec.run([&] {
      const Submodule JM = ideal_times_module(J, inst.M);
      const std::uint64_t rs = std::uint64_t{inst.R1->size()} * J.size(), ms = std::uint64_t{inst.M->size()} * JM.size();
      rec.budget().require(rs * rs * ms, "duplication along J");
      dup = duplication_module(inst.R1, J, inst.M);
      if (dup->carrier_matches_definition) return rec.confirmed();
      rec.counterexample("carrier", jp, {}, "amalgamated carrier differs from {(m,m') : m - m' in JM}");
    });
    if (!dup) continue;
    for (const auto& F : inst.submodules("F", inst.M))
      rec.run([&] {
        if (!F.is_proper()) return rec.hypothesis_failed();
        const Pins pins = pins_of({{"J", idx(J.members())}, {"F", idx(F.members())}});
        const auto subs = dup_submodules(*dup, F);
        if (!subs.bowtie || !subs.bar)
          return rec.counterexample("F, J", pins, {}, subs.bowtie ? subs.bar_error : subs.bowtie_error);
        const Verdict f = c.sub2(F);
        const Verdict a = c.sub2(*subs.bowtie);
        const Verdict b = c.sub2(*subs.bar);
        if (a.holds != f.holds)
          return rec.counterexample("F, J", pins, f.holds ? a.witness : f.witness,
                                    iff_detail("F |><| J", a.holds, "F", f.holds));
        if (b.holds != f.holds)
          return rec.counterexample("F, J", pins, f.holds ? b.witness : f.witness,
                                    iff_detail("F-bar", b.holds, "F", f.holds));
        rec.confirmed();
      });
  }
}

inline void check_C3_8(Instance& inst, Recorder& rec, int item) {
  Checks c(rec);
  AmalgCache cache(inst.f, inst.phi, rec.budget());
  if (item == 1) {
    std::vector<Submodule> P1s = inst.submodules("P1", inst.M), P2s = inst.submodules("P2", inst.M);
    for (const auto& P1 : P1s)
      for (const auto& P2 : P2s) {
        if (P1.members() == P2.members() || (P1s.size() > 1 && !(P1.members() < P2.members()))) continue;
        const bool hyp = c.prime(P1).holds && c.prime(P2).holds;
        const Submodule F = submodule_intersection(P1, P2);
        amalg_conclusion(inst, rec, cache, "P1, P2", pins_of({{"P1", idx(P1.members())}, {"P2", idx(P2.members())}}), F,
                         hyp);
      }
    return;
  }
  const bool cyclic = cyclic_generator(*inst.M).has_value();
  for (const auto& F : inst.submodules("F", inst.M)) {
    bool hyp = cyclic && F.is_proper();
    if (hyp && item == 2) hyp = c.ideal2(residual_ideal(F)).holds;
    if (hyp && item == 3) {
      const auto pv = is_primary_submodule(F);
      hyp = pv.verdict.holds && pv.radical.is_proper() && is_prime_ideal(pv.radical).holds &&
            ideal_times_module(ideal_product(pv.radical, pv.radical), inst.M).members().is_subset_of(F.members());
    }
    amalg_conclusion(inst, rec, cache, "F", pins_of({{"F", idx(F.members())}}), F, hyp);
  }
}

inline void check_C3_9(Instance& inst, Recorder& rec, int item) {
  Checks c(rec);
  AmalgCache cache(inst.f, inst.phi, rec.budget());
  const bool regular = is_regular_module(*inst.M);
  auto as_sub = [&](const Ideal& I) { return Submodule::of(inst.M, I.members()); };
  switch (item) {
    case 1:
    case 2: {
      rec.flag("ideal reading: the residual ideal is taken as a submodule of the regular module");
      for (const auto& F : inst.submodules("F", inst.M)) {
        const bool hypF = regular && F.is_proper() && c.sub2(F).holds;
        if (item == 2) {
          const Submodule G = hypF ? as_sub(residual_ideal(F)) : F;
          amalg_conclusion(inst, rec, cache, "F", pins_of({{"F", idx(F.members())}}), G, hypF);
          continue;
        }
        for (const auto& K : inst.submodules("K", inst.M)) {
          const bool hyp = hypF && !K.members().is_subset_of(F.members());
          const Submodule G = hyp ? as_sub(residual_ideal(F, K.members())) : F;
          amalg_conclusion(inst, rec, cache, "F, K1", pins_of({{"F", idx(F.members())}, {"K", idx(K.members())}}), G,
                           hyp);
        }
      }
      return;
    }
    case 3:
      for (const auto& F : inst.submodules("F", inst.M)) {
        const bool hypF = F.is_proper() && c.sub2(F).holds;
        const Ideal colon = residual_ideal(F);
        for (Index r : inst.elements("r", inst.R1)) {
          const bool hyp = hypF && !colon.contains(r);
          const Submodule G = hyp ? colon_by_element(F, r) : F;
          amalg_conclusion(inst, rec, cache, "F, r", pins_of({{"F", idx(F.members())}, {"r", {r}}}), G, hyp);
        }
      }
      return;
    case 4:
    case 5:
      for (const auto& chain : inst.chains("C")) {
        bool hyp = true;
        for (const auto& F : chain) hyp = hyp && c.sub2(F).holds;
        const Submodule G = item == 4 ? intersect_chain(chain) : union_chain(chain);
        hyp = hyp && c.sub2(G).holds;
        amalg_conclusion(inst, rec, cache, "chain", chain_pins(chain), G, hyp);
      }
      return;
    case 6: {
      std::map<std::pair<Subset, Subset>, std::shared_ptr<AmalgContext>> local_ctx;
      std::map<Subset, std::shared_ptr<LocalCache>> local_M;
      for (const auto& S : inst.multsets("S", inst.R1)) {
        for (const auto& F : inst.submodules("F", inst.M)) {
          const bool hyp = F.is_proper() && c.sub2(F).holds && !colon_meets(residual_ideal(F), S);
          for (const Ideal& J : inst.ideals("J", inst.R2))
            rec.run([&] {
              if (!hyp) return rec.hypothesis_failed();
              auto& lm = local_M[S.members()];
              if (!lm) {
                auto L = localize_ring(S);
                auto LMod = localize_module(inst.M, L);
                lm = std::make_shared<LocalCache>(LocalCache{std::move(L), std::move(LMod)});
              }
              auto& slot = local_ctx[{S.members(), J.members()}];
              if (!slot) {
                Subset fs(inst.R2->size());
                S.members().for_each([&](Index s) { fs.insert(inst.f(s)); });
                const MultSet fS = MultSet::of(inst.R2, fs);
                const LocalizedRing L2 = localize_ring(fS);
                const LocalizedModule LN = localize_module(inst.N, L2);
                const LocalizedRing& L1 = lm->L;
                std::vector<Index> fmap(L1.ring->size());
                for (Index k = 0; k < fmap.size(); ++k) {
                  const auto [a, s] = L1.representative[k];
                  fmap[k] = L2.fraction(inst.f(a), inst.f(s));
                }
                const RingHom fbar = RingHom::make(L1.ring, L2.ring, std::move(fmap));
                std::vector<Index> pmap(lm->LM.module->size());
                for (Index k = 0; k < pmap.size(); ++k) {
                  const auto [m, s] = lm->LM.representative[k];
                  pmap[k] = LN.fraction(inst.phi(m), inst.f(s));
                }
                const ModuleHom phibar = ModuleHom::make(fbar, lm->LM.module, LN.module, std::move(pmap));
                const Ideal SJ = localize_ideal(L2, J);
                const Submodule JN = ideal_times_module(SJ, LN.module);
                const std::uint64_t rs = std::uint64_t{L1.ring->size()} * SJ.size();
                const std::uint64_t ms = std::uint64_t{lm->LM.module->size()} * JN.size();
                rec.budget().require(rs * rs * ms, "localized amalgamation");
                slot = std::make_shared<AmalgContext>(amalgamated_module(fbar, SJ, phibar));
              }
              const Submodule SF = localize_submodule(lm->LM, S, F);
              const Verdict v = c.sub2(amalgam_submodule(*slot, SF));
              if (v.holds) return rec.confirmed();
              rec.counterexample(
                  "F, S, J",
                  pins_of({{"F", idx(F.members())}, {"S", idx(S.members())}, {"J", idx(J.members())}}), v.witness,
                  "S^-1 F |><| (S^-1 J)(S^-1 N) is not 2-absorbing");
            });
        }
      }
      return;
    }
    case 7: {
      std::map<Subset, std::shared_ptr<LocalCache>> local_M;
      for (const auto& S : inst.multsets("S", inst.R1))
        for (const auto& F : inst.submodules("F", inst.M)) {
          bool hyp = F.is_proper() && !zero_divisors_on_quotient(F).intersects(S.members());
          if (hyp) {
            auto& lm = local_M[S.members()];
            if (!lm) {
              auto L = localize_ring(S);
              auto LMod = localize_module(inst.M, L);
              lm = std::make_shared<LocalCache>(LocalCache{std::move(L), std::move(LMod)});
            }
            hyp = c.sub2(localize_submodule(lm->LM, S, F)).holds;
          }
          amalg_conclusion(inst, rec, cache, "F, S", pins_of({{"F", idx(F.members())}, {"S", idx(S.members())}}), F,
                           hyp);
        }
      return;
    }
    default:
      break;
  }
}

/// Product of the factor modules over the product of their rings.
inline ModulePtr product_of(const std::vector<ModulePtr>& factors) {
  ModulePtr P = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) P = product_module(*P, *factors[i]);
  return P;
}

inline void check_C3_10(Instance& inst, Recorder& rec, int item) {
  Checks c(rec);
  if (item == 1 || item == 2) {
    AmalgCache cache(inst.f, inst.phi, rec.budget());
    bool mult = false;
    rec.run([&] { mult = is_multiplication_module(inst.M, rec.budget()).holds; });
    if (item == 1) {
      for (const auto& F : inst.submodules("F", inst.M)) {
        const bool hyp = mult && F.is_proper() && c.ideal2(residual_ideal(F)).holds;
        amalg_conclusion(inst, rec, cache, "F", pins_of({{"F", idx(F.members())}}), F, hyp);
      }
      return;
    }
    const Ideal ann = annihilator(inst.M);
    for (const auto& I : inst.ideals("I", inst.R1)) {
      const bool hyp = mult && I.is_proper() && ann.members().is_subset_of(I.members()) && c.ideal2(I).holds;
      amalg_conclusion(inst, rec, cache, "I", pins_of({{"I", idx(I.members())}}), ideal_times_module(I, inst.M), hyp);
    }
    return;
  }
  rec.flag("literal reading: a single 2-absorbing or prime factor is taken as sufficient");
  const std::size_t k = item == 3 ? 2 : 3;
  std::vector<ModulePtr> factors;
  for (std::size_t i = 1; i <= k; ++i) {
    const std::string name = "M" + std::to_string(i);
    factors.push_back(inst.file().modules.count(name) ? inst.file().modules.at(name) : inst.M);
  }
  std::uint64_t psize = 1, rsize = 1;
  for (const auto& m : factors) {
    psize *= m->size();
    rsize *= m->ring()->size();
  }
  if (!rec.budget().allows(rsize * rsize * psize)) return rec.skipped();
  const ModulePtr P = product_of(factors);
  const RingPtr PR = P->ring();
  AmalgCache cache(RingHom::identity(PR), ModuleHom::identity(P), rec.budget());
  std::vector<std::vector<Submodule>> choices;
  for (std::size_t i = 0; i < k; ++i) choices.push_back(inst.submodules("F" + std::to_string(i + 1), factors[i]));
  std::vector<Ideal> Js;
  if (auto p = inst.pin("J")) Js = {Ideal::of(PR, Subset::from_indices(PR->size(), *p))};
  else Js = enumerate_ideals(PR, rec.budget());
  std::vector<std::size_t> pick(k, 0);
  while (true) {
    std::vector<const Submodule*> Fs;
    for (std::size_t i = 0; i < k; ++i) Fs.push_back(&choices[i][pick[i]]);
    std::size_t two = 0, prime = 0;
    for (const auto* F : Fs) {
      if (c.sub2(*F).holds) ++two;
      if (c.prime(*F).holds) ++prime;
    }
    const bool hyp = item == 3 ? (two + prime > 0) : (two > 0 || prime >= 2);
    Subset s = Fs[0]->members();
    std::size_t left = factors[0]->size();
    for (std::size_t i = 1; i < k; ++i) {
      Subset t(left * factors[i]->size());
      s.for_each([&](Index a) {
        Fs[i]->members().for_each([&](Index b) { t.insert(static_cast<Index>(a * factors[i]->size() + b)); });
      });
      s = std::move(t);
      left *= factors[i]->size();
    }
    const Submodule F = Submodule::of(P, std::move(s));
    Pins pins;
    for (std::size_t i = 0; i < k; ++i) pins.push_back({"F" + std::to_string(i + 1), idx(Fs[i]->members())});
    for (const Ideal& J : Js)
      rec.run([&] {
        if (!hyp) return rec.hypothesis_failed();
        const Verdict v = cache.bowtie2(J, F, rec);
        if (v.holds) return rec.confirmed();
        Pins p = pins;
        p.push_back({"J", idx(J.members())});
        rec.counterexample("F_i, J", p, v.witness, F.is_proper() ? "F |><| JN is not 2-absorbing" : "F is not proper");
      });
    std::size_t pos = 0;
    while (pos < k && ++pick[pos] == choices[pos].size()) pick[pos++] = 0;
    if (pos == k) break;
  }
}

}  // namespace detail

/// Runs one statement on one instance. Hypothesis failures are counted
/// separately; a counterexample carries the instance with its roles pinned.
inline StatementReport verify_statement(StatementId id, const InstanceSpec& spec, const Budget& budget = {}) {
  Instance inst(spec, budget);
  Recorder rec(id, inst);
  using S = StatementId;
  switch (id) {
    case S::P2_1: detail::check_P2_1(inst, rec); break;
    case S::P2_2: detail::check_P2_2(inst, rec); break;
    case S::P2_3a: detail::check_P2_3(inst, rec, false); break;
    case S::P2_3b: detail::check_P2_3(inst, rec, true); break;
    case S::P2_4a: detail::check_P2_4(inst, rec, true); break;
    case S::P2_4b: detail::check_P2_4(inst, rec, false); break;
    case S::P2_6: detail::check_P2_6(inst, rec); break;
    case S::P2_7: detail::check_P2_7(inst, rec); break;
    case S::L3_1a: detail::check_L3_1(inst, rec, true); break;
    case S::L3_1b: detail::check_L3_1(inst, rec, false); break;
    case S::L3_2: detail::check_L3_2(inst, rec); break;
    case S::L3_3: detail::check_L3_3(inst, rec); break;
    case S::T3_4a: detail::check_T3_4a(inst, rec); break;
    case S::T3_4b: detail::check_T3_4b(inst, rec); break;
    case S::C3_5: detail::check_C3_5(inst, rec); break;
    case S::C3_8_1: detail::check_C3_8(inst, rec, 1); break;
    case S::C3_8_2: detail::check_C3_8(inst, rec, 2); break;
    case S::C3_8_3: detail::check_C3_8(inst, rec, 3); break;
    case S::C3_9_1: detail::check_C3_9(inst, rec, 1); break;
    case S::C3_9_2: detail::check_C3_9(inst, rec, 2); break;
    case S::C3_9_3: detail::check_C3_9(inst, rec, 3); break;
    case S::C3_9_4: detail::check_C3_9(inst, rec, 4); break;
    case S::C3_9_5: detail::check_C3_9(inst, rec, 5); break;
    case S::C3_9_6: detail::check_C3_9(inst, rec, 6); break;
    case S::C3_9_7: detail::check_C3_9(inst, rec, 7); break;
    case S::C3_10_1: detail::check_C3_10(inst, rec, 1); break;
    case S::C3_10_2: detail::check_C3_10(inst, rec, 2); break;
    case S::C3_10_3: detail::check_C3_10(inst, rec, 3); break;
    case S::C3_10_4: detail::check_C3_10(inst, rec, 4); break;
  }
  return std::move(rec.report());
}

}  // namespace twoabs::verify
