#pragma once

#include <string>
#include <vector>

#include "twoabs/report.hpp"
#include "twoabs/twoabs.hpp"

// Subcommands of the command-line tool, each producing a Report.
namespace twoabs::commands {

struct CommandOptions {
  std::string format = "text";
  std::uint64_t budget = Budget::kDefaultLimit;
  bool force = false;
  std::uint64_t seed = 1;
  unsigned threads = 0;

  Budget make_budget() const { return Budget{budget, force}; }
};

inline std::string names_of(const FiniteModule& M, const Subset& s) {
  std::string out = "{";
  bool first = true;
  for (Index i : s.members()) {
    out += (first ? "" : ",") + M.name(i);
    first = false;
  }
  return out + "}";
}

inline std::string names_of(const FiniteRing& R, const Subset& s) {
  std::string out = "{";
  bool first = true;
  for (Index i : s.members()) {
    out += (first ? "" : ",") + R.name(i);
    first = false;
  }
  return out + "}";
}

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

inline Report start(const std::string& command, const Budget& budget) {
  Report r;
  r.command = command;
  r.budget_limit = budget.limit;
  r.budget_forced = budget.force;
  return r;
}

// check: classify a named submodule or ideal.
inline Report run_check(const std::string& path, const std::string& name, const std::string& property, const Budget& budget) {
  const InstanceFile file = parse_instance_file(path);
  const std::string digest = verify::fnv1a_hex(read_text_file(path));
  Report r = start("check", budget);
  const bool all = property == "all";
  if (!all && property != "prime" && property != "2-absorbing" && property != "primary")
    fail(ErrorKind::ParseError, "unknown property '" + property + "' (prime, 2-absorbing, primary, all)");

  if (auto it = file.submodules.find(name); it != file.submodules.end()) {
    const Submodule& F = it->second;
    r.fact("|R|", F.module()->ring()->size());
    r.fact("|M|", F.module()->size());
    r.fact("|" + name + "|", F.size());
    r.fact(name, names_of(*F.module(), F.members()));
    if (all || property == "prime") r.entries.push_back(verdict_entry("prime", name, digest, is_prime_submodule(F)));
    if (all || property == "2-absorbing")
      r.entries.push_back(verdict_entry("2-absorbing", name, digest, is_2absorbing_submodule(F, budget)));
    if (all || property == "primary") {
      const auto p = is_primary_submodule(F);
      auto e = verdict_entry("primary", name, digest, p.verdict);
      e.notes.push_back("P = rad(F :_R M) = " + names_of(*F.module()->ring(), p.radical.members()));
      r.entries.push_back(std::move(e));
    }
    return r;
  }
  if (auto it = file.ideals.find(name); it != file.ideals.end()) {
    const Ideal& I = it->second;
    r.fact("|R|", I.ring()->size());
    r.fact("|" + name + "|", I.size());
    r.fact(name, names_of(*I.ring(), I.members()));
    if (all || property == "prime") r.entries.push_back(verdict_entry("prime", name, digest, is_prime_ideal(I)));
    if (all || property == "2-absorbing")
      r.entries.push_back(verdict_entry("2-absorbing", name, digest, is_2absorbing_ideal(I, false, budget)));
    if (all || property == "primary") {
      // An ideal is primary exactly when it is a primary submodule of R.
      const ModulePtr R = regular_module(I.ring());
      const auto p = is_primary_submodule(Submodule::of(R, I.members()));
      auto e = verdict_entry("primary", name, digest, p.verdict);
      e.notes.push_back("P = rad(" + name + ") = " + names_of(*I.ring(), p.radical.members()));
      r.entries.push_back(std::move(e));
    }
    return r;
  }
  fail(ErrorKind::ValidationError, "no submodule or ideal named '" + name + "'");
}

// amalgamate: build M |><| JN and report sizes and distinguished submodules.
inline Report run_amalgamate(const std::string& path, const Budget& budget) {
  verify::Instance inst({read_text_file(path), 0}, budget);
  if (!inst.file().ideals.count("J")) fail(ErrorKind::ValidationError, "amalgamate needs an ideal named J of R2");
  const Ideal& J = inst.file().ideals.at("J");
  if (!same_ring(J.ring(), inst.R2)) fail(ErrorKind::ValidationError, "J must be an ideal of R2");
  const auto ctx = amalgamated_module(inst.f, J, inst.phi);
  const std::string digest = inst.spec().digest();
  Report r = start("amalgamate", budget);
  r.fact("|R1|", inst.R1->size());
  r.fact("|J|", J.size());
  r.fact("|R1 |><| J|", ctx.ring.ring->size());
  r.fact("|M|", inst.M->size());
  r.fact("|JN|", ctx.JN.size());
  r.fact("|M |><| JN|", ctx.module->size());
  r.fact("|phi(M) + JN|", ctx.target->size());

  auto structural = [&](const std::string& what, bool ok, const std::string& note) {
    ReportEntry e;
    e.statement = what;
    e.instance = digest;
    e.verdict = ok ? ReportVerdict::Holds : ReportVerdict::Fails;
    e.notes.push_back(note);
    r.entries.push_back(std::move(e));
  };
  structural("ring size", ctx.ring.ring->size() == inst.R1->size() * J.size(), "|R1 |><| J| = |R1| |J|");
  structural("module size", ctx.module->size() == inst.M->size() * ctx.JN.size(), "|M |><| JN| = |M| |JN|");

  for (const auto& [name, F] : inst.file().submodules) {
    if (same_module(F.module(), inst.M) && F.is_proper()) {
      const Submodule A = amalgam_submodule(ctx, F);
      const Verdict v = is_2absorbing_submodule(A, budget);
      ReportEntry e = verdict_entry("2-absorbing", name + " |><| JN", digest, v);
      e.verdict = ReportVerdict::Info;
      e.notes.push_back("size " + std::to_string(A.size()) + ", 2-absorbing " + yes_no(v.holds) + ", " + name +
                        " 2-absorbing " + yes_no(is_2absorbing_submodule(F, budget).holds));
      r.entries.push_back(std::move(e));
    }
  }
  return r;
}

// enumerate: the submodule lattice of M (or of the regular module of a ring).
inline Report run_enumerate(const std::string& path, const std::string& module_name, const Budget& budget) {
  const InstanceFile file = parse_instance_file(path);
  const std::string digest = verify::fnv1a_hex(read_text_file(path));
  ModulePtr M;
  if (file.modules.count(module_name)) M = file.modules.at(module_name);
  else if (file.rings.count(module_name)) M = regular_module(file.rings.at(module_name));
  else if (module_name == "M" && file.rings.count("R1")) M = regular_module(file.rings.at("R1"));
  else fail(ErrorKind::ValidationError, "no module or ring named '" + module_name + "'");
  Report r = start("enumerate", budget);
  const auto lattice = enumerate_submodules(M, budget);
  r.fact("|R|", M->ring()->size());
  r.fact("|M|", M->size());
  r.fact("submodules", lattice.size());
  for (const auto& F : lattice) {
    ReportEntry e;
    e.statement = "submodule";
    e.subject = names_of(*M, F.members());
    e.instance = digest;
    e.counts["size"] = F.size();
    if (F.is_proper()) {
      e.notes.push_back("prime " + yes_no(is_prime_submodule(F).holds));
      e.notes.push_back("2-absorbing " + yes_no(is_2absorbing_submodule(F, budget).holds));
    } else {
      e.notes.push_back("whole module");
    }
    r.entries.push_back(std::move(e));
  }
  return r;
}

// localize: S^-1 R and S^-1 M for S a multset binding or a literal set.
inline Report run_localize(const std::string& path, const std::string& S_text, const Budget& budget) {
  std::string source = read_text_file(path);
  if (!source.empty() && source.back() != '\n') source += '\n';
  const bool literal = !S_text.empty() && S_text.front() == '{';
  verify::Instance probe({source, 0}, budget);
  std::string S_name = S_text;
  if (literal) {
    S_name = "S_cli";
    std::string ring_name;
    for (const auto& [n, R] : probe.file().rings)
      if (R == probe.R1) ring_name = n;
    if (ring_name.empty()) fail(ErrorKind::ValidationError, "R1 is not a named ring");
    source += "multset " + S_name + " of " + ring_name + " = " + S_text + "\n";
  }
  const InstanceFile file = parse_instance_text(source);
  if (!file.multsets.count(S_name)) fail(ErrorKind::ValidationError, "no multset named '" + S_name + "'");
  const MultSet& S = file.multsets.at(S_name);
  const ModulePtr M = file.modules.count("M") ? file.modules.at("M") : regular_module(S.ring());
  if (!same_ring(M->ring(), S.ring())) fail(ErrorKind::ValidationError, "S and M live over different rings");

  const LocalizedRing L = localize_ring(S);
  const LocalizedModule LM = localize_module(M, L);
  const FiniteRing& R = *S.ring();
  Report r = start("localize", budget);
  r.fact("S", names_of(R, S.members()));
  r.fact("|R|", R.size());
  r.fact("|S^-1 R|", L.ring->size());
  r.fact("ker(R -> S^-1 R)", names_of(R, L.canonical.kernel().members()));
  r.fact("|M|", M->size());
  r.fact("|S^-1 M|", LM.module->size());
  r.fact("ker(M -> S^-1 M)", names_of(*M, LM.canonical.kernel().members()));
  r.fact("R -> S^-1 R bijective", yes_no(L.canonical.is_injective() && L.canonical.is_surjective()));
  if (L.collapsed) r.fact("note", "0 in S: the localization is the zero ring");
  for (Index c = 0; c < L.ring->size(); ++c) {
    const auto [a, s] = L.representative[c];
    r.fact("class " + std::to_string(c), R.name(a) + "/" + R.name(s));
  }
  return r;
}

inline Report run_verify(const std::string& ids_text, const std::string& path, const std::string& family, const CommandOptions& c) {
  const auto ids = verify::parse_statement_ids(ids_text);
  std::vector<verify::InstanceSpec> instances;
  std::string subject;
  if (!path.empty()) {
    instances.push_back({read_text_file(path), c.seed});
    verify::Instance check(instances.front(), c.make_budget());
    subject = path;
  } else {
    instances = verify::expand_family(family.empty() ? "acceptance" : family, c.seed);
    subject = family.empty() ? "acceptance" : family;
  }
  const auto sweep = verify::run_sweep(ids, instances, {c.make_budget(), c.threads});
  return sweep_report(sweep, instances, subject, c.make_budget());
}

inline Report run_examples(const Budget& budget) {
  Report r = start("examples", budget);
  for (const auto& ex : verify::canned_examples()) r.entries.push_back(example_entry(verify::run_example(ex, budget)));
  return r;
}

}  // namespace twoabs::commands
