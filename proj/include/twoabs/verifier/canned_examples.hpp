#pragma once

#include <optional>
#include <string>
#include <vector>

#include "twoabs/constructions.hpp"
#include "twoabs/instance_file.hpp"
#include "twoabs/predicates.hpp"
#include "twoabs/verifier/statements.hpp"

namespace twoabs::verify {

struct CannedExample {
  enum class Kind { Submodule, Amalgam, Statement } kind = Kind::Submodule;
  std::string name;
  InstanceSpec spec;
  bool expect_2absorbing = false;  // Statement kind: the statement holds
  Witness expected_witness;  // compared by (role, index) when non-empty
  std::optional<StatementId> statement;
  std::string note;
};

struct ExampleResult {
  const CannedExample* example = nullptr;
  bool matched = false;
  Verdict actual;
  std::string detail;
};

namespace detail {

inline const char* kZ12PlusZ6 =
    "ring R1 = zmod 12\n"
    "ideal D of R1 = generated {6}\n"
    "ring Q = quotient R1 by D\n"
    "hom q : R1 -> Q = canonical\n"
    "module MQ over Q = regular\n"
    "module B over R1 = restrict MQ along q\n"
    "module A over R1 = regular\n"
    "module M over R1 = sum [A, B]\n"
    "submodule F of M = zero\n";

}  // namespace detail

inline const std::vector<CannedExample>& canned_examples() {
  using K = CannedExample::Kind;
  static const std::vector<CannedExample> items = {
      {K::Submodule, "z30-zero",
       {"ring R1 = zmod 30\nmodule M over R1 = regular\nsubmodule F of M = zero\n", 0},
       false,
       {{"a", 2, "2"}, {"b", 3, "3"}, {"m", 5, "5"}},
       std::nullopt,
       "(0) in Z/30 is not 2-absorbing"},
      {K::Amalgam, "z30-zero-amalgam",
       {"ring R1 = zmod 30\nmodule M over R1 = regular\nsubmodule F of M = zero\nideal J of R1 = {0,15}\n", 0},
       false,
       {},
       std::nullopt,
       "0 |><| JN is not 2-absorbing"},
      {K::Statement, "z30-T3_4a",
       {"ring R1 = zmod 30\nmodule M over R1 = regular\nsubmodule F of M = zero\n", 0},
       true,
       {},
       StatementId::T3_4a,
       "no counterexample for any ideal J"},
      {K::Submodule, "z12+z6-zero",
       {detail::kZ12PlusZ6, 0},
       false,
       {},
       std::nullopt,
       "finite analog of Z x Z6: 6 (0,1) = 0 with 2 (0,1), 3 (0,1) nonzero"},
      {K::Submodule, "z6-prime",
       {"ring R1 = zmod 6\nmodule M over R1 = regular\nsubmodule F of M = {0,2,4}\n", 0},
       true,
       {},
       std::nullopt,
       "a prime submodule is 2-absorbing"},
      {K::Statement, "z6-T3_4a",
       {"ring R1 = zmod 6\n", 0},
       true,
       {},
       StatementId::T3_4a,
       "all ideals J, all submodules F"},
  };
  return items;
}

inline bool witness_matches(const Witness& expected, const Witness& actual) {
  if (expected.size() != actual.size()) return false;
  for (std::size_t i = 0; i < expected.size(); ++i)
    if (expected[i].role != actual[i].role || expected[i].index != actual[i].index) return false;
  return true;
}

inline ExampleResult run_example(const CannedExample& ex, const Budget& budget = {}) {
  ExampleResult r;
  r.example = &ex;
  using K = CannedExample::Kind;
  if (ex.kind == K::Statement) {
    const auto rep = verify_statement(*ex.statement, ex.spec, budget);
    r.actual = rep.holds() ? Verdict::yes(rep.iterations) : Verdict::no(rep.counterexamples.front().witness);
    r.detail = std::to_string(rep.counterexamples.size()) + " counterexamples / " + std::to_string(rep.cases) + " cases";
    r.matched = rep.holds();
    return r;
  }
  const InstanceFile file = parse_instance_text(ex.spec.source);
  const Submodule& F = file.submodules.at("F");
  if (ex.kind == K::Submodule) {
    r.actual = is_2absorbing_submodule(F, budget);
    r.matched = r.actual.holds == ex.expect_2absorbing &&
                (ex.expected_witness.empty() || witness_matches(ex.expected_witness, r.actual.witness));
    if (ex.name == "z12+z6-zero") {
      // The pattern 6 (0,1) = 0 must itself be a violating triple.
      const FiniteModule& M = *F.module();
      const Index m = *M.find("(0,1)");
      const bool pattern = M.act(6, m) == M.zero() && M.act(2, m) != M.zero() && M.act(3, m) != M.zero() &&
                           !residual_ideal(F).contains(6);
      r.matched = r.matched && pattern;
      r.detail = pattern ? "triple (2, 3, (0,1)) violates" : "triple (2, 3, (0,1)) does not violate";
    }
    return r;
  }
  const RingPtr R = file.rings.at("R1");
  const auto ctx = amalgamated_module(RingHom::identity(R), file.ideals.at("J"), ModuleHom::identity(F.module()));
  r.actual = is_2absorbing_submodule(amalgam_submodule(ctx, F), budget);
  r.matched = r.actual.holds == ex.expect_2absorbing;
  r.detail = "|M |><| JN| = " + std::to_string(ctx.module->size());
  return r;
}

}  // namespace twoabs::verify
