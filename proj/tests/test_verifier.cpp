#include <gtest/gtest.h>

#include "twoabs/twoabs.hpp"

using namespace twoabs;
using namespace twoabs::verify;

TEST(Catalog, ParseIds) {
  EXPECT_EQ(parse_statement_id("T3_4a"), StatementId::T3_4a);
  EXPECT_EQ(parse_statement_id("t3.4a"), StatementId::T3_4a);
  EXPECT_EQ(parse_statement_ids("all").size(), catalog().size());
  EXPECT_EQ(parse_statement_ids("P2").size(), 8u);
  EXPECT_EQ(parse_statement_ids("C3_9").size(), 7u);
  EXPECT_EQ(parse_statement_ids("T3_4").size(), 2u);
  EXPECT_EQ(parse_statement_ids("P2_3").size(), 2u);
  EXPECT_EQ(parse_statement_ids("C3_10").size(), 4u);
  try {
    parse_statement_ids("X9");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnknownStatement);
  }
}

TEST(Catalog, TagsMatchOrder) {
  for (std::size_t i = 0; i < catalog().size(); ++i) EXPECT_EQ(static_cast<std::size_t>(catalog()[i].id), i);
  EXPECT_FALSE(out_of_scope().empty());
}

TEST(Family, Sizes) {
  EXPECT_EQ(expand_family("zmod:2..12").size(), 11u);
  EXPECT_EQ(expand_family("products:2..4").size(), 6u);
  EXPECT_EQ(expand_family("acceptance").size(), 17u);
  EXPECT_EQ(expand_family("zmod:2..3,zmod:5").size(), 3u);
  EXPECT_FALSE(expand_family("sums").empty());
  EXPECT_THROW(expand_family("bogus:1"), Error);
  EXPECT_THROW(expand_family("zmod:x..y"), Error);
}

TEST(Family, RandomIsReproducible) {
  const auto a = expand_family("random:5:42:6");
  const auto b = expand_family("random:5:42:6");
  ASSERT_EQ(a.size(), 5u);
  EXPECT_EQ(a, b);
  EXPECT_EQ(expand_family("random:3", 7), expand_family("random:3:7"));
  for (const auto& spec : a) EXPECT_NO_THROW(Instance(spec, Budget{}));
}

TEST(Family, RandomBoundsAreRespected) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    Instance inst(random_instance(seed, Bounds{6, 6, 200}), Budget{});
    EXPECT_LE(inst.R1->size(), 6u);
    EXPECT_LE(inst.R2->size(), 6u);
  }
}

TEST(Family, RandomGivesUp) {
  try {
    random_instance(1, Bounds{1, 1, 5});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NoValidInstance);
  }
}

TEST(Instance, Defaults) {
  Instance inst({"ring R1 = zmod 6\n", 0}, Budget{});
  EXPECT_EQ(inst.M->size(), 6u);
  EXPECT_TRUE(same_module(inst.M, inst.N));
  EXPECT_EQ(inst.ideals("J", inst.R2).size(), 4u);
  Instance pinned({"ring R1 = zmod 6\npin J = {0,3}\n", 0}, Budget{});
  ASSERT_EQ(pinned.ideals("J", pinned.R2).size(), 1u);
  EXPECT_EQ(pinned.ideals("J", pinned.R2)[0].members(), Subset(6, {0, 3}));
}

TEST(Instance, DifferentRingsNeedHom) {
  try {
    Instance({"ring R1 = zmod 6\nring R2 = zmod 3\n", 0}, Budget{});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ValidationError);
  }
}

TEST(Verify, TheoremOnZ6) {
  const auto r = verify_statement(StatementId::T3_4a, {"ring R1 = zmod 6\n", 0});
  EXPECT_TRUE(r.holds());
  EXPECT_EQ(r.instances, 1u);
  // 4 ideals J times 3 proper submodules F
  EXPECT_GE(r.cases, 12u);
  EXPECT_EQ(r.skipped, 0u);
}

TEST(Verify, NonIdentityHom) {
  const auto r = verify_statement(StatementId::T3_4b,
                                  {"ring R1 = zmod 6\nring R2 = zmod 3\nhom f : R1 -> R2 = map [0,1,2,0,1,2]\n"
                                   "module M over R1 = regular\nmodule N over R2 = regular\n"
                                   "modhom phi : M -> N over f = map [0,1,2,0,1,2]\n",
                                   0});
  EXPECT_TRUE(r.holds());
  EXPECT_GT(r.confirmed, 0u);
}

TEST(Verify, LiteralProductReadingHasFlaggedCounterexamples) {
  // (2) x (0) in Z8 x Z8: one prime factor, yet (0) in Z8 is neither prime nor 2-absorbing.
  const auto r = verify_statement(StatementId::C3_10_3, {"ring R1 = zmod 8\npin J = {0}\n", 0});
  EXPECT_FALSE(r.holds());
  EXPECT_FALSE(r.flags.empty());
  // The counterexample source pins every enumerated role and reproduces.
  const auto& c = r.counterexamples.front();
  EXPECT_NE(c.spec.source.find("pin "), std::string::npos);
  const auto again = verify_statement(StatementId::C3_10_3, c.spec);
  ASSERT_FALSE(again.holds());
  EXPECT_EQ(again.counterexamples.front().witness, c.witness);
  EXPECT_LT(again.cases, r.cases);
}

TEST(Verify, BudgetSkipsAreCounted) {
  const auto r = verify_statement(StatementId::T3_4a, {"ring R1 = zmod 12\n", 0}, Budget{5000, false});
  EXPECT_GT(r.skipped, 0u);
  EXPECT_TRUE(r.holds());
}

TEST(Sweep, DeterministicAcrossThreadCounts) {
  const auto ids = parse_statement_ids("P2");
  const auto inst = expand_family("zmod:2..8,products:2..3");
  const auto one = run_sweep(ids, inst, {Budget{}, 1});
  const auto four = run_sweep(ids, inst, {Budget{}, 4});
  ASSERT_EQ(one.statements.size(), four.statements.size());
  for (std::size_t i = 0; i < one.statements.size(); ++i) {
    EXPECT_EQ(one.statements[i].cases, four.statements[i].cases);
    EXPECT_EQ(one.statements[i].confirmed, four.statements[i].confirmed);
    EXPECT_EQ(one.statements[i].iterations, four.statements[i].iterations);
  }
  EXPECT_TRUE(one.holds());
}

TEST(Sweep, MergeIsAssociative) {
  const auto inst = expand_family("zmod:2..6");
  StatementReport left, all;
  std::vector<StatementReport> parts;
  for (const auto& s : inst) parts.push_back(verify_statement(StatementId::L3_2, s));
  for (const auto& p : parts) all.merge(p);
  StatementReport ab, cd;
  ab.merge(parts[0]);
  ab.merge(parts[1]);
  cd.merge(parts[2]);
  cd.merge(parts[3]);
  cd.merge(parts[4]);
  left.merge(ab);
  left.merge(cd);
  EXPECT_EQ(left.cases, all.cases);
  EXPECT_EQ(left.iterations, all.iterations);
  EXPECT_EQ(left.instances, 5u);
}

TEST(Examples, SuiteMatches) {
  for (const auto& ex : canned_examples()) {
    const auto r = run_example(ex);
    EXPECT_TRUE(r.matched) << ex.name << ": " << r.detail;
  }
}

TEST(Examples, Z30Witness) {
  const auto& ex = canned_examples().front();
  ASSERT_EQ(ex.name, "z30-zero");
  const auto r = run_example(ex);
  ASSERT_EQ(r.actual.witness.size(), 3u);
  EXPECT_EQ(r.actual.witness[0].index, 2u);
  EXPECT_EQ(r.actual.witness[1].index, 3u);
  EXPECT_EQ(r.actual.witness[2].index, 5u);
}
