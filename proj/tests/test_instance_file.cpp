#include <gtest/gtest.h>

#include "twoabs/instance_file.hpp"
#include "twoabs/predicates.hpp"

using namespace twoabs;

namespace {

Error parse_error(const std::string& text) {
  try {
    parse_instance_text(text);
  } catch (const Error& e) {
    return e;
  }
  ADD_FAILURE() << "accepted: " << text;
  return Error(ErrorKind::UnknownCommand, "");
}

}  // namespace

TEST(InstanceFile, TwoBindings) {
  const auto f = parse_instance_text("ring R1 = zmod 6; ideal J of R1 = {0,3}");
  ASSERT_EQ(f.bindings.size(), 2u);
  EXPECT_EQ(f.bindings[0].kind, "ring");
  EXPECT_EQ(f.bindings[1].name, "J");
  EXPECT_EQ(f.ideals.at("J").members(), Subset(6, {0, 3}));
}

TEST(InstanceFile, HomBinding) {
  const auto f = parse_instance_text(
      "ring R1 = zmod 6\nring R2 = zmod 3\nhom f : R1 -> R2 = map [0,1,2,0,1,2]\n");
  const auto& h = f.homs.at("f");
  for (Index r = 0; r < 6; ++r) EXPECT_EQ(h(r), r % 3);
}

TEST(InstanceFile, InvalidHomIsValidationError) {
  const auto e = parse_error("ring R1 = zmod 6\nring R2 = zmod 4\nhom f : R1 -> R2 = map [0,1,2,3,0,1]\n");
  EXPECT_EQ(e.kind(), ErrorKind::ValidationError);
  EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
  EXPECT_NE(std::string(e.what()).find("f"), std::string::npos);
}

TEST(InstanceFile, UndeclaredNameNamesTheLine) {
  const auto e = parse_error("ring R1 = zmod 6\n\nsubmodule F of M = {0,3}\n");
  EXPECT_EQ(e.kind(), ErrorKind::ParseError);
  EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
  EXPECT_NE(std::string(e.what()).find("'M'"), std::string::npos);
}

TEST(InstanceFile, SyntaxErrors) {
  EXPECT_EQ(parse_error("ring R1 zmod 6").kind(), ErrorKind::ParseError);
  EXPECT_EQ(parse_error("widget W = zmod 6").kind(), ErrorKind::ParseError);
  EXPECT_EQ(parse_error("ring R1 = zmod 6\nring R1 = zmod 4").kind(), ErrorKind::ParseError);
  EXPECT_EQ(parse_error("ring R1 = zmod 6\nideal J of R1 = {0,3").kind(), ErrorKind::ParseError);
}

TEST(InstanceFile, NotAnIdealIsValidationError) {
  EXPECT_EQ(parse_error("ring R1 = zmod 6\nideal J of R1 = {0,2}").kind(), ErrorKind::ValidationError);
}

TEST(InstanceFile, CommentsAndBlankLines) {
  const auto f = parse_instance_text("# header\n\nring R1 = zmod 5  # trailing\n");
  EXPECT_EQ(f.rings.at("R1")->size(), 5u);
}

TEST(InstanceFile, DisplayNamesInSets) {
  const auto f = parse_instance_text(
      "ring A = zmod 2\nring B = zmod 3\nring P = product [A, B]\nideal I of P = {(0,0),(1,0)}\n");
  EXPECT_EQ(f.ideals.at("I").size(), 2u);
  EXPECT_TRUE(f.ideals.at("I").contains(3));
}

TEST(InstanceFile, ModulesAndSubmodules) {
  const auto f = parse_instance_text(
      "ring R1 = zmod 12\n"
      "ideal D of R1 = generated {6}\n"
      "ring Q = quotient R1 by D\n"
      "hom q : R1 -> Q = canonical\n"
      "module MQ over Q = regular\n"
      "module B over R1 = restrict MQ along q\n"
      "module A over R1 = regular\n"
      "module M over R1 = sum [A, B]\n"
      "submodule F of M = zero\n"
      "submodule G of M = generated {(0,1)}\n");
  EXPECT_EQ(f.modules.at("M")->size(), 72u);
  EXPECT_EQ(f.submodules.at("G").size(), 6u);
  EXPECT_FALSE(is_2absorbing_submodule(f.submodules.at("F")).holds);
}

TEST(InstanceFile, LocalizeBinding) {
  const auto f = parse_instance_text("ring R1 = zmod 12\nmultset S of R1 = {1,2,4,8}\nring L = localize R1 at S\n");
  EXPECT_EQ(f.rings.at("L")->size(), 3u);
}

TEST(InstanceFile, PinsAndChains) {
  const auto f = parse_instance_text(
      "ring R1 = zmod 8\nmodule M over R1 = regular\nsubmodule A of M = {0,4}\nsubmodule B of M = {0,2,4,6}\n"
      "chain C of M = [A, B]\npin J = {0,4}\n");
  EXPECT_EQ(f.chains.at("C").size(), 2u);
  EXPECT_EQ(f.pins.at("J"), (std::vector<Index>{0, 4}));
  EXPECT_TRUE(f.declared("J"));
}

TEST(InstanceFile, Literals) {
  EXPECT_EQ(set_literal(Subset(6, {0, 3})), "{0,3}");
  EXPECT_EQ(list_literal({0, 1, 2}), "[0,1,2]");
}

TEST(InstanceFile, MissingFile) {
  try {
    parse_instance_file("/nonexistent/x.inst");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ParseError);
  }
}

TEST(InstanceFile, ShippedInstancesParse) {
  for (const char* name : {"z30_zero.inst", "z6_amalg.inst", "z6_to_z3.inst", "z12_localize.inst", "z12_plus_z6.inst"})
    EXPECT_NO_THROW(parse_instance_file(std::string(TWOABS_INSTANCES) + "/" + name)) << name;
  EXPECT_THROW(parse_instance_file(std::string(TWOABS_INSTANCES) + "/malformed.inst"), Error);
}
