#pragma once

#include <algorithm>
#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "twoabs/error.hpp"

namespace twoabs::verify {

enum class StatementId {
  P2_1, P2_2, P2_3a, P2_3b, P2_4a, P2_4b, P2_6, P2_7,
  L3_1a, L3_1b, L3_2, L3_3,
  T3_4a, T3_4b,
  C3_5,
  C3_8_1, C3_8_2, C3_8_3,
  C3_9_1, C3_9_2, C3_9_3, C3_9_4, C3_9_5, C3_9_6, C3_9_7,
  C3_10_1, C3_10_2, C3_10_3, C3_10_4,
};

struct StatementInfo {
  StatementId id;
  std::string_view tag;
  std::string_view statement;
  bool iff;
};

inline const std::vector<StatementInfo>& catalog() {
  using S = StatementId;
  static const std::vector<StatementInfo> items = {
      {S::P2_1, "P2_1", "F 2-absorbing, K1 not in F => (F :_R K1) is a 2-absorbing ideal", false},
      {S::P2_2, "P2_2", "F 2-absorbing, r not in (F :_R M) => (F :_M r) is 2-absorbing and contains F", false},
      {S::P2_3a, "P2_3a", "intersection of a chain of 2-absorbing submodules is 2-absorbing", false},
      {S::P2_3b, "P2_3b", "union of a chain of 2-absorbing submodules of a finitely generated M is 2-absorbing", false},
      {S::P2_4a, "P2_4a", "F 2-absorbing, (F :_R M) meets no element of S => S^-1 F is 2-absorbing in S^-1 M", false},
      {S::P2_4b, "P2_4b", "S^-1 F 2-absorbing, Z(M/F) meets no element of S => F is 2-absorbing", false},
      {S::P2_6, "P2_6", "I is a 2-absorbing ideal of R <=> I(+)M is a 2-absorbing ideal of R(+)M", true},
      {S::P2_7, "P2_7", "IM in F, I(+)F a 2-absorbing ideal of R(+)M => I is a 2-absorbing ideal of R", false},
      {S::L3_1a, "L3_1a", "phi surjective, Ker(phi) in F, F 2-absorbing => phi(F) is 2-absorbing in N", false},
      {S::L3_1b, "L3_1b", "N2 2-absorbing in N => phi^-1(N2) is 2-absorbing in M", false},
      {S::L3_2, "L3_2", "K in F: F is 2-absorbing in M <=> F/K is 2-absorbing in M/K", true},
      {S::L3_3, "L3_3", "F is 2-absorbing in M <=> (0) is 2-absorbing in M/F", true},
      {S::T3_4a, "T3_4a", "F |><|^phi JN is 2-absorbing in M |><|^phi JN <=> F is 2-absorbing in M", true},
      {S::T3_4b, "T3_4b", "N2-bar is 2-absorbing in M |><|^phi JN <=> N2 is 2-absorbing in phi(M)+JN", true},
      {S::C3_5, "C3_5", "duplication: F |><| J <=> F and N2-bar <=> N2 (2-absorbing in M |><| J)", true},
      {S::C3_8_1, "C3_8_1", "F = P1 cap P2 for distinct prime submodules => F |><|^phi JN is 2-absorbing", false},
      {S::C3_8_2, "C3_8_2", "M cyclic, (F :_R M) a 2-absorbing ideal => F |><|^phi JN is 2-absorbing", false},
      {S::C3_8_3, "C3_8_3", "M cyclic, F P-primary with P^2 M in F => F |><|^phi JN is 2-absorbing", false},
      {S::C3_9_1, "C3_9_1", "F 2-absorbing, K1 not in F => (F :_R K1) |><|^phi JN is 2-absorbing", false},
      {S::C3_9_2, "C3_9_2", "F 2-absorbing and proper => (F :_R M) |><|^phi JN is 2-absorbing", false},
      {S::C3_9_3, "C3_9_3", "F 2-absorbing, r not in (F :_R M) => (F :_M r) |><|^phi JN is 2-absorbing", false},
      {S::C3_9_4, "C3_9_4", "chain of 2-absorbing submodules => (cap F_i) |><|^phi JN is 2-absorbing", false},
      {S::C3_9_5, "C3_9_5", "chain of 2-absorbing submodules => (cup F_i) |><|^phi JN is 2-absorbing", false},
      {S::C3_9_6, "C3_9_6", "F 2-absorbing, (F :_R M) misses S => S^-1 F |><| (S^-1 J)(S^-1 N) is 2-absorbing", false},
      {S::C3_9_7, "C3_9_7", "S^-1 F 2-absorbing, Z(M/F) misses S => F |><|^phi JN is 2-absorbing", false},
      {S::C3_10_1, "C3_10_1", "M multiplication, (F :_R M) 2-absorbing => F |><|^phi JN is 2-absorbing", false},
      {S::C3_10_2, "C3_10_2", "M multiplication, F = IM, I 2-absorbing containing ann(M) => F |><|^phi JN is 2-absorbing",
       false},
      {S::C3_10_3, "C3_10_3", "F = F1 x F2 with F1 or F2 2-absorbing or prime => F |><|^phi JN is 2-absorbing", false},
      {S::C3_10_4, "C3_10_4",
       "F = F1 x F2 x F3 with some F_k 2-absorbing or two F_k prime => F |><|^phi JN is 2-absorbing", false},
  };
  return items;
}

inline const StatementInfo& info(StatementId id) { return catalog().at(static_cast<std::size_t>(id)); }

inline std::string_view tag(StatementId id) { return info(id).tag; }

/// Accepts tags case-insensitively, with '.' or '_' as separators ("t3.4a").
inline StatementId parse_statement_id(std::string_view text) {
  std::string norm;
  for (char c : text) norm.push_back(c == '.' ? '_' : static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  for (const auto& s : catalog()) {
    std::string t(s.tag);
    std::transform(t.begin(), t.end(), t.begin(), [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    if (t == norm) return s.id;
  }
  fail(ErrorKind::UnknownStatement, "unknown statement '" + std::string(text) + "'");
}

/// "all", a single tag, or a prefix group such as "P2" or "C3_9".
inline std::vector<StatementId> parse_statement_ids(std::string_view text) {
  std::string norm;
  for (char c : text) norm.push_back(c == '.' ? '_' : static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  std::vector<StatementId> out;
  if (norm == "ALL") {
    for (const auto& s : catalog()) out.push_back(s.id);
    return out;
  }
  for (const auto& s : catalog()) {
    std::string t(s.tag);
    std::transform(t.begin(), t.end(), t.begin(), [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    if (t == norm) return {s.id};
  }
  for (const auto& s : catalog()) {
    std::string t(s.tag);
    std::transform(t.begin(), t.end(), t.begin(), [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    if (t.rfind(norm + "_", 0) == 0 || (t.rfind(norm, 0) == 0 && t.size() == norm.size() + 1 && std::islower(s.tag.back())))
      out.push_back(s.id);
  }
  if (out.empty()) fail(ErrorKind::UnknownStatement, "unknown statement '" + std::string(text) + "'");
  return out;
}

/// Claims excluded from the catalog because their hypotheses need infinite structures.
inline const std::vector<std::string>& out_of_scope() {
  static const std::vector<std::string> items = {
      "valuation-module corollaries over integral domains (infinite carriers)",
      "examples over Z, Q[[X]] and Z x Z6 (finite analogs are used instead)",
  };
  return items;
}

}  // namespace twoabs::verify
