#pragma once

#include <cstdint>
#include <iomanip>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "twoabs/budget.hpp"
#include "twoabs/error.hpp"
#include "twoabs/verdict.hpp"
#include "twoabs/verifier/canned_examples.hpp"
#include "twoabs/verifier/sweep.hpp"

namespace twoabs {

enum class ReportVerdict { Holds, Fails, Info };

inline std::string_view to_string(ReportVerdict v) {
  switch (v) {
    case ReportVerdict::Holds: return "YES";
    case ReportVerdict::Fails: return "NO";
    case ReportVerdict::Info: return "INFO";
  }
  return "INFO";
}

inline ReportVerdict parse_report_verdict(std::string_view s) {
  if (s == "YES") return ReportVerdict::Holds;
  if (s == "NO") return ReportVerdict::Fails;
  if (s == "INFO") return ReportVerdict::Info;
  fail(ErrorKind::ParseError, "unknown verdict '" + std::string(s) + "'");
}

struct CounterexampleRecord {
  std::string label;
  std::string instance;  // digest of `source`
  std::string source;
  Witness witness;
  std::string detail;

  friend bool operator==(const CounterexampleRecord&, const CounterexampleRecord&) = default;
};

struct ReportEntry {
  std::string statement;  // statement id or property name
  std::string subject;
  std::string instance;  // digest of the instance text
  ReportVerdict verdict = ReportVerdict::Info;
  Witness witness;
  std::map<std::string, std::uint64_t> counts;
  std::vector<std::string> notes;
  std::vector<CounterexampleRecord> counterexamples;

  friend bool operator==(const ReportEntry&, const ReportEntry&) = default;
};

struct Report {
  std::string command;
  std::vector<std::pair<std::string, std::string>> facts;
  std::vector<ReportEntry> entries;
  std::vector<std::string> out_of_scope;
  std::uint64_t budget_limit = Budget::kDefaultLimit;
  bool budget_forced = false;
  double seconds = 0;  // text rendering only

  void fact(const std::string& name, const std::string& value) { facts.emplace_back(name, value); }
  void fact(const std::string& name, std::size_t value) { facts.emplace_back(name, std::to_string(value)); }

  bool all_hold() const {
    for (const auto& e : entries)
      if (e.verdict == ReportVerdict::Fails) return false;
    return true;
  }

  int exit_code() const { return all_hold() ? 0 : 1; }

  /// Everything but timing.
  bool same_data(const Report& o) const {
    return command == o.command && facts == o.facts && entries == o.entries && out_of_scope == o.out_of_scope &&
           budget_limit == o.budget_limit && budget_forced == o.budget_forced;
  }
};

inline ReportEntry verdict_entry(const std::string& property, const std::string& subject, const std::string& digest,
                                 const Verdict& v) {
  ReportEntry e;
  e.statement = property;
  e.subject = subject;
  e.instance = digest;
  e.verdict = v.holds ? ReportVerdict::Holds : ReportVerdict::Fails;
  e.witness = v.witness;
  e.counts["iterations"] = v.iterations;
  return e;
}

inline ReportEntry statement_entry(const verify::StatementReport& s, const std::string& subject,
                                   const std::string& digest) {
  ReportEntry e;
  e.statement = std::string(verify::tag(s.id));
  e.subject = subject;
  e.instance = digest;
  e.verdict = s.holds() ? ReportVerdict::Holds : ReportVerdict::Fails;
  if (!s.holds()) e.witness = s.counterexamples.front().witness;
  e.counts = {{"instances", s.instances},
              {"cases", s.cases},
              {"hypotheses_satisfied", s.hypotheses_satisfied},
              {"confirmed", s.confirmed},
              {"hypothesis_failed", s.hypothesis_failed},
              {"skipped", s.skipped},
              {"counterexamples", s.counterexamples.size()},
              {"iterations", s.iterations}};
  e.notes = s.flags;
  for (const auto& c : s.counterexamples)
    e.counterexamples.push_back({c.case_label, c.spec.digest(), c.spec.source, c.witness, c.detail});
  return e;
}

/// Digest of a whole family: FNV-1a over the concatenated instance digests.
inline std::string family_digest(const std::vector<verify::InstanceSpec>& instances) {
  std::string all;
  for (const auto& i : instances) all += i.digest();
  return verify::fnv1a_hex(all);
}

inline Report sweep_report(const verify::SweepReport& sweep, const std::vector<verify::InstanceSpec>& instances,
                           const std::string& subject, const Budget& budget) {
  Report r;
  r.command = "verify";
  r.budget_limit = budget.limit;
  r.budget_forced = budget.force;
  r.fact("instances", sweep.instances);
  const std::string digest = instances.size() == 1 ? instances.front().digest() : family_digest(instances);
  for (const auto& s : sweep.statements) r.entries.push_back(statement_entry(s, subject, digest));
  r.out_of_scope = verify::out_of_scope();
  r.seconds = sweep.seconds;
  return r;
}

inline ReportEntry example_entry(const verify::ExampleResult& x) {
  ReportEntry e;
  e.statement = "example";
  e.subject = x.example->name;
  e.instance = x.example->spec.digest();
  e.verdict = x.matched ? ReportVerdict::Holds : ReportVerdict::Fails;
  e.witness = x.actual.witness;
  e.counts["iterations"] = x.actual.iterations;
  e.notes.push_back(x.example->note);
  if (!x.detail.empty()) e.notes.push_back(x.detail);
  return e;
}

// ---------------------------------------------------------------------------
// Text

inline std::string witness_text(const Witness& w) {
  std::string out;
  for (const auto& e : w) {
    if (!out.empty()) out += ' ';
    out += e.role + '=' + (e.name.empty() ? std::to_string(e.index) : e.name);
  }
  return out;
}

inline constexpr std::size_t kTextCounterexamples = 3;  // JSON keeps all of them

inline std::string render_text(const Report& r) {
  std::ostringstream out;
  out << "command: " << r.command << '\n';
  for (const auto& [k, v] : r.facts) out << k << ": " << v << '\n';
  for (const auto& e : r.entries) {
    out << e.statement;
    if (!e.subject.empty()) out << ' ' << e.subject;
    out << ": " << to_string(e.verdict);
    if (!e.witness.empty()) out << ", witness " << witness_text(e.witness);
    out << '\n';
    if (e.counts.count("counterexamples")) {
      out << "  " << e.counts.at("counterexamples") << " counterexamples / " << e.counts.at("instances")
          << " instances";
      out << " (cases " << e.counts.at("cases") << ", hypotheses " << e.counts.at("hypotheses_satisfied")
          << ", confirmed " << e.counts.at("confirmed") << ", skipped " << e.counts.at("skipped") << ")\n";
    }
    for (const auto& n : e.notes) out << "  note: " << n << '\n';
    for (std::size_t i = 0; i < e.counterexamples.size(); ++i) {
      if (i == kTextCounterexamples) {
        out << "  ... " << e.counterexamples.size() - i << " more counterexamples\n";
        break;
      }
      const auto& c = e.counterexamples[i];
      out << "  counterexample " << c.label << " [" << c.instance << "]";
      if (!c.witness.empty()) out << " witness " << witness_text(c.witness);
      if (!c.detail.empty()) out << ": " << c.detail;
      out << '\n';
      std::istringstream src(c.source);
      for (std::string line; std::getline(src, line);) out << "    | " << line << '\n';
    }
  }
  if (!r.out_of_scope.empty()) {
    out << "out of scope:\n";
    for (const auto& s : r.out_of_scope) out << "  " << s << '\n';
  }
  out << "budget: " << r.budget_limit << (r.budget_forced ? " (forced)" : "") << '\n';
  out << "time: " << std::fixed << std::setprecision(3) << r.seconds << " s\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// JSON

inline nlohmann::ordered_json witness_json(const Witness& w) {
  auto out = nlohmann::ordered_json::array();
  for (const auto& e : w) out.push_back({{"role", e.role}, {"index", e.index}, {"name", e.name}});
  return out;
}

inline Witness witness_from_json(const nlohmann::ordered_json& j) {
  Witness w;
  for (const auto& e : j) w.push_back({e.at("role").get<std::string>(), e.at("index").get<Index>(), e.at("name").get<std::string>()});
  return w;
}

inline nlohmann::ordered_json to_json(const Report& r) {
  nlohmann::ordered_json j;
  j["command"] = r.command;
  auto facts = nlohmann::ordered_json::array();
  for (const auto& [k, v] : r.facts) facts.push_back({{"name", k}, {"value", v}});
  j["facts"] = facts;
  auto entries = nlohmann::ordered_json::array();
  for (const auto& e : r.entries) {
    nlohmann::ordered_json x;
    x["statement"] = e.statement;
    x["subject"] = e.subject;
    x["instance"] = e.instance;
    x["verdict"] = std::string(to_string(e.verdict));
    x["witness"] = witness_json(e.witness);
    x["counts"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : e.counts) x["counts"][k] = v;
    x["notes"] = e.notes;
    auto cs = nlohmann::ordered_json::array();
    for (const auto& c : e.counterexamples)
      cs.push_back({{"label", c.label},
                    {"instance", c.instance},
                    {"source", c.source},
                    {"witness", witness_json(c.witness)},
                    {"detail", c.detail}});
    x["counterexamples"] = cs;
    entries.push_back(std::move(x));
  }
  j["entries"] = entries;
  j["out_of_scope"] = r.out_of_scope;
  j["budget"] = {{"limit", r.budget_limit}, {"forced", r.budget_forced}};
  return j;
}

inline std::string render_json(const Report& r) { return to_json(r).dump(2) + "\n"; }

inline Report parse_json_report(const std::string& text) {
  try {
    const auto j = nlohmann::ordered_json::parse(text);
    Report r;
    r.command = j.at("command").get<std::string>();
    for (const auto& f : j.at("facts")) r.fact(f.at("name").get<std::string>(), f.at("value").get<std::string>());
    for (const auto& x : j.at("entries")) {
      ReportEntry e;
      e.statement = x.at("statement").get<std::string>();
      e.subject = x.at("subject").get<std::string>();
      e.instance = x.at("instance").get<std::string>();
      e.verdict = parse_report_verdict(x.at("verdict").get<std::string>());
      e.witness = witness_from_json(x.at("witness"));
      for (const auto& [k, v] : x.at("counts").items()) e.counts[k] = v.get<std::uint64_t>();
      e.notes = x.at("notes").get<std::vector<std::string>>();
      for (const auto& c : x.at("counterexamples"))
        e.counterexamples.push_back({c.at("label").get<std::string>(), c.at("instance").get<std::string>(),
                                     c.at("source").get<std::string>(), witness_from_json(c.at("witness")),
                                     c.at("detail").get<std::string>()});
      r.entries.push_back(std::move(e));
    }
    r.out_of_scope = j.at("out_of_scope").get<std::vector<std::string>>();
    r.budget_limit = j.at("budget").at("limit").get<std::uint64_t>();
    r.budget_forced = j.at("budget").at("forced").get<bool>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::ParseError, std::string("report: ") + e.what());
  }
}

}  // namespace twoabs
