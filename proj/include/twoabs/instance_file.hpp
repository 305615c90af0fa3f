#pragma once

#include <cctype>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "twoabs/constructions.hpp"
#include "twoabs/localization.hpp"
#include "twoabs/module.hpp"
#include "twoabs/ring.hpp"

namespace twoabs {

// Instance files declare one binding per line (';' also separates bindings):
//
//   ring R1 = zmod 6
//   ring P = product [R1, R2]
//   ring Q = quotient R1 by I          ring L = localize R1 at S
//   ring A = R1                         (alias)
//   ideal J of R1 = {0,3} | generated {4} | zero | whole | annihilator M
//   hom f : R1 -> R2 = identity | map [0,1,2,0,1,2] | canonical
//   multset S of R1 = {1,5} | generated {2}
//   module M over R1 = regular | zero | sum [A, B] | quotient A by F
//                     | restrict N along f | localize A at S | product [A, B] | A
//   modhom phi : M -> N over f = identity | map [..] | canonical | zero
//   submodule F of M = {0,2,4} | generated {2} | zero | whole | times J
//                    | colon F by 3 | residual F by J
//   element r of R1 = 3
//   chain C of M = [F1, F2]
//   pin F = {0,2,4}                     (fixes a role the verifier would enumerate)
//
// '#' starts a comment. Set elements are carrier indices or display names
// such as (1,0).

struct Binding {
  std::string kind;
  std::string name;
  int line = 0;
  std::string text;
};

class InstanceFile {
 public:
  std::vector<Binding> bindings;
  std::map<std::string, RingPtr> rings;
  std::map<std::string, RingHom> homs;
  std::map<std::string, Ideal> ideals;
  std::map<std::string, ModulePtr> modules;
  std::map<std::string, ModuleHom> modhoms;
  std::map<std::string, Submodule> submodules;
  std::map<std::string, MultSet> multsets;
  std::map<std::string, std::pair<std::string, Index>> elements;  // name -> (ring name, index)
  std::map<std::string, std::vector<Submodule>> chains;
  /// Raw index lists fixing an otherwise enumerated role (`pin J = {0,3}`).
  std::map<std::string, std::vector<Index>> pins;

  /// Canonical maps of derived objects: target name -> (source name, map).
  std::map<std::string, std::pair<std::string, RingHom>> ring_canonical;
  std::map<std::string, std::pair<std::string, ModuleHom>> module_canonical;
  std::map<std::string, LocalizedRing> localized_rings;

  bool declared(const std::string& name) const {
    return rings.count(name) || homs.count(name) || ideals.count(name) || modules.count(name) ||
           modhoms.count(name) || submodules.count(name) || multsets.count(name) || elements.count(name) ||
           chains.count(name) || pins.count(name);
  }
};

namespace detail {

struct Token {
  enum Kind { Word, Symbol, Group } kind = Word;
  std::string text;              // word, symbol, or opening bracket for groups
  std::vector<std::string> items;  // top-level comma separated items of a {..} or [..] group
};

class LineParser {
 public:
  LineParser(std::string_view text, int line) : text_(text), line_(line) {}

  [[noreturn]] void error(const std::string& message) const {
    fail(ErrorKind::ParseError, "line " + std::to_string(line_) + ": " + message);
  }

  std::vector<Token> tokenize() {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < text_.size()) {
      const char c = text_[i];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++i;
      } else if (c == '{' || c == '[') {
        const char close = c == '{' ? '}' : ']';
        int depth = 0;
        std::size_t j = i;
        for (; j < text_.size(); ++j) {
          if (text_[j] == c || text_[j] == '(') ++depth;
          if (text_[j] == close || text_[j] == ')') --depth;
          if (depth == 0) break;
        }
        if (j >= text_.size()) error(std::string("unterminated '") + c + "'");
        Token t{Token::Group, std::string(1, c), split_items(text_.substr(i + 1, j - i - 1))};
        out.push_back(std::move(t));
        i = j + 1;
      } else if (c == '-' && i + 1 < text_.size() && text_[i + 1] == '>') {
        out.push_back({Token::Symbol, "->", {}});
        i += 2;
      } else if (c == '=' || c == ':') {
        out.push_back({Token::Symbol, std::string(1, c), {}});
        ++i;
      } else if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'' || c == '.') {
        std::size_t j = i;
        while (j < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[j])) || text_[j] == '_' ||
                                    text_[j] == '\'' || text_[j] == '.'))
          ++j;
        out.push_back({Token::Word, std::string(text_.substr(i, j - i)), {}});
        i = j;
      } else {
        error(std::string("unexpected character '") + c + "'");
      }
    }
    return out;
  }

 private:
  std::vector<std::string> split_items(std::string_view body) const {
    std::vector<std::string> items;
    std::string cur;
    int depth = 0;
    for (char c : body) {
      if (c == '(') ++depth;
      if (c == ')') --depth;
      if (c == ',' && depth == 0) {
        items.push_back(cur);
        cur.clear();
        continue;
      }
      if (!std::isspace(static_cast<unsigned char>(c))) cur.push_back(c);
    }
    if (depth != 0) error("unbalanced parentheses");
    if (!cur.empty()) items.push_back(cur);
    for (const auto& it : items)
      if (it.empty()) error("empty list item");
    return items;
  }

  std::string_view text_;
  int line_;
};

inline std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

inline bool all_digits(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

class Builder {
 public:
  Builder(InstanceFile& file, int line, std::string text) : file_(file), line_(line), text_(std::move(text)) {}

  void run() {
    LineParser lp(text_, line_);
    toks_ = lp.tokenize();
    pos_ = 0;
    const std::string kind = word("binding kind");
    const std::string name = word("binding name");
    if (file_.declared(name)) error("'" + name + "' is already declared");
    try {
      if (kind == "ring") ring(name);
      else if (kind == "ideal") ideal(name);
      else if (kind == "hom") hom(name);
      else if (kind == "multset") multset(name);
      else if (kind == "module") module(name);
      else if (kind == "modhom") modhom(name);
      else if (kind == "submodule") submodule(name);
      else if (kind == "element") element(name);
      else if (kind == "chain") chain(name);
      else if (kind == "pin") pin(name);
      else error("unknown binding kind '" + kind + "'");
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::ParseError || e.kind() == ErrorKind::ValidationError) throw;
      fail(ErrorKind::ValidationError,
           "line " + std::to_string(line_) + ": binding " + name + ": " + std::string(e.what()), e.witness());
    }
    if (pos_ != toks_.size()) error("trailing input after constructor");
    file_.bindings.push_back(Binding{kind, name, line_, text_});
  }

 private:
  [[noreturn]] void error(const std::string& m) const {
    fail(ErrorKind::ParseError, "line " + std::to_string(line_) + ": " + m);
  }

  bool at_end() const { return pos_ >= toks_.size(); }

  const Token& peek() const {
    if (at_end()) error("unexpected end of binding");
    return toks_[pos_];
  }

  std::string word(const char* what) {
    const Token& t = peek();
    if (t.kind != Token::Word) error(std::string("expected ") + what);
    ++pos_;
    return t.text;
  }

  void expect(const std::string& sym) {
    const Token& t = peek();
    if (t.text != sym || t.kind == Token::Group) error("expected '" + sym + "'");
    ++pos_;
  }

  bool accept_word(const std::string& w) {
    if (!at_end() && toks_[pos_].kind == Token::Word && toks_[pos_].text == w) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::vector<std::string> group(char open) {
    const Token& t = peek();
    if (t.kind != Token::Group || t.text[0] != open) error(std::string("expected '") + open + "...'");
    ++pos_;
    return t.items;
  }

  template <class Map>
  const typename Map::mapped_type& lookup(const Map& map, const std::string& name, const char* kind) const {
    auto it = map.find(name);
    if (it == map.end()) error(std::string("undeclared ") + kind + " '" + name + "'");
    return it->second;
  }

  Index resolve(const std::vector<std::string>& names, const std::string& item, const std::string& where) const {
    if (all_digits(item)) {
      const auto v = std::stoull(item);
      if (v >= names.size()) error("element " + item + " outside " + where);
      return static_cast<Index>(v);
    }
    for (Index i = 0; i < names.size(); ++i)
      if (names[i] == item) return i;
    error("unknown element '" + item + "' of " + where);
  }

  Subset set_of(const std::vector<std::string>& names, const std::vector<std::string>& items, const std::string& where) {
    Subset s(names.size());
    for (const auto& it : items) s.insert(resolve(names, it, where));
    return s;
  }

  std::vector<Index> list_of(const std::vector<std::string>& names, const std::vector<std::string>& items,
                             const std::string& where) {
    std::vector<Index> out;
    for (const auto& it : items) out.push_back(resolve(names, it, where));
    return out;
  }

  void ring(const std::string& name) {
    expect("=");
    const std::string ctor = word("ring constructor");
    RingPtr R;
    if (ctor == "zmod") {
      const std::string n = word("modulus");
      if (!all_digits(n)) error("zmod expects a positive integer");
      R = mk_zmod(std::stoull(n));
    } else if (ctor == "product") {
      const auto items = group('[');
      if (items.size() < 2) error("product needs at least two factors");
      R = lookup(file_.rings, items[0], "ring");
      for (std::size_t i = 1; i < items.size(); ++i) R = product_ring(*R, *lookup(file_.rings, items[i], "ring"));
    } else if (ctor == "quotient") {
      const std::string src = word("ring name");
      if (!accept_word("by")) error("expected 'by'");
      const std::string iname = word("ideal name");
      const RingPtr& base = lookup(file_.rings, src, "ring");
      const Ideal& I = lookup(file_.ideals, iname, "ideal");
      if (!same_ring(I.ring(), base)) error("ideal " + iname + " is not an ideal of " + src);
      auto q = quotient_ring(base, I.members());
      R = q.ring;
      file_.ring_canonical[name] = {src, q.projection};
    } else if (ctor == "localize") {
      const std::string src = word("ring name");
      if (!accept_word("at")) error("expected 'at'");
      const std::string sname = word("multset name");
      const RingPtr& base = lookup(file_.rings, src, "ring");
      const MultSet& S = lookup(file_.multsets, sname, "multset");
      if (!same_ring(S.ring(), base)) error("multset " + sname + " is not over " + src);
      auto L = localize_ring(S);
      R = L.ring;
      file_.ring_canonical[name] = {src, L.canonical};
      file_.localized_rings.emplace(name, std::move(L));
    } else if (file_.rings.count(ctor)) {
      R = file_.rings.at(ctor);
    } else {
      error("unknown ring constructor '" + ctor + "'");
    }
    file_.rings[name] = R;
  }

  RingPtr of_ring() {
    if (!accept_word("of")) error("expected 'of'");
    return lookup(file_.rings, word("ring name"), "ring");
  }

  void ideal(const std::string& name) {
    const RingPtr R = of_ring();
    expect("=");
    const std::string where = R->label();
    if (!at_end() && peek().kind == Token::Group) {
      file_.ideals[name] = Ideal::of(R, set_of(R->names(), group('{'), where));
      return;
    }
    const std::string ctor = word("ideal constructor");
    if (ctor == "generated") {
      file_.ideals[name] = ideal_generated(R, list_of(R->names(), group('{'), where));
    } else if (ctor == "zero") {
      file_.ideals[name] = Ideal::zero(R);
    } else if (ctor == "whole") {
      file_.ideals[name] = Ideal::whole(R);
    } else if (ctor == "annihilator") {
      const ModulePtr& M = lookup(file_.modules, word("module name"), "module");
      if (!same_ring(M->ring(), R)) error("module is not over " + where);
      file_.ideals[name] = Ideal::of(R, annihilator(M).members());
    } else if (file_.ideals.count(ctor)) {
      file_.ideals[name] = file_.ideals.at(ctor);
    } else {
      error("unknown ideal constructor '" + ctor + "'");
    }
  }

  void hom(const std::string& name) {
    expect(":");
    const std::string a = word("domain ring");
    expect("->");
    const std::string b = word("codomain ring");
    expect("=");
    const RingPtr& A = lookup(file_.rings, a, "ring");
    const RingPtr& B = lookup(file_.rings, b, "ring");
    const std::string ctor = word("hom constructor");
    if (ctor == "identity") {
      if (!same_ring(A, B)) error("identity needs equal rings");
      file_.homs[name] = RingHom::make(A, B, RingHom::identity(A).map());
    } else if (ctor == "map") {
      file_.homs[name] = RingHom::make(A, B, list_of(B->names(), group('['), B->label()));
    } else if (ctor == "canonical") {
      auto it = file_.ring_canonical.find(b);
      if (it == file_.ring_canonical.end() || it->second.first != a)
        error("no canonical map " + a + " -> " + b);
      file_.homs[name] = it->second.second;
    } else {
      error("unknown hom constructor '" + ctor + "'");
    }
  }

  void multset(const std::string& name) {
    const RingPtr R = of_ring();
    expect("=");
    if (!at_end() && peek().kind == Token::Group) {
      file_.multsets[name] = MultSet::of(R, set_of(R->names(), group('{'), R->label()));
      return;
    }
    const std::string ctor = word("multset constructor");
    if (ctor != "generated") error("unknown multset constructor '" + ctor + "'");
    file_.multsets[name] = MultSet::generated(R, list_of(R->names(), group('{'), R->label()));
  }

  void module(const std::string& name) {
    RingPtr over;
    std::string over_name;
    if (accept_word("over")) {
      over_name = word("ring name");
      over = lookup(file_.rings, over_name, "ring");
    }
    expect("=");
    const std::string ctor = word("module constructor");
    auto need_over = [&]() -> const RingPtr& {
      if (!over) error("constructor '" + ctor + "' needs 'over RING'");
      return over;
    };
    ModulePtr M;
    if (ctor == "regular") {
      M = regular_module(need_over());
    } else if (ctor == "zero") {
      M = zero_module(need_over());
    } else if (ctor == "sum") {
      const auto items = group('[');
      if (items.size() < 2) error("sum needs at least two summands");
      M = lookup(file_.modules, items[0], "module");
      for (std::size_t i = 1; i < items.size(); ++i) M = direct_sum(*M, *lookup(file_.modules, items[i], "module"));
    } else if (ctor == "product") {
      const auto items = group('[');
      if (items.size() < 2) error("product needs at least two factors");
      M = lookup(file_.modules, items[0], "module");
      for (std::size_t i = 1; i < items.size(); ++i) {
        const bool last = i + 1 == items.size();
        M = product_module(*M, *lookup(file_.modules, items[i], "module"), last ? over : nullptr);
      }
    } else if (ctor == "quotient") {
      const std::string src = word("module name");
      if (!accept_word("by")) error("expected 'by'");
      const std::string fname = word("submodule name");
      const ModulePtr& base = lookup(file_.modules, src, "module");
      const Submodule& F = lookup(file_.submodules, fname, "submodule");
      if (!same_module(F.module(), base)) error("submodule " + fname + " is not in " + src);
      auto q = quotient_module(base, F.members());
      M = q.module;
      file_.module_canonical[name] = {src, q.projection};
    } else if (ctor == "restrict") {
      const ModulePtr& N = lookup(file_.modules, word("module name"), "module");
      if (!accept_word("along")) error("expected 'along'");
      M = restrict_scalars(*N, lookup(file_.homs, word("hom name"), "hom"));
    } else if (ctor == "localize") {
      const std::string src = word("module name");
      if (!accept_word("at")) error("expected 'at'");
      const std::string sname = word("multset name");
      need_over();
      auto lit = file_.localized_rings.find(over_name);
      if (lit == file_.localized_rings.end()) error(over_name + " is not a localized ring");
      const MultSet& S = lookup(file_.multsets, sname, "multset");
      if (S.members() != lit->second.S.members()) error(over_name + " was localized at a different set");
      const ModulePtr& base = lookup(file_.modules, src, "module");
      auto LM = localize_module(base, lit->second);
      M = LM.module;
      file_.module_canonical[name] = {src, LM.canonical};
    } else if (file_.modules.count(ctor)) {
      M = file_.modules.at(ctor);
    } else {
      error("unknown module constructor '" + ctor + "'");
    }
    if (over && !same_ring(M->ring(), over)) error("module is not over " + over_name);
    file_.modules[name] = M;
  }

  void modhom(const std::string& name) {
    expect(":");
    const std::string a = word("domain module");
    expect("->");
    const std::string b = word("codomain module");
    if (!accept_word("over")) error("expected 'over HOM'");
    const std::string fname = word("hom name");
    expect("=");
    const ModulePtr& M = lookup(file_.modules, a, "module");
    const ModulePtr& N = lookup(file_.modules, b, "module");
    const RingHom& f = lookup(file_.homs, fname, "hom");
    const std::string ctor = word("modhom constructor");
    if (ctor == "identity") {
      if (M->size() != N->size()) error("identity needs equal carriers");
      std::vector<Index> map(M->size());
      for (Index i = 0; i < map.size(); ++i) map[i] = i;
      file_.modhoms[name] = ModuleHom::make(f, M, N, std::move(map));
    } else if (ctor == "zero") {
      file_.modhoms[name] = ModuleHom::make(f, M, N, std::vector<Index>(M->size(), N->zero()));
    } else if (ctor == "map") {
      file_.modhoms[name] = ModuleHom::make(f, M, N, list_of(N->names(), group('['), N->label()));
    } else if (ctor == "canonical") {
      auto it = file_.module_canonical.find(b);
      if (it == file_.module_canonical.end() || it->second.first != a) error("no canonical map " + a + " -> " + b);
      file_.modhoms[name] = ModuleHom::make(f, M, N, it->second.second.map());
    } else {
      error("unknown modhom constructor '" + ctor + "'");
    }
  }

  void submodule(const std::string& name) {
    if (!accept_word("of")) error("expected 'of'");
    const std::string mname = word("module name");
    const ModulePtr& M = lookup(file_.modules, mname, "module");
    expect("=");
    const std::string where = M->label();
    if (!at_end() && peek().kind == Token::Group) {
      file_.submodules[name] = Submodule::of(M, set_of(M->names(), group('{'), where));
      return;
    }
    const std::string ctor = word("submodule constructor");
    if (ctor == "generated") {
      file_.submodules[name] = submodule_generated(M, list_of(M->names(), group('{'), where));
    } else if (ctor == "zero") {
      file_.submodules[name] = Submodule::zero(M);
    } else if (ctor == "whole") {
      file_.submodules[name] = Submodule::whole(M);
    } else if (ctor == "times") {
      const Ideal& J = lookup(file_.ideals, word("ideal name"), "ideal");
      file_.submodules[name] = ideal_times_module(J, M);
    } else if (ctor == "colon") {
      const Submodule& F = lookup(file_.submodules, word("submodule name"), "submodule");
      if (!accept_word("by")) error("expected 'by'");
      const std::string r = word("ring element");
      file_.submodules[name] = colon_by_element(Submodule::of(M, F.members()), resolve(M->ring()->names(), r, M->ring()->label()));
    } else if (ctor == "residual") {
      const Submodule& F = lookup(file_.submodules, word("submodule name"), "submodule");
      if (!accept_word("by")) error("expected 'by'");
      const Ideal& I = lookup(file_.ideals, word("ideal name"), "ideal");
      file_.submodules[name] = residual_by_ideal(Submodule::of(M, F.members()), I);
    } else if (file_.submodules.count(ctor)) {
      file_.submodules[name] = Submodule::of(M, file_.submodules.at(ctor).members());
    } else {
      error("unknown submodule constructor '" + ctor + "'");
    }
  }

  void element(const std::string& name) {
    if (!accept_word("of")) error("expected 'of'");
    const std::string rname = word("ring name");
    const RingPtr& R = lookup(file_.rings, rname, "ring");
    expect("=");
    const std::string v = word("element");
    file_.elements[name] = {rname, resolve(R->names(), v, R->label())};
  }

  void pin(const std::string& name) {
    expect("=");
    const Token& t = peek();
    if (t.kind != Token::Group) error("expected an index list");
    ++pos_;
    std::vector<Index> v;
    for (const auto& it : t.items) {
      if (!all_digits(it)) error("pin entries must be carrier indices");
      v.push_back(static_cast<Index>(std::stoul(it)));
    }
    file_.pins[name] = std::move(v);
  }

  void chain(const std::string& name) {
    if (!accept_word("of")) error("expected 'of'");
    const ModulePtr& M = lookup(file_.modules, word("module name"), "module");
    expect("=");
    std::vector<Submodule> subs;
    for (const auto& item : group('[')) {
      const Submodule& F = lookup(file_.submodules, item, "submodule");
      if (!same_module(F.module(), M)) error("submodule " + item + " is not in the chain's module");
      subs.push_back(F);
    }
    validate_chain(subs);
    file_.chains[name] = std::move(subs);
  }

  InstanceFile& file_;
  int line_;
  std::string text_;
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses and validates an instance description. Errors carry the line:
/// ParseError for grammar and scoping problems, ValidationError when a
/// binding fails its type's checks.
inline InstanceFile parse_instance_text(std::string_view text) {
  InstanceFile file;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    std::string_view line = text.substr(start, end - start);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::size_t s = 0;
    while (s <= line.size()) {
      std::size_t e = line.find(';', s);
      if (e == std::string_view::npos) e = line.size();
      const std::string stmt = detail::trim(line.substr(s, e - s));
      if (!stmt.empty()) detail::Builder(file, line_no, stmt).run();
      s = e + 1;
    }
    start = end + 1;
  }
  return file;
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::ParseError, "cannot read instance file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline InstanceFile parse_instance_file(const std::string& path) { return parse_instance_text(read_text_file(path)); }

/// Instance-file literal for a subset, e.g. "{0,3}".
inline std::string set_literal(const Subset& s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](Index i) {
    if (!first) out += ",";
    out += std::to_string(i);
    first = false;
  });
  return out + "}";
}

inline std::string list_literal(const std::vector<Index>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + "]";
}

}  // namespace twoabs
