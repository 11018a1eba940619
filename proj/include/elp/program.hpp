#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <tuple>
#include <variant>
#include <vector>

#include "elp/syntax.hpp"

namespace elp {

struct SourceLocation {
  int line = 0;
  int column = 0;
};

// not^depth core, where core is an explicit literal or a truth constant.
struct ObjectiveLiteral {
  enum class Core : std::uint8_t { Literal, True, False };
  Core core = Core::Literal;
  ExplicitLiteral lit;
  int depth = 0;

  static ObjectiveLiteral of(ExplicitLiteral l, int depth = 0) {
    return {Core::Literal, std::move(l), depth};
  }
  static ObjectiveLiteral truth(bool value) {
    return {value ? Core::True : Core::False, {}, 0};
  }
  bool is_constant() const { return core != Core::Literal; }

  auto operator<=>(const ObjectiveLiteral&) const = default;
  bool operator==(const ObjectiveLiteral&) const = default;
};

enum class Modality : std::uint8_t { K, M };

// not^depth K inner / not^depth M inner
struct SubjectiveLiteral {
  Modality modality = Modality::K;
  ObjectiveLiteral inner;
  int depth = 0;

  auto operator<=>(const SubjectiveLiteral&) const = default;
  bool operator==(const SubjectiveLiteral&) const = default;
};

using Literal = std::variant<ObjectiveLiteral, SubjectiveLiteral>;

inline bool is_subjective(const Literal& l) { return std::holds_alternative<SubjectiveLiteral>(l); }

struct Rule {
  std::vector<ObjectiveLiteral> head;
  std::vector<Literal> body;
  SourceLocation location;

  bool operator==(const Rule& o) const { return head == o.head && body == o.body; }
  bool operator<(const Rule& o) const {
    return std::tie(head, body) < std::tie(o.head, o.body);
  }
};

struct Program {
  std::vector<Rule> rules;
  std::set<std::string> constants;  // declared with #const

  bool operator==(const Program& o) const { return rules == o.rules; }
};

// Truth constants under default negation collapse: not ⊤ = ⊥, not ⊥ = ⊤.
inline ObjectiveLiteral normalize(ObjectiveLiteral l) {
  if (l.is_constant() && l.depth > 0) {
    bool v = l.core == ObjectiveLiteral::Core::True;
    if (l.depth % 2 == 1) { v = !v; }
    return ObjectiveLiteral::truth(v);
  }
  while (l.depth > 2) { l.depth -= 2; }
  return l;
}

inline SubjectiveLiteral normalize(SubjectiveLiteral l) {
  l.inner = normalize(l.inner);
  while (l.depth > 2) { l.depth -= 2; }
  return l;
}

// Sorted, duplicate-free rules and literals.  Programs are sets.
inline Program canonical(Program p) {
  for (auto& r : p.rules) {
    for (auto& h : r.head) { h = normalize(h); }
    for (auto& b : r.body) {
      if (auto* o = std::get_if<ObjectiveLiteral>(&b)) { *o = normalize(*o); }
      else { std::get<SubjectiveLiteral>(b) = normalize(std::get<SubjectiveLiteral>(b)); }
    }
    std::sort(r.head.begin(), r.head.end());
    r.head.erase(std::unique(r.head.begin(), r.head.end()), r.head.end());
    std::sort(r.body.begin(), r.body.end());
    r.body.erase(std::unique(r.body.begin(), r.body.end()), r.body.end());
  }
  std::stable_sort(p.rules.begin(), p.rules.end());
  p.rules.erase(std::unique(p.rules.begin(), p.rules.end()), p.rules.end());
  return p;
}

// Printing

inline std::string to_string(const ObjectiveLiteral& l) {
  std::string out;
  for (int i = 0; i < l.depth; ++i) { out += "not "; }
  switch (l.core) {
    case ObjectiveLiteral::Core::True: out += "#true"; break;
    case ObjectiveLiteral::Core::False: out += "#false"; break;
    case ObjectiveLiteral::Core::Literal: out += to_string(l.lit); break;
  }
  return out;
}

inline std::string to_string(const SubjectiveLiteral& l) {
  std::string out;
  for (int i = 0; i < l.depth; ++i) { out += "not "; }
  out += l.modality == Modality::K ? "K " : "M ";
  return out + to_string(l.inner);
}

inline std::string to_string(const Literal& l) {
  return std::visit([](auto const& x) { return to_string(x); }, l);
}

inline std::string to_string(const Rule& r) {
  if (r.head.empty() && r.body.empty()) { return ":- ."; }
  std::string out;
  for (std::size_t i = 0; i < r.head.size(); ++i) {
    if (i) { out += " | "; }
    out += to_string(r.head[i]);
  }
  if (!r.body.empty()) {
    out += r.head.empty() ? ":- " : " :- ";
    for (std::size_t i = 0; i < r.body.size(); ++i) {
      if (i) { out += ", "; }
      out += to_string(r.body[i]);
    }
  }
  return out + ".";
}

// Canonical text: #const directives, then sorted rules, one per line.
inline std::string to_string(const Program& p) {
  std::string out;
  for (auto const& c : p.constants) { out += "#const " + c + ".\n"; }
  std::vector<std::string> lines;
  for (auto const& r : p.rules) { lines.push_back(to_string(r)); }
  std::sort(lines.begin(), lines.end());
  lines.erase(std::unique(lines.begin(), lines.end()), lines.end());
  for (auto const& l : lines) { out += l + "\n"; }
  return out;
}

// Identification of rules with formulas.

inline Formula to_formula(const ObjectiveLiteral& l) {
  Formula f;
  switch (l.core) {
    case ObjectiveLiteral::Core::True: f = Formula::top(); break;
    case ObjectiveLiteral::Core::False: f = Formula::bot(); break;
    case ObjectiveLiteral::Core::Literal: f = Formula::literal(l.lit); break;
  }
  for (int i = 0; i < l.depth; ++i) { f = Formula::dneg(f); }
  return f;
}

inline Formula to_formula(const SubjectiveLiteral& l) {
  Formula inner = to_formula(l.inner);
  Formula f = l.modality == Modality::K ? Formula::k(inner) : Formula::m(inner);
  for (int i = 0; i < l.depth; ++i) { f = Formula::dneg(f); }
  return f;
}

inline Formula to_formula(const Literal& l) {
  return std::visit([](auto const& x) { return to_formula(x); }, l);
}

inline Formula body_formula(const Rule& r) {
  std::vector<Formula> fs;
  for (auto const& l : r.body) { fs.push_back(to_formula(l)); }
  return Formula::conj(fs);
}

inline Formula head_formula(const Rule& r) {
  std::vector<Formula> fs;
  for (auto const& l : r.head) { fs.push_back(to_formula(l)); }
  return Formula::disj(fs);
}

inline Formula to_formula(const Rule& r) {
  return Formula::implies(head_formula(r), body_formula(r));
}

inline Theory program_to_theory(const Program& p) {
  Theory t;
  for (auto const& r : p.rules) { t.push_back(to_formula(r)); }
  return t;
}

// Rule accessors

inline bool has_subjective(const Program& p) {
  for (auto const& r : p.rules) {
    for (auto const& l : r.body) {
      if (is_subjective(l)) { return true; }
    }
  }
  return false;
}

inline bool has_subjective_under_negation(const Program& p) {
  for (auto const& r : p.rules) {
    for (auto const& l : r.body) {
      if (auto* s = std::get_if<SubjectiveLiteral>(&l); s && s->depth > 0) { return true; }
    }
  }
  return false;
}

inline bool all_subjective_under_negation(const Program& p) {
  for (auto const& r : p.rules) {
    for (auto const& l : r.body) {
      if (auto* s = std::get_if<SubjectiveLiteral>(&l); s && s->depth == 0) { return false; }
    }
  }
  return true;
}

inline std::set<ExplicitLiteral> head_literals(const Rule& r) {
  std::set<ExplicitLiteral> out;
  for (auto const& h : r.head) {
    if (!h.is_constant()) { out.insert(h.lit); }
  }
  return out;
}

inline std::set<Atom> head_atoms(const Rule& r) {
  std::set<Atom> out;
  for (auto const& h : r.head) {
    if (!h.is_constant()) { out.insert(h.lit.atom); }
  }
  return out;
}

// Atoms in objective body literals.
inline std::set<Atom> bodyr(const Rule& r) {
  std::set<Atom> out;
  for (auto const& l : r.body) {
    if (auto* o = std::get_if<ObjectiveLiteral>(&l); o && !o->is_constant()) {
      out.insert(o->lit.atom);
    }
  }
  return out;
}

// Explicit literals in positive objective body literals.
inline std::set<ExplicitLiteral> bodyrp(const Rule& r) {
  std::set<ExplicitLiteral> out;
  for (auto const& l : r.body) {
    if (auto* o = std::get_if<ObjectiveLiteral>(&l); o && !o->is_constant() && o->depth == 0) {
      out.insert(o->lit);
    }
  }
  return out;
}

// Atoms in subjective body literals.
inline std::set<Atom> bodym(const Rule& r) {
  std::set<Atom> out;
  for (auto const& l : r.body) {
    if (auto* s = std::get_if<SubjectiveLiteral>(&l); s && !s->inner.is_constant()) {
      out.insert(s->inner.lit.atom);
    }
  }
  return out;
}

// Explicit literals inside positive subjective literals K l and M l.
inline std::set<ExplicitLiteral> bodymp(const Rule& r) {
  std::set<ExplicitLiteral> out;
  for (auto const& l : r.body) {
    auto* s = std::get_if<SubjectiveLiteral>(&l);
    if (s && s->depth == 0 && s->inner.depth == 0 &&
        !s->inner.is_constant()) {
      out.insert(s->inner.lit);
    }
  }
  return out;
}

inline std::set<Atom> atoms_of(const Rule& r) {
  std::set<Atom> out = head_atoms(r);
  for (auto const& a : bodyr(r)) { out.insert(a); }
  for (auto const& a : bodym(r)) { out.insert(a); }
  return out;
}

inline std::set<Atom> atoms_of(const Program& p) {
  std::set<Atom> out;
  for (auto const& r : p.rules) {
    for (auto const& a : atoms_of(r)) { out.insert(a); }
  }
  return out;
}

inline std::set<ExplicitLiteral> literals_of(const Program& p) {
  std::set<ExplicitLiteral> out;
  for (auto const& r : p.rules) {
    for (auto const& h : r.head) {
      if (!h.is_constant()) { out.insert(h.lit); }
    }
    for (auto const& l : r.body) {
      const ObjectiveLiteral& o = std::holds_alternative<ObjectiveLiteral>(l)
                                      ? std::get<ObjectiveLiteral>(l)
                                      : std::get<SubjectiveLiteral>(l).inner;
      if (!o.is_constant()) { out.insert(o.lit); }
    }
  }
  return out;
}

inline bool is_objective(const Program& p) { return !has_subjective(p); }

}  // namespace elp
