#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "elp/error.hpp"

namespace elp {

struct Term {
  std::string name;
  bool variable = false;

  auto operator<=>(const Term&) const = default;
  bool operator==(const Term&) const = default;
};

inline Term constant(std::string name) { return {std::move(name), false}; }
inline Term variable(std::string name) { return {std::move(name), true}; }

struct Atom {
  std::string predicate;
  std::vector<Term> args;

  bool ground() const {
    for (auto const& t : args) {
      if (t.variable) { return false; }
    }
    return true;
  }
  auto operator<=>(const Atom&) const = default;
  bool operator==(const Atom&) const = default;
};

inline std::string to_string(const Atom& a) {
  std::string out = a.predicate;
  if (!a.args.empty()) {
    out += '(';
    for (std::size_t i = 0; i < a.args.size(); ++i) {
      if (i) { out += ','; }
      out += a.args[i].name;
    }
    out += ')';
  }
  return out;
}

// Builds an atom from "name" or "name(c1,...,cn)"; arguments are constants.
inline Atom make_atom(const std::string& text) {
  Atom a;
  auto open = text.find('(');
  if (open == std::string::npos) {
    a.predicate = text;
    return a;
  }
  a.predicate = text.substr(0, open);
  std::string cur;
  for (std::size_t i = open + 1; i < text.size(); ++i) {
    char c = text[i];
    if (c == ',' || c == ')') {
      a.args.push_back(constant(cur));
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  return a;
}

struct ExplicitLiteral {
  Atom atom;
  bool negated = false;

  ExplicitLiteral complement() const { return {atom, !negated}; }
  auto operator<=>(const ExplicitLiteral&) const = default;
  bool operator==(const ExplicitLiteral&) const = default;
};

inline std::string to_string(const ExplicitLiteral& l) {
  return (l.negated ? "-" : "") + to_string(l.atom);
}

// "p", "-p", "p(a,b)"
inline ExplicitLiteral make_literal(const std::string& text) {
  if (!text.empty() && text[0] == '-') { return {make_atom(text.substr(1)), true}; }
  return {make_atom(text), false};
}

enum class Op : std::uint8_t { Bot, Top, Atom, Neg, And, Or, Implies, K, M, Exists, Forall };

// Immutable formula tree with shared subterms.  Default negation is not a
// node of its own: "not F" is the implication with consequent ⊥.
class Formula {
 public:
  struct Node {
    Op op;
    Atom atom;            // Op::Atom
    std::string var;      // quantifiers
    std::shared_ptr<const Node> a;  // Neg/K/M/quantifier argument; lhs; consequent
    std::shared_ptr<const Node> b;  // rhs; antecedent
  };

  Formula() : node_(make(Op::Top)) {}

  static Formula bot() { return Formula(make(Op::Bot)); }
  static Formula top() { return Formula(make(Op::Top)); }
  static Formula atom(Atom a) {
    auto n = std::make_shared<Node>();
    n->op = Op::Atom;
    n->atom = std::move(a);
    return Formula(std::move(n));
  }
  static Formula literal(const ExplicitLiteral& l) {
    return l.negated ? strong_neg(atom(l.atom)) : atom(l.atom);
  }
  static Formula strong_neg(const Formula& f) { return unary(Op::Neg, f); }
  static Formula conj(const Formula& l, const Formula& r) { return binary(Op::And, l, r); }
  static Formula disj(const Formula& l, const Formula& r) { return binary(Op::Or, l, r); }
  static Formula implies(const Formula& head, const Formula& body) {
    return binary(Op::Implies, head, body);
  }
  static Formula dneg(const Formula& f) { return implies(bot(), f); }
  static Formula k(const Formula& f) { return unary(Op::K, f); }
  static Formula m(const Formula& f) { return unary(Op::M, f); }
  static Formula exists(std::string var, const Formula& f) {
    return quant(Op::Exists, std::move(var), f);
  }
  static Formula forall(std::string var, const Formula& f) {
    return quant(Op::Forall, std::move(var), f);
  }
  // Right-nested; the empty conjunction is ⊤ and the empty disjunction ⊥.
  static Formula conj(const std::vector<Formula>& fs) { return fold(Op::And, fs, top()); }
  static Formula disj(const std::vector<Formula>& fs) { return fold(Op::Or, fs, bot()); }

  Op op() const { return node_->op; }
  const Atom& atom() const { return node_->atom; }
  const std::string& var() const { return node_->var; }
  Formula arg() const { return Formula(node_->a); }
  Formula lhs() const { return Formula(node_->a); }
  Formula rhs() const { return Formula(node_->b); }
  Formula head() const { return Formula(node_->a); }
  Formula body() const { return Formula(node_->b); }

  bool is(Op o) const { return node_->op == o; }
  bool is_dneg() const { return node_->op == Op::Implies && node_->a->op == Op::Bot; }
  bool is_explicit_literal() const {
    return op() == Op::Atom || (op() == Op::Neg && arg().op() == Op::Atom);
  }
  ExplicitLiteral as_literal() const {
    if (op() == Op::Atom) { return {atom(), false}; }
    return {arg().atom(), true};
  }
  bool is_modal() const { return op() == Op::K || op() == Op::M; }

  const Node* id() const { return node_.get(); }

  friend int compare(const Formula& x, const Formula& y);

 private:
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static std::shared_ptr<const Node> make(Op op) {
    auto n = std::make_shared<Node>();
    n->op = op;
    return n;
  }
  static Formula unary(Op op, const Formula& f) {
    auto n = std::make_shared<Node>();
    n->op = op;
    n->a = f.node_;
    return Formula(std::move(n));
  }
  static Formula binary(Op op, const Formula& l, const Formula& r) {
    auto n = std::make_shared<Node>();
    n->op = op;
    n->a = l.node_;
    n->b = r.node_;
    return Formula(std::move(n));
  }
  static Formula quant(Op op, std::string var, const Formula& f) {
    auto n = std::make_shared<Node>();
    n->op = op;
    n->var = std::move(var);
    n->a = f.node_;
    return Formula(std::move(n));
  }
  static Formula fold(Op op, const std::vector<Formula>& fs, Formula unit) {
    if (fs.empty()) { return unit; }
    Formula acc = fs.back();
    for (auto it = fs.rbegin() + 1; it != fs.rend(); ++it) { acc = binary(op, *it, acc); }
    return acc;
  }

  std::shared_ptr<const Node> node_;
};

inline int compare(const Formula& x, const Formula& y) {
  if (x.node_ == y.node_) { return 0; }
  if (x.op() != y.op()) { return x.op() < y.op() ? -1 : 1; }
  switch (x.op()) {
    case Op::Bot:
    case Op::Top: return 0;
    case Op::Atom: {
      auto c = x.atom() <=> y.atom();
      return c < 0 ? -1 : (c > 0 ? 1 : 0);
    }
    case Op::Neg:
    case Op::K:
    case Op::M: return compare(x.arg(), y.arg());
    case Op::Exists:
    case Op::Forall:
      if (x.var() != y.var()) { return x.var() < y.var() ? -1 : 1; }
      return compare(x.arg(), y.arg());
    default: {
      int c = compare(x.lhs(), y.lhs());
      return c != 0 ? c : compare(x.rhs(), y.rhs());
    }
  }
}

inline bool operator==(const Formula& x, const Formula& y) { return compare(x, y) == 0; }
inline bool operator!=(const Formula& x, const Formula& y) { return compare(x, y) != 0; }
inline bool operator<(const Formula& x, const Formula& y) { return compare(x, y) < 0; }

using Theory = std::vector<Formula>;

// Printing.  The output is accepted back by the formula grammar of the
// parser ("#formula F.").  Binding strength: unary > & > | > <-, and a
// quantifier reaches as far right as it can.
namespace detail {

inline int level(const Formula& f) {
  switch (f.op()) {
    case Op::Implies: return f.is_dneg() ? 4 : 1;
    case Op::Or: return 2;
    case Op::And: return 3;
    case Op::Exists:
    case Op::Forall: return 0;
    default: return 4;
  }
}

inline void print(std::ostream& out, const Formula& f, int need);

inline void print_child(std::ostream& out, const Formula& f, int need) {
  if (level(f) < need) {
    out << '(';
    print(out, f, 0);
    out << ')';
  } else {
    print(out, f, need);
  }
}

inline void print(std::ostream& out, const Formula& f, int) {
  switch (f.op()) {
    case Op::Bot: out << "#false"; break;
    case Op::Top: out << "#true"; break;
    case Op::Atom: out << to_string(f.atom()); break;
    case Op::Neg:
      out << '-';
      if (f.arg().is(Op::Atom)) {
        out << to_string(f.arg().atom());
      } else {
        out << '(';
        print(out, f.arg(), 0);
        out << ')';
      }
      break;
    case Op::And:
      print_child(out, f.lhs(), 4);
      out << " & ";
      print_child(out, f.rhs(), 3);
      break;
    case Op::Or:
      print_child(out, f.lhs(), 3);
      out << " | ";
      print_child(out, f.rhs(), 2);
      break;
    case Op::Implies:
      if (f.is_dneg()) {
        out << "not ";
        print_child(out, f.body(), 4);
      } else {
        print_child(out, f.head(), 2);
        out << " <- ";
        print_child(out, f.body(), 2);
      }
      break;
    case Op::K:
    case Op::M:
      out << (f.is(Op::K) ? "K " : "M ");
      print_child(out, f.arg(), 4);
      break;
    case Op::Exists:
    case Op::Forall:
      out << (f.is(Op::Exists) ? "exists " : "forall ") << f.var() << ": ";
      print(out, f.arg(), 0);
      break;
  }
}

}  // namespace detail

inline std::ostream& operator<<(std::ostream& out, const Formula& f) {
  detail::print(out, f, 0);
  return out;
}

inline std::string to_string(const Formula& f) {
  std::ostringstream out;
  out << f;
  return out.str();
}

// Structural queries and rewriting helpers.

inline void collect_atoms(const Formula& f, std::set<Atom>& out) {
  switch (f.op()) {
    case Op::Bot:
    case Op::Top: return;
    case Op::Atom: out.insert(f.atom()); return;
    case Op::Neg:
    case Op::K:
    case Op::M:
    case Op::Exists:
    case Op::Forall: collect_atoms(f.arg(), out); return;
    default:
      collect_atoms(f.lhs(), out);
      collect_atoms(f.rhs(), out);
  }
}

inline std::set<Atom> atoms_of(const Formula& f) {
  std::set<Atom> out;
  collect_atoms(f, out);
  return out;
}

inline std::set<Atom> atoms_of(const Theory& t) {
  std::set<Atom> out;
  for (auto const& f : t) { collect_atoms(f, out); }
  return out;
}

inline bool has_modality(const Formula& f) {
  switch (f.op()) {
    case Op::Bot:
    case Op::Top:
    case Op::Atom: return false;
    case Op::K:
    case Op::M: return true;
    case Op::Neg:
    case Op::Exists:
    case Op::Forall: return has_modality(f.arg());
    default: return has_modality(f.lhs()) || has_modality(f.rhs());
  }
}

inline bool has_op(const Formula& f, Op op) {
  if (f.op() == op) { return true; }
  switch (f.op()) {
    case Op::Bot:
    case Op::Top:
    case Op::Atom: return false;
    case Op::Neg:
    case Op::K:
    case Op::M:
    case Op::Exists:
    case Op::Forall: return has_op(f.arg(), op);
    default: return has_op(f.lhs(), op) || has_op(f.rhs(), op);
  }
}

inline bool is_objective(const Formula& f) { return !has_modality(f); }
inline bool is_objective(const Theory& t) {
  for (auto const& f : t) {
    if (has_modality(f)) { return false; }
  }
  return true;
}

// Every atom occurrence lies in the scope of a modal operator.
inline bool is_subjective(const Formula& f) {
  switch (f.op()) {
    case Op::Bot:
    case Op::Top:
    case Op::K:
    case Op::M: return true;
    case Op::Atom: return false;
    case Op::Neg:
    case Op::Exists:
    case Op::Forall: return is_subjective(f.arg());
    default: return is_subjective(f.lhs()) && is_subjective(f.rhs());
  }
}

inline void collect_free_variables(const Formula& f, std::set<std::string> bound,
                                   std::set<std::string>& out) {
  switch (f.op()) {
    case Op::Bot:
    case Op::Top: return;
    case Op::Atom:
      for (auto const& t : f.atom().args) {
        if (t.variable && !bound.count(t.name)) { out.insert(t.name); }
      }
      return;
    case Op::Exists:
    case Op::Forall:
      bound.insert(f.var());
      collect_free_variables(f.arg(), bound, out);
      return;
    case Op::Neg:
    case Op::K:
    case Op::M: collect_free_variables(f.arg(), bound, out); return;
    default:
      collect_free_variables(f.lhs(), bound, out);
      collect_free_variables(f.rhs(), bound, out);
  }
}

inline std::set<std::string> free_variables(const Formula& f) {
  std::set<std::string> out;
  collect_free_variables(f, {}, out);
  return out;
}

inline bool is_ground(const Formula& f) {
  return free_variables(f).empty() && !has_op(f, Op::Exists) && !has_op(f, Op::Forall);
}

inline Atom substitute(const Atom& a, const std::map<std::string, std::string>& sub) {
  Atom out = a;
  for (auto& t : out.args) {
    if (!t.variable) { continue; }
    auto it = sub.find(t.name);
    if (it != sub.end()) { t = constant(it->second); }
  }
  return out;
}

// Replaces free occurrences of variables.
inline Formula substitute(const Formula& f, const std::map<std::string, std::string>& sub) {
  if (sub.empty()) { return f; }
  switch (f.op()) {
    case Op::Bot:
    case Op::Top: return f;
    case Op::Atom: return Formula::atom(substitute(f.atom(), sub));
    case Op::Neg: return Formula::strong_neg(substitute(f.arg(), sub));
    case Op::K: return Formula::k(substitute(f.arg(), sub));
    case Op::M: return Formula::m(substitute(f.arg(), sub));
    case Op::Exists:
    case Op::Forall: {
      auto inner = sub;
      inner.erase(f.var());
      auto g = substitute(f.arg(), inner);
      return f.is(Op::Exists) ? Formula::exists(f.var(), g) : Formula::forall(f.var(), g);
    }
    case Op::And: return Formula::conj(substitute(f.lhs(), sub), substitute(f.rhs(), sub));
    case Op::Or: return Formula::disj(substitute(f.lhs(), sub), substitute(f.rhs(), sub));
    case Op::Implies:
      return Formula::implies(substitute(f.head(), sub), substitute(f.body(), sub));
  }
  return f;
}

// Bottom-up rebuild; `fn` sees each node after its children were rewritten.
inline Formula transform(const Formula& f, const std::function<Formula(const Formula&)>& fn) {
  switch (f.op()) {
    case Op::Bot:
    case Op::Top:
    case Op::Atom: return fn(f);
    case Op::Neg: return fn(Formula::strong_neg(transform(f.arg(), fn)));
    case Op::K: return fn(Formula::k(transform(f.arg(), fn)));
    case Op::M: return fn(Formula::m(transform(f.arg(), fn)));
    case Op::Exists: return fn(Formula::exists(f.var(), transform(f.arg(), fn)));
    case Op::Forall: return fn(Formula::forall(f.var(), transform(f.arg(), fn)));
    case Op::And: return fn(Formula::conj(transform(f.lhs(), fn), transform(f.rhs(), fn)));
    case Op::Or: return fn(Formula::disj(transform(f.lhs(), fn), transform(f.rhs(), fn)));
    case Op::Implies:
      return fn(Formula::implies(transform(f.head(), fn), transform(f.body(), fn)));
  }
  return f;
}

}  // namespace elp
