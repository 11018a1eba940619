#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "elp/ground.hpp"
#include "elp/rewrite.hpp"

namespace elp {

// (K F)^B = F^B ∧ K F^B; M is expanded first.
inline Formula translate_b(const Formula& f) {
  return transform(expand_modal_abbreviations(f), [](const Formula& g) {
    if (g.is(Op::K)) { return Formula::conj(g.arg(), g); }
    return g;
  });
}

// (K F)^K = M K F^K.  M is expanded first unless keep_m is set.
inline Formula translate_k(const Formula& f, bool keep_m = false) {
  return transform(expand_modal_abbreviations(f, keep_m), [](const Formula& g) {
    if (g.is(Op::K)) { return Formula::m(g); }
    return g;
  });
}

inline Theory translate_b(const Theory& t) {
  Theory out;
  for (auto const& f : t) { out.push_back(translate_b(f)); }
  return out;
}

inline Theory translate_k(const Theory& t, bool keep_m = false) {
  Theory out;
  for (auto const& f : t) { out.push_back(translate_k(f, keep_m)); }
  return out;
}

namespace detail {

inline int peel_dneg(Formula& f) {
  int d = 0;
  while (f.is_dneg()) {
    f = f.body();
    ++d;
  }
  while (d > 2) { d -= 2; }
  return d;
}

inline std::optional<ObjectiveLiteral> as_objective_literal(Formula f) {
  int d = peel_dneg(f);
  if (f.is(Op::Top)) { return normalize(ObjectiveLiteral{ObjectiveLiteral::Core::True, {}, d}); }
  if (f.is(Op::Bot)) { return normalize(ObjectiveLiteral{ObjectiveLiteral::Core::False, {}, d}); }
  if (f.is_explicit_literal()) { return ObjectiveLiteral::of(f.as_literal(), d); }
  return std::nullopt;
}

inline std::optional<SubjectiveLiteral> as_subjective_literal(Formula f) {
  int d = peel_dneg(f);
  if (!f.is_modal()) { return std::nullopt; }
  auto inner = as_objective_literal(f.arg());
  if (!inner) { return std::nullopt; }
  return SubjectiveLiteral{f.is(Op::K) ? Modality::K : Modality::M, *inner, d};
}

inline void flatten(const Formula& f, Op op, std::vector<Formula>& out) {
  if (f.is(op)) {
    flatten(f.lhs(), op, out);
    flatten(f.rhs(), op, out);
  } else {
    out.push_back(f);
  }
}

inline bool head_of(const Formula& h, Rule& r) {
  std::vector<Formula> items;
  flatten(h, Op::Or, items);
  for (auto const& it : items) {
    auto o = as_objective_literal(it);
    if (!o) { return false; }
    if (o->core == ObjectiveLiteral::Core::False) { continue; }
    r.head.push_back(*o);
  }
  return true;
}

inline void split_rule(const Formula& f, Formula& head, Formula& body) {
  if (f.is(Op::Implies)) {
    head = f.head();
    body = f.body();
  } else {
    head = f;
    body = Formula::top();
  }
}

}  // namespace detail

// Reads a sentence as a rule when it has rule shape.
inline std::optional<Rule> as_rule(const Formula& f) {
  Formula h, b;
  detail::split_rule(f, h, b);
  Rule r;
  if (!detail::head_of(h, r)) { return std::nullopt; }
  std::vector<Formula> items;
  detail::flatten(b, Op::And, items);
  for (auto const& it : items) {
    if (auto o = detail::as_objective_literal(it)) {
      if (o->core == ObjectiveLiteral::Core::True) { continue; }
      r.body.emplace_back(*o);
    } else if (auto s = detail::as_subjective_literal(it)) {
      r.body.emplace_back(*s);
    } else {
      return std::nullopt;
    }
  }
  return r;
}

inline std::optional<Program> theory_to_program(const Theory& t) {
  Program p;
  for (auto const& f : t) {
    auto r = as_rule(f);
    if (!r) { return std::nullopt; }
    p.rules.push_back(std::move(*r));
  }
  return p;
}

namespace detail {

class Normalizer {
 public:
  explicit Normalizer(const Theory& t) : taken_(atoms_of(t)) {}

  Program run(const Theory& t) {
    for (auto const& f : t) {
      Formula h, b;
      split_rule(f, h, b);
      Rule r;
      if (!head_of(h, r)) {
        throw UnsupportedError("cannot normalize a sentence whose head is not a disjunction of literals: " +
                               to_string(f));
      }
      body(b, r);
      out_.rules.push_back(std::move(r));
    }
    return canonical(std::move(out_));
  }

 private:
  void body(const Formula& b, Rule& r) {
    std::vector<Formula> items;
    flatten(b, Op::And, items);
    for (auto const& it : items) { r.body.push_back(item(it)); }
  }

  Literal item(const Formula& f) {
    if (auto o = as_objective_literal(f)) { return *o; }
    Formula g = f;
    int d = peel_dneg(g);
    if (g.is_modal()) {
      Formula inner = g.arg();
      int e = peel_dneg(inner);
      ObjectiveLiteral core;
      if (auto o = as_objective_literal(inner)) {
        core = *o;
        core.depth = e;
        core = normalize(core);
      } else {
        core = ObjectiveLiteral::of({name(inner), false}, e);
      }
      return SubjectiveLiteral{g.is(Op::K) ? Modality::K : Modality::M, core, d};
    }
    // not^d X with X complex (d ≥ 1 here, conjunctions were flattened).
    return ObjectiveLiteral::of({name(g), false}, d);
  }

  // aux ← X; disjunctions get one rule per disjunct.
  Atom name(const Formula& x) {
    auto it = names_.find(x);
    if (it != names_.end()) { return it->second; }
    Atom a;
    do { a.predicate = "aux_" + std::to_string(++counter_); } while (taken_.count(a));
    taken_.insert(a);
    names_.emplace(x, a);
    std::vector<Formula> parts;
    flatten(x, Op::Or, parts);
    for (auto const& part : parts) {
      Rule r;
      r.head.push_back(ObjectiveLiteral::of({a, false}));
      body(part, r);
      out_.rules.push_back(std::move(r));
    }
    return a;
  }

  std::set<Atom> taken_;
  std::map<Formula, Atom> names_;
  int counter_ = 0;
  Program out_;
};

}  // namespace detail

// Names non-literal subformulas of rule bodies with fresh atoms aux_1,
// aux_2, ... so that the result is a program.
inline Program normalize_to_program(const Theory& t) { return detail::Normalizer(t).run(t); }

// ℓ ∨ not ℓ for every explicit literal over the atoms.
inline Theory em_axioms(const std::set<Atom>& atoms) {
  Theory out;
  for (auto const& a : atoms) {
    for (bool neg : {false, true}) {
      Formula l = Formula::literal({a, neg});
      out.push_back(Formula::disj(l, Formula::dneg(l)));
    }
  }
  return out;
}

inline Theory kem_axioms(const std::set<Atom>& atoms) {
  Theory out;
  for (auto const& f : em_axioms(atoms)) { out.push_back(Formula::k(f)); }
  return out;
}

inline Theory with_em(const Theory& t, const std::set<Atom>& atoms) {
  Theory out = t;
  for (auto const& f : em_axioms(atoms)) { out.push_back(f); }
  return out;
}
inline Theory with_em(const Theory& t) { return with_em(t, atoms_of(t)); }

inline Theory with_kem(const Theory& t, const std::set<Atom>& atoms) {
  Theory out = t;
  for (auto const& f : kem_axioms(atoms)) { out.push_back(f); }
  return out;
}
inline Theory with_kem(const Theory& t) { return with_kem(t, atoms_of(t)); }

inline Program with_em(const Program& p) {
  Program out = p;
  for (auto const& a : atoms_of(p)) {
    for (bool neg : {false, true}) {
      Rule r;
      r.head = {ObjectiveLiteral::of({a, neg}), ObjectiveLiteral::of({a, neg}, 1)};
      out.rules.push_back(std::move(r));
    }
  }
  return out;
}

// K(ℓ ∨ not ℓ) → ℓ
inline std::optional<ExplicitLiteral> kem_literal(const Formula& f) {
  if (!f.is(Op::K) || !f.arg().is(Op::Or)) { return std::nullopt; }
  Formula l = f.arg().lhs();
  Formula r = f.arg().rhs();
  if (!l.is_explicit_literal() || !r.is_dneg() || r.body() != l) { return std::nullopt; }
  return l.as_literal();
}

}  // namespace elp
