#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "elp/program.hpp"

namespace elp {

namespace detail {

inline void constants_of(const Atom& a, std::set<std::string>& out) {
  for (auto const& t : a.args) {
    if (!t.variable) { out.insert(t.name); }
  }
}

inline void variables_of(const Atom& a, std::set<std::string>& out) {
  for (auto const& t : a.args) {
    if (t.variable) { out.insert(t.name); }
  }
}

inline const ObjectiveLiteral& objective_part(const Literal& l) {
  if (auto* o = std::get_if<ObjectiveLiteral>(&l)) { return *o; }
  return std::get<SubjectiveLiteral>(l).inner;
}

inline ObjectiveLiteral substitute(ObjectiveLiteral l, const std::map<std::string, std::string>& s) {
  if (!l.is_constant()) { l.lit.atom = elp::substitute(l.lit.atom, s); }
  return l;
}

// Calls fn for every assignment of the given variables to constants.
template <class Fn>
void assignments(const std::vector<std::string>& vars, const std::vector<std::string>& consts,
                 std::map<std::string, std::string>& cur, std::size_t i, Fn&& fn) {
  if (i == vars.size()) {
    fn(cur);
    return;
  }
  for (auto const& c : consts) {
    cur[vars[i]] = c;
    assignments(vars, consts, cur, i + 1, fn);
  }
  cur.erase(vars[i]);
}

inline void constants_of(const Formula& f, std::set<std::string>& out) {
  std::set<Atom> atoms;
  collect_atoms(f, atoms);
  for (auto const& a : atoms) { constants_of(a, out); }
}

}  // namespace detail

inline std::set<std::string> constants_of(const Program& p) {
  std::set<std::string> out = p.constants;
  for (auto const& r : p.rules) {
    for (auto const& h : r.head) {
      if (!h.is_constant()) { detail::constants_of(h.lit.atom, out); }
    }
    for (auto const& b : r.body) {
      auto const& o = detail::objective_part(b);
      if (!o.is_constant()) { detail::constants_of(o.lit.atom, out); }
    }
  }
  return out;
}

inline std::set<std::string> constants_of(const Theory& t) {
  std::set<std::string> out;
  for (auto const& f : t) { detail::constants_of(f, out); }
  return out;
}

inline std::set<std::string> variables_of(const Rule& r) {
  std::set<std::string> out;
  for (auto const& h : r.head) {
    if (!h.is_constant()) { detail::variables_of(h.lit.atom, out); }
  }
  for (auto const& b : r.body) {
    auto const& o = detail::objective_part(b);
    if (!o.is_constant()) { detail::variables_of(o.lit.atom, out); }
  }
  return out;
}

inline bool is_ground(const Program& p) {
  for (auto const& r : p.rules) {
    if (!variables_of(r).empty()) { return false; }
  }
  return true;
}

// Replaces the variables of every rule by all constants of the universe
// (constants of the program, its declarations and `extra`).
inline Program ground(const Program& p, const std::set<std::string>& extra = {}) {
  std::set<std::string> universe = constants_of(p);
  universe.insert(extra.begin(), extra.end());
  std::vector<std::string> consts(universe.begin(), universe.end());
  Program out;
  out.constants = p.constants;
  out.constants.insert(extra.begin(), extra.end());
  for (auto const& r : p.rules) {
    auto vs = variables_of(r);
    if (vs.empty()) {
      out.rules.push_back(r);
      continue;
    }
    if (consts.empty()) {
      throw UnsupportedError("rule has variables but no constants are declared: " + to_string(r));
    }
    std::vector<std::string> vars(vs.begin(), vs.end());
    std::map<std::string, std::string> cur;
    detail::assignments(vars, consts, cur, 0, [&](auto const& s) {
      Rule g;
      g.location = r.location;
      for (auto const& h : r.head) { g.head.push_back(detail::substitute(h, s)); }
      for (auto const& b : r.body) {
        if (auto* o = std::get_if<ObjectiveLiteral>(&b)) {
          g.body.emplace_back(detail::substitute(*o, s));
        } else {
          auto sl = std::get<SubjectiveLiteral>(b);
          sl.inner = detail::substitute(sl.inner, s);
          g.body.emplace_back(sl);
        }
      }
      out.rules.push_back(std::move(g));
    });
  }
  return canonical(std::move(out));
}

// Expands quantifiers into finite conjunctions/disjunctions over the
// constants; free variables are closed universally first.
inline Formula expand_quantifiers(const Formula& f, const std::vector<std::string>& consts) {
  switch (f.op()) {
    case Op::Bot:
    case Op::Top:
    case Op::Atom: return f;
    case Op::Neg: return Formula::strong_neg(expand_quantifiers(f.arg(), consts));
    case Op::K: return Formula::k(expand_quantifiers(f.arg(), consts));
    case Op::M: return Formula::m(expand_quantifiers(f.arg(), consts));
    case Op::And:
      return Formula::conj(expand_quantifiers(f.lhs(), consts), expand_quantifiers(f.rhs(), consts));
    case Op::Or:
      return Formula::disj(expand_quantifiers(f.lhs(), consts), expand_quantifiers(f.rhs(), consts));
    case Op::Implies:
      return Formula::implies(expand_quantifiers(f.head(), consts),
                              expand_quantifiers(f.body(), consts));
    case Op::Exists:
    case Op::Forall: {
      std::vector<Formula> parts;
      for (auto const& c : consts) {
        parts.push_back(expand_quantifiers(substitute(f.arg(), {{f.var(), c}}), consts));
      }
      return f.is(Op::Exists) ? Formula::disj(parts) : Formula::conj(parts);
    }
  }
  return f;
}

inline Formula universal_closure(const Formula& f) {
  auto vs = free_variables(f);
  Formula g = f;
  for (auto it = vs.rbegin(); it != vs.rend(); ++it) { g = Formula::forall(*it, g); }
  return g;
}

inline Theory ground(const Theory& t, const std::set<std::string>& extra = {}) {
  std::set<std::string> universe = constants_of(t);
  universe.insert(extra.begin(), extra.end());
  std::vector<std::string> consts(universe.begin(), universe.end());
  Theory out;
  for (auto const& f : t) { out.push_back(expand_quantifiers(universal_closure(f), consts)); }
  return out;
}

inline void require_ground(const Formula& f) {
  if (!is_ground(f)) { throw UnsupportedError("formula is not ground: " + to_string(f)); }
}

}  // namespace elp
