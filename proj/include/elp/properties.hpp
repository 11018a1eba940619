#pragma once

#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "elp/founded.hpp"
#include "elp/report.hpp"
#include "elp/splitting.hpp"

namespace elp {

namespace detail {

inline PropertyReport make_report(Property p, Semantics s, std::string instance) {
  PropertyReport r;
  r.property = p;
  r.semantics = s;
  r.instance = std::move(instance);
  return r;
}

inline std::string theory_text(const Theory& t) {
  std::string out;
  for (auto const& f : t) { out += to_string(f) + ". "; }
  if (!out.empty()) { out.pop_back(); }
  return out;
}

}  // namespace detail

// ⊥ ← not φ for every constraint φ
inline Theory constraints_as_rules(const Theory& constraints) {
  Theory out;
  for (auto const& c : constraints) { out.push_back(Formula::implies(Formula::bot(), Formula::dneg(c))); }
  return out;
}

inline PropertyReport check_constraint_monotonicity(const Theory& theory, const Theory& constraints,
                                                    Semantics sem, const Limits& limits = {}) {
  auto r = detail::make_report(Property::ConstraintMonotonicity, sem,
                               detail::theory_text(theory) + " | constraints: " + detail::theory_text(constraints));
  EpistemicSpecificationInput in{theory, constraints, {}};
  r.left = solve_specification(in, sem, limits);
  Theory merged = theory;
  for (auto const& f : constraints_as_rules(constraints)) { merged.push_back(f); }
  r.right = world_views(merged, sem, limits);
  if (r.left != r.right) {
    r.verdict = Verdict::Counterexample;
    r.witness = "specification " + to_string(r.left) + ", merged theory " + to_string(r.right);
  }
  return r;
}

inline PropertyReport check_constraint_monotonicity(const Program& p, const Theory& constraints, Semantics sem,
                                                    const Limits& limits = {}) {
  return check_constraint_monotonicity(program_to_theory(p), constraints, sem, limits);
}

// Unfoundedness of each world view the semantics selects.
inline PropertyReport check_foundedness(const Program& p, Semantics sem, const Limits& limits = {}) {
  auto r = detail::make_report(Property::Foundedness, sem, to_string(p));
  r.left = world_views(p, sem, limits);
  for (auto const& w : r.left) {
    if (auto u = find_unfounded_set(p, w, limits)) {
      r.verdict = Verdict::Counterexample;
      r.right.push_back(w);
      if (r.witness.empty()) { r.witness = to_string(w) + " is unfounded: " + to_string(*u); }
    }
  }
  return r;
}

inline PropertyReport check_supra_asp(const Program& p, Semantics sem, const Limits& limits = {}) {
  if (has_subjective(p)) { throw UnsupportedError("supra-ASP is checked on objective programs only"); }
  auto r = detail::make_report(Property::SupraAsp, sem, to_string(p));
  r.left = world_views(p, sem, limits);
  auto sm = stable_models(program_to_theory(p), limits);
  if (!sm.empty()) { r.right.push_back(EpistemicInterpretation(sm)); }
  r.left = restrict(r.left, atoms_of(p));
  if (r.left != r.right) {
    r.verdict = Verdict::Counterexample;
    r.witness = "world views " + to_string(r.left) + ", stable models " + to_string(r.right);
  }
  return r;
}

// Every world view is an epistemic model of the program.
inline PropertyReport check_supra_s5(const Program& p, Semantics sem, const Limits& limits = {}) {
  auto r = detail::make_report(Property::SupraS5, sem, to_string(p));
  r.left = world_views(p, sem, limits);
  Theory t = program_to_theory(p);
  for (auto const& w : r.left) {
    if (!ei_satisfies(w, t)) {
      r.verdict = Verdict::Counterexample;
      r.right.push_back(w);
      if (r.witness.empty()) { r.witness = to_string(w) + " does not satisfy the program"; }
    }
  }
  return r;
}

// λ with λ(a) = λ(b) for atoms of a rule outside Bodym(r) and λ(a) > λ(b)
// whenever dep+(a,b); nullopt when no such mapping exists.
inline std::optional<std::map<Atom, int>> is_epistemically_tight(const Program& p) {
  std::vector<Atom> atoms;
  for (auto const& a : atoms_of(p)) { atoms.push_back(a); }
  std::map<Atom, std::size_t> id;
  for (std::size_t k = 0; k < atoms.size(); ++k) { id[atoms[k]] = k; }
  std::vector<std::size_t> parent(atoms.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) { x = parent[x] = parent[parent[x]]; }
    return x;
  };
  std::vector<std::pair<std::size_t, std::size_t>> dep;
  for (auto const& r : p.rules) {
    std::set<Atom> plain = head_atoms(r);
    for (auto const& a : bodyr(r)) { plain.insert(a); }
    std::optional<std::size_t> first;
    for (auto const& a : plain) {
      if (!first) {
        first = id[a];
      } else {
        parent[find(id[a])] = find(*first);
      }
    }
    for (auto const& a : plain) {
      for (auto const& l : bodymp(r)) { dep.push_back({id[a], id[l.atom]}); }
    }
  }
  // Longest path over the quotient graph; a cycle means no λ exists.
  std::map<std::size_t, std::vector<std::size_t>> succ;
  for (auto [a, b] : dep) { succ[find(a)].push_back(find(b)); }
  std::map<std::size_t, int> level;
  std::map<std::size_t, int> state;  // 1 on stack, 2 done
  bool cyclic = false;
  std::function<int(std::size_t)> visit = [&](std::size_t c) -> int {
    if (state[c] == 2) { return level[c]; }
    if (state[c] == 1) {
      cyclic = true;
      return 0;
    }
    state[c] = 1;
    int l = 0;
    for (auto d : succ[c]) { l = std::max(l, visit(d) + 1); }
    state[c] = 2;
    return level[c] = l;
  };
  std::map<Atom, int> lambda;
  for (std::size_t k = 0; k < atoms.size(); ++k) { lambda[atoms[k]] = visit(find(k)); }
  if (cyclic) { return std::nullopt; }
  return lambda;
}

// Π ∪ {a ← K a : a ∈ At}
inline Program reflexive_extension(const Program& p) {
  Program out = p;
  for (auto const& a : atoms_of(p)) {
    Rule r;
    r.head.push_back(ObjectiveLiteral::of({a, false}));
    r.body.emplace_back(SubjectiveLiteral{Modality::K, ObjectiveLiteral::of({a, false}), 0});
    out.rules.push_back(std::move(r));
  }
  return canonical(std::move(out));
}

struct ReflexivityProbe {
  bool unchanged = true;
  WorldViews before;
  WorldViews after;
};

inline ReflexivityProbe probe_reflexivity(const Program& p, Semantics sem, const Limits& limits = {}) {
  ReflexivityProbe out;
  out.before = world_views(p, sem, limits);
  out.after = world_views(reflexive_extension(p), sem, limits);
  out.unchanged = out.before == out.after;
  return out;
}

// Whether (property, semantics) is expected to hold on every program.
inline bool claimed_property(Property p, Semantics s) {
  switch (p) {
    case Property::SupraS5:
    case Property::SupraAsp: return true;
    case Property::ConstraintMonotonicity:
      return s == Semantics::G94 || s == Semantics::G11 || s == Semantics::C19;
    case Property::Splitting: return s == Semantics::G94 || s == Semantics::C19;
    case Property::Foundedness: return s == Semantics::C19;
  }
  return false;
}

}  // namespace elp
