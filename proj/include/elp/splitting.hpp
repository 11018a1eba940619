#pragma once

#include <map>
#include <set>
#include <vector>

#include "elp/report.hpp"

namespace elp {

struct Splitting {
  std::set<Atom> u;
  Program bottom;
  Program top;
};

namespace detail {

inline bool inside(const std::set<Atom>& xs, const std::set<Atom>& u) {
  for (auto const& a : xs) {
    if (!u.count(a)) { return false; }
  }
  return true;
}

inline bool disjoint(const std::set<Atom>& xs, const std::set<Atom>& u) {
  for (auto const& a : xs) {
    if (u.count(a)) { return false; }
  }
  return true;
}

inline bool bottom_rule(const Rule& r, const std::set<Atom>& u) { return inside(atoms_of(r), u); }

inline bool top_rule(const Rule& r, const std::set<Atom>& u) {
  return disjoint(head_atoms(r), u) && disjoint(bodyr(r), u);
}

}  // namespace detail

inline bool is_splitting_set(const std::set<Atom>& u, const Program& p) {
  for (auto const& r : p.rules) {
    if (!detail::bottom_rule(r, u) && !detail::top_rule(r, u)) { return false; }
  }
  return true;
}

// Rules meeting both conditions go to the bottom.
inline Splitting split(const std::set<Atom>& u, const Program& p) {
  Splitting s;
  s.u = u;
  for (auto const& r : p.rules) {
    if (detail::bottom_rule(r, u)) {
      s.bottom.rules.push_back(r);
    } else if (detail::top_rule(r, u)) {
      s.top.rules.push_back(r);
    } else {
      throw Error("not an epistemic splitting set: rule " + to_string(r) + " violates both conditions");
    }
  }
  s.bottom.constants = s.top.constants = p.constants;
  return s;
}

inline Program unsplit(const Splitting& s) {
  Program p;
  p.constants = s.bottom.constants;
  p.rules = s.bottom.rules;
  p.rules.insert(p.rules.end(), s.top.rules.begin(), s.top.rules.end());
  return p;
}

// W_b ⊔ W_t
inline EpistemicInterpretation combine(const EpistemicInterpretation& b, const EpistemicInterpretation& t) {
  std::vector<Interpretation> out;
  for (auto const& i : b.belief_sets()) {
    for (auto const& j : t.belief_sets()) { out.push_back(i.united(j)); }
  }
  return EpistemicInterpretation(std::move(out));
}

inline WorldViews solve_via_splitting(const Program& p, Semantics sem, const std::set<Atom>& u,
                                      const Limits& limits = {}) {
  Splitting s = split(u, p);
  WorldViews out;
  for (auto const& wb : world_views(s.bottom, sem, limits)) {
    Program e = subjective_reduct_sig(s.top, wb, u);
    for (auto const& wt : world_views(e, sem, limits)) { out.push_back(combine(wb, wt)); }
  }
  return canonical(std::move(out));
}

inline PropertyReport check_splitting_instance(const Program& p, Semantics sem, const std::set<Atom>& u,
                                               const Limits& limits = {}) {
  PropertyReport r;
  r.property = Property::Splitting;
  r.semantics = sem;
  r.instance = to_string(p);
  r.left = world_views(p, sem, limits);
  r.right = solve_via_splitting(p, sem, u, limits);
  if (r.left != r.right) {
    r.verdict = Verdict::Counterexample;
    std::string us;
    for (auto const& a : u) { us += (us.empty() ? "" : ", ") + to_string(a); }
    r.witness = "U = {" + us + "}: direct " + to_string(r.left) + ", layered " + to_string(r.right);
  }
  return r;
}

// Every epistemic splitting set is a union of closures of single atoms, where
// the closure adds Atoms(r) whenever Head(r) or Bodyr(r) meets the set.
inline std::vector<std::set<Atom>> find_splitting_sets(const Program& p, std::size_t max_sets = 4096) {
  std::set<Atom> atoms = atoms_of(p);
  auto closure = [&](std::set<Atom> s) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (auto const& r : p.rules) {
        if (detail::top_rule(r, s)) { continue; }
        for (auto const& a : atoms_of(r)) { changed |= s.insert(a).second; }
      }
    }
    return s;
  };
  std::set<std::set<Atom>> seen{{}};
  std::vector<std::set<Atom>> gens;
  for (auto const& a : atoms) { gens.push_back(closure({a})); }
  std::vector<std::set<Atom>> frontier{{}};
  while (!frontier.empty()) {
    std::vector<std::set<Atom>> next;
    for (auto const& s : frontier) {
      for (auto const& g : gens) {
        std::set<Atom> t = s;
        t.insert(g.begin(), g.end());
        if (seen.insert(t).second) {
          if (seen.size() > max_sets) { throw CapExceeded("too many splitting sets to enumerate"); }
          next.push_back(std::move(t));
        }
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

}  // namespace elp
