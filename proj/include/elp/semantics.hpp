#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "elp/epistemic.hpp"
#include "elp/guess.hpp"

namespace elp {

namespace detail {

inline WorldViews decode_all(const Signature& sig, const std::vector<std::vector<Mask>>& ws) {
  WorldViews out;
  for (auto const& w : ws) { out.push_back(sig.decode(w)); }
  return canonical(std::move(out));
}

// A ground program compiled as a theory, with the K/M node of every
// subjective literal recorded.
struct CompiledProgram {
  struct Subjective {
    int literal;   // node of not^d K l
    int modal;     // node of K l
    int depth;     // d
  };
  Circuit circuit;
  std::vector<int> roots;
  std::vector<int> modal_nodes;  // distinct, in order of first occurrence
  std::vector<Subjective> subjective;

  explicit CompiledProgram(const Program& p) : circuit(Signature(atoms_of(p))) {
    for (auto const& r : p.rules) {
      if (!variables_of(r).empty()) {
        throw UnsupportedError("program must be grounded first: " + to_string(r));
      }
      roots.push_back(circuit.compile(to_formula(r)));
      for (auto const& l : r.body) {
        auto* s = std::get_if<SubjectiveLiteral>(&l);
        if (!s) { continue; }
        SubjectiveLiteral core = *s;
        core.depth = 0;
        int m = circuit.compile(to_formula(core));
        int lit = circuit.compile(to_formula(*s));
        subjective.push_back({lit, m, s->depth});
        if (std::find(modal_nodes.begin(), modal_nodes.end(), m) == modal_nodes.end()) {
          modal_nodes.push_back(m);
        }
      }
    }
  }
};

inline int index_of(const std::vector<int>& v, int x) {
  return static_cast<int>(std::find(v.begin(), v.end(), x) - v.begin());
}

}  // namespace detail

inline WorldViews g94_world_views(const Theory& t, const Limits& limits = {}) {
  Circuit c(Signature(atoms_of(t)));
  detail::GuessProblem gp;
  gp.base = &c;
  gp.roots = c.compile(t);
  gp.guess = c.maximal_modal(gp.roots);
  gp.substitute = [&](const std::vector<char>& g, std::vector<int>& s) {
    for (std::size_t i = 0; i < gp.guess.size(); ++i) {
      s[gp.guess[i]] = g[i] ? Circuit::kTop : Circuit::kBot;
    }
  };
  return detail::decode_all(c.signature(), detail::solve_guesses(gp, limits));
}

inline WorldViews g94_world_views(const Program& p, const Limits& limits = {}) {
  return g94_world_views(program_to_theory(p), limits);
}

inline WorldViews g11_world_views(const Program& p, const Limits& limits = {}) {
  detail::CompiledProgram cp(expand_m(p));
  detail::GuessProblem gp;
  gp.base = &cp.circuit;
  gp.roots = cp.roots;
  gp.guess = cp.modal_nodes;
  gp.substitute = [&](const std::vector<char>& g, std::vector<int>& s) {
    for (auto const& sl : cp.subjective) {
      bool k = g[detail::index_of(gp.guess, sl.modal)];
      bool holds = sl.depth % 2 == 0 ? k : !k;
      if (!holds) {
        s[sl.literal] = Circuit::kBot;
      } else if (sl.depth > 0) {
        s[sl.literal] = Circuit::kTop;
      } else {
        s[sl.literal] = cp.circuit.node(sl.modal).a;
      }
    }
  };
  return detail::decode_all(cp.circuit.signature(), detail::solve_guesses(gp, limits));
}

inline WorldViews k15_world_views(const Program& p, const Limits& limits = {}) {
  detail::CompiledProgram cp(expand_m(p));
  detail::GuessProblem gp;
  gp.base = &cp.circuit;
  gp.roots = cp.roots;
  gp.guess = cp.modal_nodes;
  gp.substitute = [&](const std::vector<char>& g, std::vector<int>& s) {
    for (std::size_t i = 0; i < gp.guess.size(); ++i) {
      s[gp.guess[i]] = g[i] ? cp.circuit.node(gp.guess[i]).a : Circuit::kBot;
    }
  };
  return detail::decode_all(cp.circuit.signature(), detail::solve_guesses(gp, limits));
}

// Φ_W as a bit set over the K l occurring in the (M-expanded) program.
inline std::vector<char> negative_knowledge(const Program& p, const EpistemicInterpretation& w) {
  detail::CompiledProgram cp(expand_m(p));
  std::vector<char> phi;
  auto sig = cp.circuit.signature();
  for (auto const& i : w.belief_sets()) {
    for (auto const& l : i.literals()) { sig.intern(l.atom); }
  }
  Circuit c(sig);
  std::vector<int> ks;
  for (int m : cp.modal_nodes) { ks.push_back(c.compile(cp.circuit.decompile(m))); }
  auto masks = c.signature().encode(w);
  BeliefEval ev(c, masks);
  for (int k : ks) { phi.push_back(!ev.holds(k)); }
  return phi;
}

inline WorldViews s16_world_views(const Program& p, const Limits& limits = {}) {
  WorldViews k15 = k15_world_views(p, limits);
  std::vector<std::vector<char>> phi;
  for (auto const& w : k15) { phi.push_back(negative_knowledge(p, w)); }
  auto strict_superset = [](const std::vector<char>& a, const std::vector<char>& b) {
    bool bigger = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (b[i] && !a[i]) { return false; }
      if (a[i] && !b[i]) { bigger = true; }
    }
    return bigger;
  };
  WorldViews out;
  for (std::size_t i = 0; i < k15.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < k15.size() && maximal; ++j) {
      if (strict_superset(phi[j], phi[i])) { maximal = false; }
    }
    if (maximal) { out.push_back(k15[i]); }
  }
  return out;
}

// Moore's stable expansions read over belief interpretations:
// W = { I : ⟨W,I⟩ ⊨ Γ }, I ranging over consistent interpretations of the
// theory's atoms.
inline WorldViews m85_world_views(const Theory& t, const Limits& limits = {}) {
  Circuit c(Signature(atoms_of(t)));
  detail::GuessProblem gp;
  gp.base = &c;
  gp.roots = c.compile(t);
  gp.guess = c.maximal_modal(gp.roots);
  gp.classical = true;
  gp.substitute = [&](const std::vector<char>& g, std::vector<int>& s) {
    for (std::size_t i = 0; i < gp.guess.size(); ++i) {
      s[gp.guess[i]] = g[i] ? Circuit::kTop : Circuit::kBot;
    }
  };
  return detail::decode_all(c.signature(), detail::solve_guesses(gp, limits));
}

}  // namespace elp
