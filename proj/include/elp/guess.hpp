#pragma once

#include <functional>
#include <string>
#include <vector>

#include "elp/ht.hpp"

namespace elp::detail {

// All consistent T over the signature of `c` with ⟨T,T⟩ ⊨ roots.
inline bool enumerate_models(const Circuit& c, const std::vector<int>& roots,
                             const std::function<bool(const Mask&)>& visit) {
  int n = static_cast<int>(c.signature().size());
  std::function<bool(Partial, int)> rec = [&](Partial p, int i) -> bool {
    ClassicalEval3 ev{c, p};
    for (int r : roots) {
      if (ev.sat(r) == 0) { return true; }
    }
    if (i == 2 * n) { return visit(p.t); }
    int atom = i / 2;
    bool neg = i % 2 == 1;
    if (p.f.has(atom, neg)) { return rec(p, i + 1); }
    Partial q = p;
    q.f.set(atom, neg);
    if (!rec(q, i + 1)) { return false; }
    q = p;
    q.t.set(atom, neg);
    q.f.set(atom, !neg);
    return rec(q, i + 1);
  };
  return rec(Partial{}, 0);
}

// Guess-reduct-check driver shared by the reduct-based semantics.  For each
// truth assignment g to the `guess` nodes of `base`, `substitute` fills a
// node substitution that turns the roots into an objective theory; the
// models of that theory (stable, or classical when `classical` is set)
// form a candidate W that is kept when W ⊨ guess[i] exactly when g[i].
struct GuessProblem {
  const Circuit* base = nullptr;
  std::vector<int> roots;
  std::vector<int> guess;
  std::function<void(const std::vector<char>&, std::vector<int>&)> substitute;
  bool classical = false;
};

inline std::vector<std::vector<Mask>> solve_guesses(const GuessProblem& gp, const Limits& limits) {
  const Circuit& base = *gp.base;
  std::size_t k = gp.guess.size();
  if (k > limits.max_guess_bits) {
    throw CapExceeded(std::to_string(k) + " subjective subformulas exceed the guess cap of " +
                      std::to_string(limits.max_guess_bits));
  }
  if (gp.classical && base.signature().size() > limits.max_atoms) {
    throw CapExceeded("model enumeration over " + std::to_string(base.signature().size()) +
                      " atoms exceeds the cap of " + std::to_string(limits.max_atoms));
  }
  // Early pruning for K G / M G with objective G.
  std::vector<int> objective_arg(k, -1);
  for (std::size_t i = 0; i < k; ++i) {
    const auto& x = base.node(gp.guess[i]);
    if ((x.op == Op::K || x.op == Op::M) && !base.has_modality(x.a)) { objective_arg[i] = x.a; }
  }
  BeliefEval local(base, {});
  std::vector<std::vector<Mask>> out;
  std::vector<char> g(k, 0);
  std::vector<int> subst;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << k); ++bits) {
    for (std::size_t i = 0; i < k; ++i) { g[i] = (bits >> i) & 1u; }
    subst.assign(base.size(), -1);
    gp.substitute(g, subst);
    Circuit red(base.signature());
    Rebuilder rb(base, red, subst);
    std::vector<int> roots;
    bool dead = false;
    for (int r : gp.roots) {
      int n = rb(r);
      if (n == Circuit::kBot) { dead = true; }
      if (n != Circuit::kTop) { roots.push_back(n); }
    }
    if (dead) { continue; }
    std::vector<Mask> w;
    auto visit = [&](const Mask& t) {
      for (std::size_t i = 0; i < k; ++i) {
        if (objective_arg[i] < 0) { continue; }
        bool is_k = base.node(gp.guess[i]).op == Op::K;
        bool v = local.sat(objective_arg[i], t);
        if (is_k && g[i] && !v) { return false; }
        if (!is_k && !g[i] && v) { return false; }
      }
      w.push_back(t);
      return true;
    };
    bool complete = gp.classical ? enumerate_models(red, roots, visit)
                                 : enumerate_stable_models(red, roots, limits, visit);
    if (!complete || w.empty()) { continue; }
    BeliefEval ev(base, w);
    bool ok = true;
    for (std::size_t i = 0; i < k && ok; ++i) {
      if (ev.holds(gp.guess[i]) != static_cast<bool>(g[i])) { ok = false; }
    }
    if (ok) { out.push_back(std::move(w)); }
  }
  return out;
}

}  // namespace elp::detail
