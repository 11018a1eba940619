#pragma once

#include <set>
#include <string>
#include <vector>

#include "elp/circuit.hpp"
#include "elp/limits.hpp"
#include "elp/rewrite.hpp"

namespace elp {

// Evaluation in the modal here-and-there structures ⟨W,h⟩.  Explicit
// literals behave as atoms; a world T makes ℓ true under h when ℓ ∈ h(T).
class F15Eval {
 public:
  F15Eval(const Circuit& c, const std::vector<Mask>& w) : c_(c), w_(w) {}

  bool sat(int n, std::size_t j, const std::vector<Mask>& h) const {
    const auto& x = c_.node(n);
    switch (x.op) {
      case Op::Bot: return false;
      case Op::Top: return true;
      case Op::Atom: return h[j].has(x.atom, x.negated);
      case Op::And: return sat(x.a, j, h) && sat(x.b, j, h);
      case Op::Or: return sat(x.a, j, h) || sat(x.b, j, h);
      case Op::Implies:
        if (sat(x.b, j, h) && !sat(x.a, j, h)) { return false; }
        if (&h == &w_) { return true; }
        return !sat(x.b, j, w_) || sat(x.a, j, w_);
      case Op::K:
        for (std::size_t k = 0; k < w_.size(); ++k) {
          if (!sat(x.a, k, h)) { return false; }
        }
        return true;
      case Op::M:
        for (std::size_t k = 0; k < w_.size(); ++k) {
          if (sat(x.a, k, h)) { return true; }
        }
        return false;
      default: throw UnsupportedError("explicit negation of a compound formula is not supported under F15");
    }
  }

  bool model(const std::vector<int>& roots, const std::vector<Mask>& h) const {
    for (std::size_t j = 0; j < w_.size(); ++j) {
      for (int r : roots) {
        if (!sat(r, j, h)) { return false; }
      }
    }
    return true;
  }

  // ⟨W,h⟩,J ⊨ Γ for every J in `members`.
  bool model_at(const std::vector<int>& roots, const std::vector<Mask>& h,
                const std::vector<std::size_t>& members) const {
    for (auto j : members) {
      for (int r : roots) {
        if (!sat(r, j, h)) { return false; }
      }
    }
    return true;
  }

  const std::vector<Mask>& id() const { return w_; }

 private:
  const Circuit& c_;
  const std::vector<Mask>& w_;
};

namespace detail {

inline std::vector<Mask> literal_list(const Mask& m, std::size_t atoms) {
  std::vector<Mask> out;
  for (std::size_t a = 0; a < atoms; ++a) {
    for (bool neg : {false, true}) {
      if (m.has(static_cast<int>(a), neg)) { out.push_back(lit_mask(lit_id(static_cast<int>(a), neg))); }
    }
  }
  return out;
}

// Calls fn(h) for every h ≠ id with h(T) ⊆ T, where worlds listed in
// `fixed` keep h(T) = T.  Stops when fn returns true; returns that result.
template <class Fn>
bool for_each_h(const std::vector<Mask>& w, std::size_t atoms, const std::vector<char>& fixed, Fn&& fn) {
  std::vector<std::vector<Mask>> lits;
  for (std::size_t j = 0; j < w.size(); ++j) {
    lits.push_back(fixed[j] ? std::vector<Mask>{} : literal_list(w[j], atoms));
  }
  std::vector<std::uint64_t> sub(w.size(), 0);
  std::vector<Mask> h = w;
  // Mixed-radix counter; subset 0 of each world means "h(T) = T".
  for (;;) {
    std::size_t j = 0;
    while (j < w.size()) {
      std::uint64_t limit = std::uint64_t{1} << lits[j].size();
      if (++sub[j] < limit) { break; }
      sub[j] = 0;
      ++j;
    }
    if (j == w.size()) { return false; }
    for (std::size_t k = 0; k < w.size(); ++k) {
      Mask m = w[k];
      for (std::size_t b = 0; b < lits[k].size(); ++b) {
        if ((sub[k] >> b) & 1u) { m = m.minus(lits[k][b]); }
      }
      h[k] = m;
    }
    if (fn(h)) { return true; }
  }
}

struct F15Problem {
  Circuit circuit;
  std::vector<int> roots;
  std::vector<Mask> worlds;  // consistent sets over occurring literals

  explicit F15Problem(const Theory& theory, const Limits& limits) {
    Theory t = simplify_triple_negation(theory);
    circuit = Circuit(Signature(atoms_of(t)));
    if (circuit.signature().size() > limits.f15_max_atoms) {
      throw CapExceeded("F15 enumerates sets of interpretations over " +
                        std::to_string(circuit.signature().size()) +
                        " atoms, which grows doubly exponentially; the cap is " +
                        std::to_string(limits.f15_max_atoms) + " (raise --f15-max-atoms)");
    }
    roots = circuit.compile(t);
    Mask occurring;
    for (std::size_t n = 0; n < circuit.size(); ++n) {
      const auto& x = circuit.node(static_cast<int>(n));
      if (x.op == Op::Atom) { occurring.set(x.atom, x.negated); }
      if (x.op == Op::Neg) {
        throw UnsupportedError("explicit negation of a compound formula is not supported under F15");
      }
    }
    auto lits = literal_list(occurring, circuit.signature().size());
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << lits.size()); ++s) {
      Mask m;
      for (std::size_t b = 0; b < lits.size(); ++b) {
        if ((s >> b) & 1u) { m = m | lits[b]; }
      }
      if (m.consistent()) { worlds.push_back(m); }
    }
  }

  std::size_t atoms() const { return circuit.signature().size(); }

  bool model(const std::vector<Mask>& w) const {
    F15Eval ev(circuit, w);
    return ev.model(roots, w);
  }

  bool equilibrium(const std::vector<Mask>& w) const {
    F15Eval ev(circuit, w);
    if (!ev.model(roots, w)) { return false; }
    std::vector<char> fixed(w.size(), 0);
    return !for_each_h(w, atoms(), fixed, [&](const std::vector<Mask>& h) { return ev.model(roots, h); });
  }

  // W ∪ {I}, W ⊨* Γ
  bool star(const std::vector<Mask>& w, const Mask& i) const {
    std::vector<Mask> v = w;
    bool member = std::find(w.begin(), w.end(), i) != w.end();
    if (!member) { v.push_back(i); }
    F15Eval ev(circuit, v);
    std::vector<std::size_t> x;
    for (std::size_t j = 0; j < w.size(); ++j) { x.push_back(j); }
    if (!ev.model_at(roots, v, x)) { return false; }
    std::vector<char> fixed(w.size(), 0);
    if (!member) { fixed.push_back(1); }
    return !for_each_h(v, atoms(), fixed, [&](const std::vector<Mask>& h) { return ev.model_at(roots, h, x); });
  }
};

// Selection of world views among equilibrium models.
inline std::vector<std::vector<Mask>> f15_select(const F15Problem& p, std::vector<std::vector<Mask>> eq) {
  for (auto& w : eq) { std::sort(w.begin(), w.end()); }
  std::sort(eq.begin(), eq.end());
  eq.erase(std::unique(eq.begin(), eq.end()), eq.end());
  std::vector<Mask> cand;
  for (auto const& w : eq) { cand.insert(cand.end(), w.begin(), w.end()); }
  std::sort(cand.begin(), cand.end());
  cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
  std::vector<std::vector<char>> st(eq.size(), std::vector<char>(cand.size()));
  for (std::size_t a = 0; a < eq.size(); ++a) {
    for (std::size_t c = 0; c < cand.size(); ++c) { st[a][c] = p.star(eq[a], cand[c]); }
  }
  auto leq = [&](std::size_t a, std::size_t b) {
    for (std::size_t c = 0; c < cand.size(); ++c) {
      if (st[a][c] && !st[b][c]) { return false; }
    }
    return true;
  };
  auto subset = [](const std::vector<Mask>& a, const std::vector<Mask>& b) {
    return a.size() < b.size() && std::includes(b.begin(), b.end(), a.begin(), a.end());
  };
  std::vector<std::vector<Mask>> out;
  for (std::size_t a = 0; a < eq.size(); ++a) {
    bool keep = true;
    for (std::size_t b = 0; b < eq.size() && keep; ++b) {
      if (a == b) { continue; }
      if (subset(eq[a], eq[b])) { keep = false; }
      if (leq(a, b) && !leq(b, a)) { keep = false; }
    }
    if (keep) { out.push_back(eq[a]); }
  }
  return out;
}

}  // namespace detail

// Equilibrium models of Γ, M primitive.  Candidates come from guesses on
// the maximal modal subformulas: under a guess every member of W must
// satisfy the guessed theory at h = id.
inline std::vector<EpistemicInterpretation> f15_equilibrium_models(const Theory& t, const Limits& limits = {}) {
  detail::F15Problem p(t, limits);
  auto guess = p.circuit.maximal_modal(p.roots);
  if (guess.size() > limits.max_guess_bits) { throw CapExceeded("too many subjective subformulas for F15"); }
  std::vector<std::vector<Mask>> eq;
  std::vector<int> subst;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << guess.size()); ++bits) {
    subst.assign(p.circuit.size(), -1);
    for (std::size_t i = 0; i < guess.size(); ++i) {
      subst[guess[i]] = (bits >> i) & 1u ? Circuit::kTop : Circuit::kBot;
    }
    Circuit red(p.circuit.signature());
    Rebuilder rb(p.circuit, red, subst);
    std::vector<int> roots;
    for (int r : p.roots) { roots.push_back(rb(r)); }
    std::vector<Mask> cg;
    for (auto const& world : p.worlds) {
      std::vector<Mask> single{world};
      F15Eval ev(red, single);
      if (ev.model(roots, single)) { cg.push_back(world); }
    }
    if (cg.size() > 20) { throw CapExceeded("F15 candidate set too large"); }
    for (std::uint64_t s = 1; s < (std::uint64_t{1} << cg.size()); ++s) {
      std::vector<Mask> w;
      for (std::size_t b = 0; b < cg.size(); ++b) {
        if ((s >> b) & 1u) { w.push_back(cg[b]); }
      }
      F15Eval ev(p.circuit, w);
      bool ok = true;
      for (std::size_t i = 0; i < guess.size() && ok; ++i) {
        if (ev.sat(guess[i], 0, w) != static_cast<bool>((bits >> i) & 1u)) { ok = false; }
      }
      if (ok && p.equilibrium(w)) { eq.push_back(std::move(w)); }
    }
  }
  std::vector<EpistemicInterpretation> out;
  for (auto const& w : eq) { out.push_back(p.circuit.signature().decode(w)); }
  return canonical(std::move(out));
}

inline WorldViews f15_world_views(const Theory& t, const Limits& limits = {}) {
  detail::F15Problem p(t, limits);
  std::vector<std::vector<Mask>> eq;
  for (auto const& w : f15_equilibrium_models(t, limits)) { eq.push_back(p.circuit.signature().encode(w)); }
  WorldViews out;
  for (auto const& w : detail::f15_select(p, std::move(eq))) { out.push_back(p.circuit.signature().decode(w)); }
  return canonical(std::move(out));
}

}  // namespace elp
