#pragma once

#include <set>
#include <vector>

#include "elp/circuit.hpp"
#include "elp/program.hpp"
#include "elp/rewrite.hpp"

namespace elp {

struct BeliefInterpretation {
  EpistemicInterpretation world_view;
  Interpretation here;
};

namespace detail {

// Compiles formulas against a fixed epistemic interpretation.
class EpistemicContext {
 public:
  EpistemicContext(std::set<Atom> atoms, const EpistemicInterpretation& wv) {
    for (auto const& i : wv.belief_sets()) {
      for (auto const& l : i.literals()) { atoms.insert(l.atom); }
    }
    circuit_ = Circuit(Signature(atoms));
    w_ = circuit_.signature().encode(wv);
  }

  int compile(const Formula& f) { return circuit_.compile(f); }
  BeliefEval eval() const { return BeliefEval(circuit_, w_); }
  Mask encode(const Interpretation& i) const { return circuit_.signature().encode(i); }

  // W ⊨ f, i.e. ⟨W,I⟩ ⊨ f for every I ∈ W.
  bool holds(const Formula& f) {
    int n = compile(f);
    return eval().holds(n);
  }

 private:
  Circuit circuit_;
  std::vector<Mask> w_;
};

inline void require_nonempty(const EpistemicInterpretation& wv) {
  if (wv.size() == 0) { throw Error("an epistemic interpretation must be non-empty"); }
}

}  // namespace detail

inline bool bi_satisfies(const BeliefInterpretation& bi, const Formula& f) {
  detail::require_nonempty(bi.world_view);
  auto atoms = atoms_of(f);
  for (auto const& l : bi.here.literals()) { atoms.insert(l.atom); }
  detail::EpistemicContext ctx(atoms, bi.world_view);
  int n = ctx.compile(f);
  return ctx.eval().sat(n, ctx.encode(bi.here));
}

inline bool bi_falsifies(const BeliefInterpretation& bi, const Formula& f) {
  detail::require_nonempty(bi.world_view);
  auto atoms = atoms_of(f);
  for (auto const& l : bi.here.literals()) { atoms.insert(l.atom); }
  detail::EpistemicContext ctx(atoms, bi.world_view);
  int n = ctx.compile(f);
  return ctx.eval().fals(n, ctx.encode(bi.here));
}

inline bool ei_satisfies(const EpistemicInterpretation& wv, const Formula& f) {
  detail::require_nonempty(wv);
  detail::EpistemicContext ctx(atoms_of(f), wv);
  return ctx.holds(f);
}

inline bool ei_satisfies(const EpistemicInterpretation& wv, const Theory& t) {
  for (auto const& f : t) {
    if (!ei_satisfies(wv, f)) { return false; }
  }
  return true;
}

// Maximal K/M subformulas in first-occurrence order, without duplicates.
inline std::vector<Formula> maximal_subjective_subformulas(const Theory& t) {
  std::vector<Formula> out;
  std::function<void(const Formula&)> walk = [&](const Formula& f) {
    switch (f.op()) {
      case Op::K:
      case Op::M:
        if (std::find(out.begin(), out.end(), f) == out.end()) { out.push_back(f); }
        return;
      case Op::Bot:
      case Op::Top:
      case Op::Atom: return;
      case Op::Neg:
      case Op::Exists:
      case Op::Forall: walk(f.arg()); return;
      default:
        walk(f.lhs());
        walk(f.rhs());
    }
  };
  for (auto const& f : t) { walk(f); }
  return out;
}

// Every maximal K G / M G replaced by ⊤ when W ⊨ it and by ⊥ otherwise.
inline Theory g94_reduct(const Theory& t, const EpistemicInterpretation& wv) {
  detail::require_nonempty(wv);
  detail::EpistemicContext ctx(atoms_of(t), wv);
  std::function<Formula(const Formula&)> red = [&](const Formula& f) -> Formula {
    switch (f.op()) {
      case Op::K:
      case Op::M: return ctx.holds(f) ? Formula::top() : Formula::bot();
      case Op::Bot:
      case Op::Top:
      case Op::Atom: return f;
      case Op::Neg: return Formula::strong_neg(red(f.arg()));
      case Op::And: return Formula::conj(red(f.lhs()), red(f.rhs()));
      case Op::Or: return Formula::disj(red(f.lhs()), red(f.rhs()));
      case Op::Implies: return Formula::implies(red(f.head()), red(f.body()));
      default: throw UnsupportedError("quantified formula must be grounded first");
    }
  };
  Theory out;
  for (auto const& f : t) { out.push_back(red(f)); }
  return out;
}

namespace detail {

inline std::set<Atom> literal_atoms(const SubjectiveLiteral& s) {
  if (s.inner.is_constant()) { return {}; }
  return {s.inner.lit.atom};
}

inline bool holds_modal(const SubjectiveLiteral& s, const EpistemicInterpretation& wv) {
  SubjectiveLiteral core = s;
  core.depth = 0;
  return ei_satisfies(wv, to_formula(core));
}

inline bool holds_literal(const SubjectiveLiteral& s, const EpistemicInterpretation& wv) {
  return ei_satisfies(wv, to_formula(s));
}

}  // namespace detail

// Subjective literals over atoms of U get their modal core replaced by ⊤ or
// ⊥; the default negations in front of it are kept, so "not K a" becomes
// "not #false" when W ⊭ K a.
inline Program subjective_reduct_sig(const Program& p, const EpistemicInterpretation& wv,
                                     const std::set<Atom>& u) {
  detail::require_nonempty(wv);
  Program out = p;
  for (auto& r : out.rules) {
    for (auto& l : r.body) {
      auto* s = std::get_if<SubjectiveLiteral>(&l);
      if (!s) { continue; }
      bool inside = true;
      for (auto const& a : detail::literal_atoms(*s)) {
        if (!u.count(a)) { inside = false; }
      }
      if (!inside) { continue; }
      bool v = detail::holds_modal(*s, wv);
      ObjectiveLiteral o{v ? ObjectiveLiteral::Core::True : ObjectiveLiteral::Core::False, {}, s->depth};
      l = o;
    }
  }
  return out;
}

inline Program subjective_reduct(const Program& p, const EpistemicInterpretation& wv) {
  return subjective_reduct_sig(p, wv, atoms_of(p));
}

// G11: L ↦ ⊥ when W ⊭ L; otherwise L ↦ ⊤ under default negation and
// K l ↦ l.  M is expanded first.
inline Program g11_reduct(const Program& p, const EpistemicInterpretation& wv) {
  detail::require_nonempty(wv);
  Program out = expand_m(p);
  for (auto& r : out.rules) {
    for (auto& l : r.body) {
      auto* s = std::get_if<SubjectiveLiteral>(&l);
      if (!s) { continue; }
      if (!detail::holds_literal(*s, wv)) {
        l = ObjectiveLiteral::truth(false);
      } else if (s->depth > 0) {
        l = ObjectiveLiteral::truth(true);
      } else {
        l = s->inner;
      }
    }
  }
  return out;
}

// K15: K l ↦ l when W ⊨ K l, else ⊥; outer negations stay and triple
// negations are simplified.  M is expanded first.
inline Program k15_reduct(const Program& p, const EpistemicInterpretation& wv) {
  detail::require_nonempty(wv);
  Program out = expand_m(p);
  for (auto& r : out.rules) {
    for (auto& l : r.body) {
      auto* s = std::get_if<SubjectiveLiteral>(&l);
      if (!s) { continue; }
      ObjectiveLiteral o;
      if (detail::holds_modal(*s, wv)) {
        o = s->inner;
        o.depth += s->depth;
        while (o.depth > 2) { o.depth -= 2; }
      } else {
        o = ObjectiveLiteral{ObjectiveLiteral::Core::False, {}, s->depth};
      }
      l = o;
    }
  }
  return out;
}

}  // namespace elp
