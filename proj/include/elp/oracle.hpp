#pragma once

#include <set>
#include <vector>

#include "elp/solve.hpp"

// Brute-force world views: every non-empty set of candidate interpretations
// is tested against the defining condition of the semantics, evaluated on
// the formula syntax.  Meant for a handful of atoms only.
namespace elp {

namespace oracle {

inline constexpr std::size_t kMaxCandidates = 16;

inline std::vector<Interpretation> consistent_subsets(const std::vector<ExplicitLiteral>& lits) {
  if (lits.size() > 24) { throw CapExceeded("oracle literal universe too large"); }
  std::vector<Interpretation> out;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << lits.size()); ++s) {
    std::vector<ExplicitLiteral> xs;
    std::set<Atom> seen;
    bool ok = true;
    for (std::size_t k = 0; k < lits.size() && ok; ++k) {
      if (!((s >> k) & 1u)) { continue; }
      if (!seen.insert(lits[k].atom).second) { ok = false; }
      xs.push_back(lits[k]);
    }
    if (ok) { out.push_back(Interpretation(xs)); }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Belief sets of the reduct-based semantics only contain head literals.
inline std::vector<Interpretation> head_candidates(const Program& p) {
  std::set<ExplicitLiteral> lits;
  for (auto const& r : p.rules) {
    for (auto const& h : r.head) {
      if (h.depth == 0 && !h.is_constant()) { lits.insert(h.lit); }
    }
  }
  return consistent_subsets({lits.begin(), lits.end()});
}

inline std::vector<Interpretation> all_candidates(const std::set<Atom>& atoms) {
  std::vector<ExplicitLiteral> lits;
  for (auto const& a : atoms) {
    lits.push_back({a, false});
    lits.push_back({a, true});
  }
  return consistent_subsets(lits);
}

template <class Fn>
void for_each_epistemic(const std::vector<Interpretation>& cands, Fn&& fn) {
  if (cands.size() > kMaxCandidates) {
    throw CapExceeded("oracle limited to " + std::to_string(kMaxCandidates) + " candidate interpretations, got " +
                      std::to_string(cands.size()));
  }
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << cands.size()); ++s) {
    std::vector<Interpretation> w;
    for (std::size_t k = 0; k < cands.size(); ++k) {
      if ((s >> k) & 1u) { w.push_back(cands[k]); }
    }
    fn(EpistemicInterpretation(std::move(w)));
  }
}

inline bool same(const EpistemicInterpretation& w, std::vector<Interpretation> sm) {
  std::sort(sm.begin(), sm.end());
  return !sm.empty() && w.belief_sets() == sm;
}

inline bool g94_fixpoint(const Theory& t, const EpistemicInterpretation& w) {
  return same(w, stable_models_raw(g94_reduct(t, w)));
}

inline bool g11_fixpoint(const Program& p, const EpistemicInterpretation& w) {
  return same(w, stable_models_raw(program_to_theory(g11_reduct(p, w))));
}

inline bool k15_fixpoint(const Program& p, const EpistemicInterpretation& w) {
  return same(w, stable_models_raw(program_to_theory(k15_reduct(p, w))));
}

inline bool m85_fixpoint(const Theory& t, const std::vector<Interpretation>& all, const EpistemicInterpretation& w) {
  std::vector<Interpretation> sat;
  for (auto const& i : all) {
    bool ok = true;
    for (auto const& f : t) { ok = ok && bi_satisfies({w, i}, f); }
    if (ok) { sat.push_back(i); }
  }
  return same(w, sat);
}

// Φ_W over the K l of the M-expanded program, evaluated directly.
inline std::vector<char> phi(const Program& p, const EpistemicInterpretation& w) {
  std::vector<Formula> ks;
  for (auto const& r : expand_m(p).rules) {
    for (auto const& l : r.body) {
      if (auto* s = std::get_if<SubjectiveLiteral>(&l)) {
        SubjectiveLiteral core = *s;
        core.depth = 0;
        Formula f = to_formula(core);
        if (std::find(ks.begin(), ks.end(), f) == ks.end()) { ks.push_back(f); }
      }
    }
  }
  std::vector<char> out;
  for (auto const& f : ks) { out.push_back(!ei_satisfies(w, f)); }
  return out;
}

// F15 structures with worlds W and here-map h, on the formula syntax.
class F15 {
 public:
  explicit F15(std::vector<Interpretation> w) : w_(std::move(w)) {}

  bool sat(const Formula& f, std::size_t j, const std::vector<Interpretation>& h) const {
    if (f.is_explicit_literal()) { return h[j].contains(f.as_literal()); }
    switch (f.op()) {
      case Op::Bot: return false;
      case Op::Top: return true;
      case Op::And: return sat(f.lhs(), j, h) && sat(f.rhs(), j, h);
      case Op::Or: return sat(f.lhs(), j, h) || sat(f.rhs(), j, h);
      case Op::Implies:
        return (!sat(f.body(), j, h) || sat(f.head(), j, h)) && (!sat(f.body(), j, w_) || sat(f.head(), j, w_));
      case Op::K:
        for (std::size_t k = 0; k < w_.size(); ++k) {
          if (!sat(f.arg(), k, h)) { return false; }
        }
        return true;
      case Op::M:
        for (std::size_t k = 0; k < w_.size(); ++k) {
          if (sat(f.arg(), k, h)) { return true; }
        }
        return false;
      default: throw UnsupportedError("F15 oracle: unsupported connective");
    }
  }

  bool model_at(const Theory& t, const std::vector<Interpretation>& h, const std::vector<std::size_t>& at) const {
    for (auto j : at) {
      for (auto const& f : t) {
        if (!sat(f, j, h)) { return false; }
      }
    }
    return true;
  }

  // Some h ≠ id, total on the worlds outside `free`, is a model at `at`.
  bool smaller_model(const Theory& t, const std::vector<std::size_t>& free, const std::vector<std::size_t>& at) const {
    std::vector<std::vector<Interpretation>> options;
    for (auto j : free) {
      const auto& lits = w_[j].literals();
      std::vector<Interpretation> subs;
      for (std::uint64_t s = 0; s < (std::uint64_t{1} << lits.size()); ++s) {
        std::vector<ExplicitLiteral> xs;
        for (std::size_t b = 0; b < lits.size(); ++b) {
          if ((s >> b) & 1u) { xs.push_back(lits[b]); }
        }
        subs.push_back(Interpretation(xs));
      }
      options.push_back(std::move(subs));
    }
    std::vector<std::size_t> idx(free.size(), 0);
    for (;;) {
      std::vector<Interpretation> h = w_;
      bool differs = false;
      for (std::size_t q = 0; q < free.size(); ++q) {
        h[free[q]] = options[q][idx[q]];
        differs |= h[free[q]] != w_[free[q]];
      }
      if (differs && model_at(t, h, at)) { return true; }
      std::size_t k = 0;
      while (k < idx.size() && ++idx[k] == options[k].size()) { idx[k++] = 0; }
      if (k == idx.size()) { return false; }
    }
  }

  const std::vector<Interpretation>& worlds() const { return w_; }

 private:
  std::vector<Interpretation> w_;
};

inline bool f15_equilibrium(const Theory& t, const EpistemicInterpretation& w) {
  F15 s(w.belief_sets());
  std::vector<std::size_t> all(w.size());
  for (std::size_t k = 0; k < all.size(); ++k) { all[k] = k; }
  return s.model_at(t, s.worlds(), all) && !s.smaller_model(t, all, all);
}

// W ∪ {I}, W ⊨* Γ
inline bool f15_star(const Theory& t, const EpistemicInterpretation& w, const Interpretation& i) {
  std::vector<Interpretation> v = w.belief_sets();
  if (!w.contains(i)) { v.push_back(i); }
  F15 s(v);
  std::vector<std::size_t> x;
  for (std::size_t k = 0; k < w.size(); ++k) {
    x.push_back(static_cast<std::size_t>(
        std::find(v.begin(), v.end(), w.belief_sets()[k]) - v.begin()));
  }
  return s.model_at(t, v, x) && !s.smaller_model(t, x, x);
}

}  // namespace oracle

inline WorldViews brute_force_world_views(const Program& program, Semantics sem) {
  if (!is_ground(program)) { throw UnsupportedError("oracle needs a ground program"); }
  if (atoms_of(program).size() > 3) { throw CapExceeded("the brute-force oracle is limited to 3 atoms"); }
  Theory theory = program_to_theory(program);
  WorldViews out;
  switch (sem) {
    case Semantics::G94:
    case Semantics::C19:
      oracle::for_each_epistemic(oracle::head_candidates(program), [&](const EpistemicInterpretation& w) {
        if (!oracle::g94_fixpoint(theory, w)) { return; }
        if (sem == Semantics::C19 && is_unfounded_raw(program, w)) { return; }
        out.push_back(w);
      });
      break;
    case Semantics::G11:
      oracle::for_each_epistemic(oracle::head_candidates(program), [&](const EpistemicInterpretation& w) {
        if (oracle::g11_fixpoint(program, w)) { out.push_back(w); }
      });
      break;
    case Semantics::K15:
    case Semantics::S16: {
      WorldViews k15;
      oracle::for_each_epistemic(oracle::head_candidates(program), [&](const EpistemicInterpretation& w) {
        if (oracle::k15_fixpoint(program, w)) { k15.push_back(w); }
      });
      if (sem == Semantics::K15) {
        out = k15;
        break;
      }
      std::vector<std::vector<char>> phis;
      for (auto const& w : k15) { phis.push_back(oracle::phi(program, w)); }
      for (std::size_t a = 0; a < k15.size(); ++a) {
        bool maximal = true;
        for (std::size_t b = 0; b < k15.size(); ++b) {
          bool sup = phis[b] != phis[a];
          for (std::size_t k = 0; k < phis[a].size(); ++k) {
            if (phis[a][k] && !phis[b][k]) { sup = false; }
          }
          if (sup) { maximal = false; }
        }
        if (maximal) { out.push_back(k15[a]); }
      }
      break;
    }
    case Semantics::F15: {
      WorldViews eq;
      oracle::for_each_epistemic(oracle::head_candidates(program), [&](const EpistemicInterpretation& w) {
        if (oracle::f15_equilibrium(theory, w)) { eq.push_back(w); }
      });
      std::set<Interpretation> members;
      for (auto const& w : eq) { members.insert(w.belief_sets().begin(), w.belief_sets().end()); }
      auto leq = [&](const EpistemicInterpretation& a, const EpistemicInterpretation& b) {
        for (auto const& i : members) {
          if (oracle::f15_star(theory, a, i) && !oracle::f15_star(theory, b, i)) { return false; }
        }
        return true;
      };
      for (auto const& w : eq) {
        bool keep = true;
        for (auto const& v : eq) {
          if (v == w) { continue; }
          if (w.subset_of(v) || (leq(w, v) && !leq(v, w))) { keep = false; }
        }
        if (keep) { out.push_back(w); }
      }
      break;
    }
    case Semantics::M85:
    case Semantics::S92: {
      Theory t = sem == Semantics::M85 ? theory : translate_b(theory);
      auto all = oracle::all_candidates(atoms_of(program));
      oracle::for_each_epistemic(all, [&](const EpistemicInterpretation& w) {
        if (oracle::m85_fixpoint(t, all, w)) { out.push_back(w); }
      });
      break;
    }
    case Semantics::FK15: throw UnsupportedError("no brute-force oracle for fk15");
  }
  return canonical(std::move(out));
}

}  // namespace elp
