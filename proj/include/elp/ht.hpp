#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "elp/circuit.hpp"
#include "elp/limits.hpp"

namespace elp {

struct HTPair {
  Interpretation here;
  Interpretation there;
};

namespace detail {

inline void check_pair(const HTPair& p) {
  if (!p.here.subset_of(p.there)) { throw Error("here-world must be a subset of the there-world"); }
}

inline Circuit compile_objective(const Formula& f, const HTPair& p, int& root) {
  Signature sig(atoms_of(f));
  for (auto const& l : p.there.literals()) { sig.intern(l.atom); }
  Circuit c(std::move(sig));
  if (has_modality(f)) { throw UnsupportedError("formula is not objective: " + to_string(f)); }
  root = c.compile(f);
  return c;
}

}  // namespace detail

inline bool ht_satisfies(const HTPair& p, const Formula& f) {
  detail::check_pair(p);
  int root;
  Circuit c = detail::compile_objective(f, p, root);
  auto& s = c.signature();
  return HTEval{c}.sat(root, s.encode(p.here), s.encode(p.there));
}

inline bool ht_falsifies(const HTPair& p, const Formula& f) {
  detail::check_pair(p);
  int root;
  Circuit c = detail::compile_objective(f, p, root);
  auto& s = c.signature();
  return HTEval{c}.fals(root, s.encode(p.here), s.encode(p.there));
}

namespace detail {

// Three-valued truth: 0 false, 1 unknown, 2 true.
using V3 = int;
inline V3 v_not(V3 v) { return 2 - v; }

// Partial literal assignment.
struct Partial {
  Mask t;  // literals known to be in the set
  Mask f;  // literals known not to be in the set

  V3 value(int atom, bool neg) const {
    if (t.has(atom, neg)) { return 2; }
    if (f.has(atom, neg)) { return 0; }
    return 1;
  }
};

// Kleene evaluation of ⟨T,T⟩ for a partial T.
struct ClassicalEval3 {
  const Circuit& c;
  const Partial& p;

  V3 sat(int n) const {
    const auto& x = c.node(n);
    switch (x.op) {
      case Op::Bot: return 0;
      case Op::Top: return 2;
      case Op::Atom: return p.value(x.atom, x.negated);
      case Op::Neg: return fals(x.a);
      case Op::And: {
        V3 a = sat(x.a);
        return a == 0 ? 0 : std::min(a, sat(x.b));
      }
      case Op::Or: {
        V3 a = sat(x.a);
        return a == 2 ? 2 : std::max(a, sat(x.b));
      }
      case Op::Implies: {
        V3 b = sat(x.b);
        return b == 0 ? 2 : std::max(sat(x.a), v_not(b));
      }
      default: throw UnsupportedError("modal operator in objective evaluation");
    }
  }
  V3 fals(int n) const {
    const auto& x = c.node(n);
    switch (x.op) {
      case Op::Bot: return 2;
      case Op::Top: return 0;
      case Op::Atom: return p.value(x.atom, !x.negated);
      case Op::Neg: return sat(x.a);
      case Op::And: {
        V3 a = fals(x.a);
        return a == 2 ? 2 : std::max(a, fals(x.b));
      }
      case Op::Or: {
        V3 a = fals(x.a);
        return a == 0 ? 0 : std::min(a, fals(x.b));
      }
      case Op::Implies: {
        V3 a = fals(x.a);
        return a == 0 ? 0 : std::min(a, sat(x.b));
      }
      default: throw UnsupportedError("modal operator in objective evaluation");
    }
  }
};

// Kleene evaluation of ⟨H,T⟩ for a total T and a partial H ⊆ T.
struct HTEval3 {
  const Circuit& c;
  const Partial& h;
  const Mask& t;

  V3 lit(int atom, bool neg) const {
    if (!t.has(atom, neg)) { return 0; }
    return h.value(atom, neg);
  }
  bool there_sat(int n) const { return HTEval{c}.sat(n, t, t); }
  V3 sat(int n) const {
    const auto& x = c.node(n);
    switch (x.op) {
      case Op::Bot: return 0;
      case Op::Top: return 2;
      case Op::Atom: return lit(x.atom, x.negated);
      case Op::Neg: return fals(x.a);
      case Op::And: {
        V3 a = sat(x.a);
        return a == 0 ? 0 : std::min(a, sat(x.b));
      }
      case Op::Or: {
        V3 a = sat(x.a);
        return a == 2 ? 2 : std::max(a, sat(x.b));
      }
      case Op::Implies: {
        if (!there_sat(n)) { return 0; }
        V3 b = sat(x.b);
        return b == 0 ? 2 : std::max(sat(x.a), v_not(b));
      }
      default: throw UnsupportedError("modal operator in objective evaluation");
    }
  }
  V3 fals(int n) const {
    const auto& x = c.node(n);
    switch (x.op) {
      case Op::Bot: return 2;
      case Op::Top: return 0;
      case Op::Atom: return lit(x.atom, !x.negated);
      case Op::Neg: return sat(x.a);
      case Op::And: {
        V3 a = fals(x.a);
        return a == 2 ? 2 : std::max(a, fals(x.b));
      }
      case Op::Or: {
        V3 a = fals(x.a);
        return a == 0 ? 0 : std::min(a, fals(x.b));
      }
      case Op::Implies: {
        if (!HTEval{c}.sat(x.b, t, t)) { return 0; }
        return fals(x.a);
      }
      default: throw UnsupportedError("modal operator in objective evaluation");
    }
  }
};

// Rule-form view of an objective circuit: disjunctive heads and conjunctive
// bodies of literals under at most two default negations.
struct FlatRule {
  struct Item {
    int lit;    // literal id
    int depth;  // 0, 1 or 2
  };
  std::vector<Item> head;
  std::vector<Item> body;
};

// Returns nullopt when some root is not in rule form.
inline std::optional<std::vector<FlatRule>> flatten(const Circuit& c, const std::vector<int>& roots) {
  std::vector<FlatRule> rules;
  // -1: not an objective literal, -2: ⊤, -3: ⊥
  auto item = [&](int n, FlatRule::Item& out) -> int {
    int d = 0;
    while (c.is_dneg(n)) {
      ++d;
      n = c.node(n).b;
    }
    while (d > 2) { d -= 2; }
    const auto& x = c.node(n);
    if (x.op == Op::Top || x.op == Op::Bot) {
      bool v = x.op == Op::Top;
      if (d % 2 == 1) { v = !v; }
      return v ? -2 : -3;
    }
    if (x.op != Op::Atom) { return -1; }
    out = {lit_id(x.atom, x.negated), d};
    return 0;
  };
  for (int r : roots) {
    int hn = r;
    int bn = Circuit::kTop;
    if (c.node(r).op == Op::Implies && !c.is_dneg(r)) {
      hn = c.node(r).a;
      bn = c.node(r).b;
    } else if (c.is_dneg(r)) {
      hn = Circuit::kBot;
      bn = c.node(r).b;
    }
    FlatRule fr;
    bool drop = false;
    std::vector<int> stack{hn};
    while (!stack.empty() && !drop) {
      int n = stack.back();
      stack.pop_back();
      if (c.node(n).op == Op::Or) {
        stack.push_back(c.node(n).b);
        stack.push_back(c.node(n).a);
        continue;
      }
      FlatRule::Item it{};
      int k = item(n, it);
      if (k == -1) { return std::nullopt; }
      if (k == -2) { drop = true; }
      if (k == 0) { fr.head.push_back(it); }
    }
    stack = {bn};
    while (!stack.empty() && !drop) {
      int n = stack.back();
      stack.pop_back();
      if (c.node(n).op == Op::And) {
        stack.push_back(c.node(n).b);
        stack.push_back(c.node(n).a);
        continue;
      }
      FlatRule::Item it{};
      int k = item(n, it);
      if (k == -1) { return std::nullopt; }
      if (k == -3) { drop = true; }
      if (k == 0) { fr.body.push_back(it); }
    }
    if (!drop) { rules.push_back(std::move(fr)); }
  }
  return rules;
}

// Backtracking search for stable models of a rule-form program.
class RuleSolver {
 public:
  RuleSolver(std::vector<FlatRule> rules, std::size_t atoms)
      : rules_(std::move(rules)), nlits_(2 * static_cast<int>(atoms)), val_(nlits_, kU),
        supports_(nlits_) {
    for (std::size_t i = 0; i < rules_.size(); ++i) {
      for (auto const& h : rules_[i].head) {
        if (h.depth == 0) { supports_[h.lit].push_back(static_cast<int>(i)); }
      }
    }
    for (int l = 0; l < nlits_; ++l) {
      if (supports_[l].empty()) { val_[l] = kF; }
    }
  }

  // visit(Mask) returns false to stop; enumerate returns false if stopped.
  bool enumerate(const std::function<bool(const Mask&)>& visit) {
    visit_ = &visit;
    std::vector<signed char> saved = val_;
    bool r = search();
    val_ = saved;
    return r;
  }

 private:
  static constexpr signed char kF = 0, kU = 1, kT = 2;

  signed char item_value(const FlatRule::Item& it) const {
    signed char v = val_[it.lit];
    if (it.depth == 1) { return static_cast<signed char>(2 - v); }
    return v;
  }
  // Make the item take truth value `v`; false on conflict.
  bool force(const FlatRule::Item& it, bool v, bool& changed) {
    bool lit_true = it.depth == 1 ? !v : v;
    return assign(it.lit, lit_true, changed);
  }
  bool assign(int lit, bool value, bool& changed) {
    signed char want = value ? kT : kF;
    if (val_[lit] == want) { return true; }
    if (val_[lit] != kU) { return false; }
    val_[lit] = want;
    changed = true;
    if (value && !assign(lit ^ 1, false, changed)) { return false; }
    return true;
  }

  bool can_support(int l, const FlatRule& r) const {
    for (auto const& b : r.body) {
      if (item_value(b) == kF) { return false; }
      if (b.depth == 0 && b.lit == l) { return false; }
    }
    for (auto const& h : r.head) {
      if (h.depth == 0) {
        if (h.lit != l && val_[h.lit] == kT) { return false; }
      } else if (item_value(h) == kT) {
        return false;
      }
    }
    return true;
  }

  bool propagate() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (auto const& r : rules_) {
        int bu = 0;
        const FlatRule::Item* bun = nullptr;
        bool bfalse = false;
        for (auto const& b : r.body) {
          auto v = item_value(b);
          if (v == kF) {
            bfalse = true;
            break;
          }
          if (v == kU) {
            ++bu;
            bun = &b;
          }
        }
        if (bfalse) { continue; }
        int hu = 0;
        const FlatRule::Item* hun = nullptr;
        bool htrue = false;
        for (auto const& h : r.head) {
          auto v = item_value(h);
          if (v == kT) {
            htrue = true;
            break;
          }
          if (v == kU) {
            ++hu;
            hun = &h;
          }
        }
        if (htrue) { continue; }
        if (bu == 0 && hu == 0) { return false; }
        if (bu == 0 && hu == 1) {
          if (!force(*hun, true, changed)) { return false; }
        } else if (hu == 0 && bu == 1) {
          if (!force(*bun, false, changed)) { return false; }
        }
      }
      for (int l = 0; l < nlits_; ++l) {
        if (val_[l] == kF) { continue; }
        bool ok = false;
        for (int ri : supports_[l]) {
          if (can_support(l, rules_[ri])) {
            ok = true;
            break;
          }
        }
        if (!ok) {
          if (val_[l] == kT) { return false; }
          val_[l] = kF;
          changed = true;
        }
      }
    }
    return true;
  }

  bool search() {
    std::vector<signed char> saved = val_;
    if (!propagate()) {
      val_ = saved;
      return true;
    }
    int pick = -1;
    for (int l = 0; l < nlits_; ++l) {
      if (val_[l] == kU) {
        pick = l;
        break;
      }
    }
    if (pick < 0) {
      Mask t;
      for (int l = 0; l < nlits_; ++l) {
        if (val_[l] == kT) { t.set(l / 2, l % 2 == 1); }
      }
      bool cont = true;
      if (minimal(t)) { cont = (*visit_)(t); }
      val_ = saved;
      return cont;
    }
    std::vector<signed char> mid = val_;
    val_[pick] = kF;
    if (!search()) {
      val_ = saved;
      return false;
    }
    val_ = mid;
    bool changed = false;
    bool cont = true;
    if (assign(pick, true, changed)) { cont = search(); }
    val_ = saved;
    return cont;
  }

  // Is t a minimal model of the reduct Π^t?
  bool minimal(const Mask& t) const {
    struct Clause {
      std::vector<int> body;
      std::vector<int> head;
    };
    auto in_t = [&](int l) { return t.has(l / 2, l % 2 == 1); };
    std::vector<Clause> red;
    bool normal = true;
    for (auto const& r : rules_) {
      bool keep = true;
      Clause cl;
      for (auto const& b : r.body) {
        bool v = in_t(b.lit);
        if (b.depth == 0) {
          if (!v) { keep = false; }
          cl.body.push_back(b.lit);
        } else if ((b.depth == 1) == v) {
          keep = false;
        }
        if (!keep) { break; }
      }
      if (!keep) { continue; }
      for (auto const& h : r.head) {
        bool v = in_t(h.lit);
        if (h.depth == 0) {
          if (v) { cl.head.push_back(h.lit); }
        } else if ((h.depth == 1) != v) {
          keep = false;  // negated head item true at t: rule vanishes
          break;
        }
      }
      if (!keep) { continue; }
      if (cl.head.size() > 1) { normal = false; }
      red.push_back(std::move(cl));
    }
    if (normal) {
      Mask lm;
      bool changed = true;
      while (changed) {
        changed = false;
        for (auto const& cl : red) {
          if (cl.head.empty()) { continue; }
          int h = cl.head.front();
          if (lm.has(h / 2, h % 2 == 1)) { continue; }
          bool fire = true;
          for (int b : cl.body) {
            if (!lm.has(b / 2, b % 2 == 1)) {
              fire = false;
              break;
            }
          }
          if (fire) {
            lm.set(h / 2, h % 2 == 1);
            changed = true;
          }
        }
      }
      return lm == t;
    }
    // Search for a model H ⊊ t of the reduct.
    std::vector<int> lits;
    for (int l = 0; l < nlits_; ++l) {
      if (in_t(l)) { lits.push_back(l); }
    }
    std::vector<signed char> hv(nlits_, kU);
    std::function<bool()> rec = [&]() -> bool {
      bool changed = true;
      while (changed) {
        changed = false;
        for (auto const& cl : red) {
          int unk = 0;
          int last = -1;
          bool sat = false;
          for (int b : cl.body) {
            if (hv[b] == kF) {
              sat = true;
              break;
            }
            if (hv[b] == kU) {
              ++unk;
              last = ~b;
            }
          }
          if (sat) { continue; }
          for (int h : cl.head) {
            if (hv[h] == kT) {
              sat = true;
              break;
            }
            if (hv[h] == kU) {
              ++unk;
              last = h;
            }
          }
          if (sat) { continue; }
          if (unk == 0) { return false; }
          if (unk == 1) {
            if (last >= 0) { hv[last] = kT; }
            else { hv[~last] = kF; }
            changed = true;
          }
        }
        // H ≠ t: some literal of t must be false.
        int unk = 0;
        int last = -1;
        bool sat = false;
        for (int l : lits) {
          if (hv[l] == kF) {
            sat = true;
            break;
          }
          if (hv[l] == kU) {
            ++unk;
            last = l;
          }
        }
        if (!sat) {
          if (unk == 0) { return false; }
          if (unk == 1) {
            hv[last] = kF;
            changed = true;
          }
        }
      }
      int pick = -1;
      for (int l : lits) {
        if (hv[l] == kU) {
          pick = l;
          break;
        }
      }
      if (pick < 0) { return true; }
      auto saved = hv;
      hv[pick] = kF;
      if (rec()) { return true; }
      hv = saved;
      hv[pick] = kT;
      if (rec()) { return true; }
      hv = saved;
      return false;
    };
    return !rec();
  }

  std::vector<FlatRule> rules_;
  int nlits_;
  std::vector<signed char> val_;
  std::vector<std::vector<int>> supports_;
  const std::function<bool(const Mask&)>* visit_ = nullptr;
};

// Backtracking for arbitrary objective theories.
class GeneralSolver {
 public:
  GeneralSolver(const Circuit& c, std::vector<int> roots) : c_(c), roots_(std::move(roots)) {
    std::vector<char> used(c.signature().size(), 0);
    for (int r : roots_) { c.atoms_below(r, used); }
    for (std::size_t a = 0; a < used.size(); ++a) {
      if (used[a]) {
        lits_.push_back(lit_id(static_cast<int>(a), false));
        lits_.push_back(lit_id(static_cast<int>(a), true));
      }
    }
  }

  bool enumerate(const std::function<bool(const Mask&)>& visit) {
    Partial p;
    for (std::size_t a = 0; a < c_.signature().size(); ++a) {
      bool used = std::find(lits_.begin(), lits_.end(), lit_id(static_cast<int>(a), false)) != lits_.end();
      if (!used) {
        p.f.set(static_cast<int>(a), false);
        p.f.set(static_cast<int>(a), true);
      }
    }
    return search(p, 0, visit);
  }

 private:
  bool search(Partial p, std::size_t i, const std::function<bool(const Mask&)>& visit) {
    ClassicalEval3 ev{c_, p};
    for (int r : roots_) {
      if (ev.sat(r) == 0) { return true; }
    }
    while (i < lits_.size()) {
      int l = lits_[i];
      if (!p.t.has(l / 2, l % 2 == 1) && !p.f.has(l / 2, l % 2 == 1)) { break; }
      ++i;
    }
    if (i == lits_.size()) {
      if (minimal(p.t)) { return visit(p.t); }
      return true;
    }
    int l = lits_[i];
    Partial q = p;
    q.f.set(l / 2, l % 2 == 1);
    if (!search(q, i + 1, visit)) { return false; }
    q = p;
    q.t.set(l / 2, l % 2 == 1);
    q.f.set(l / 2, l % 2 == 0);  // complement
    return search(q, i + 1, visit);
  }

  bool minimal(const Mask& t) const {
    std::vector<int> tl;
    for (int l : lits_) {
      if (t.has(l / 2, l % 2 == 1)) { tl.push_back(l); }
    }
    Partial h;
    return !smaller(h, tl, 0, t, false);
  }

  // Is there H ⊊ t extending the partial h with ⟨H,t⟩ a model?
  bool smaller(Partial h, const std::vector<int>& tl, std::size_t i, const Mask& t, bool dropped) const {
    HTEval3 ev{c_, h, t};
    for (int r : roots_) {
      if (ev.sat(r) == 0) { return false; }
    }
    if (i == tl.size()) { return dropped; }
    int l = tl[i];
    Partial q = h;
    q.f.set(l / 2, l % 2 == 1);
    if (smaller(q, tl, i + 1, t, true)) { return true; }
    q = h;
    q.t.set(l / 2, l % 2 == 1);
    return smaller(q, tl, i + 1, t, dropped);
  }

  const Circuit& c_;
  std::vector<int> roots_;
  std::vector<int> lits_;
};

inline std::size_t used_atoms(const Circuit& c, const std::vector<int>& roots) {
  std::vector<char> used(c.signature().size(), 0);
  for (int r : roots) { c.atoms_below(r, used); }
  return static_cast<std::size_t>(std::count(used.begin(), used.end(), 1));
}

}  // namespace detail

// Enumerates SM of the objective theory given by `roots` in `c`; each model
// is reported as a mask over c's signature.  Returns false if `visit`
// stopped the search.
inline bool enumerate_stable_models(const Circuit& c, const std::vector<int>& roots,
                                    const Limits& limits,
                                    const std::function<bool(const Mask&)>& visit) {
  std::size_t n = detail::used_atoms(c, roots);
  if (n > limits.max_atoms) {
    throw CapExceeded("stable-model search over " + std::to_string(n) +
                      " atoms exceeds the cap of " + std::to_string(limits.max_atoms) +
                      " (raise --max-atoms)");
  }
  if (auto rules = detail::flatten(c, roots)) {
    detail::RuleSolver s(std::move(*rules), c.signature().size());
    return s.enumerate(visit);
  }
  detail::GeneralSolver s(c, roots);
  return s.enumerate(visit);
}

inline std::vector<Mask> stable_model_masks(const Circuit& c, const std::vector<int>& roots,
                                            const Limits& limits) {
  std::vector<Mask> out;
  enumerate_stable_models(c, roots, limits, [&](const Mask& m) {
    out.push_back(m);
    return true;
  });
  return out;
}

// Raw oracle: every consistent T over the used atoms, every H ⊂ T.
inline std::vector<Mask> stable_model_masks_raw(const Circuit& c, const std::vector<int>& roots) {
  HTEval ev{c};
  std::vector<Mask> out;
  std::size_t n = c.signature().size();
  for_each_interpretation(n, [&](const Mask& t) {
    if (!ev.model(roots, t, t)) { return; }
    std::vector<Mask> lits;
    for (std::size_t a = 0; a < n; ++a) {
      if (t.has(static_cast<int>(a), false)) { lits.push_back(lit_mask(lit_id(static_cast<int>(a), false))); }
      if (t.has(static_cast<int>(a), true)) { lits.push_back(lit_mask(lit_id(static_cast<int>(a), true))); }
    }
    std::uint64_t full = (std::uint64_t{1} << lits.size()) - 1;
    for (std::uint64_t s = 0; s < full; ++s) {
      Mask h;
      for (std::size_t k = 0; k < lits.size(); ++k) {
        if ((s >> k) & 1u) { h = h | lits[k]; }
      }
      if (ev.model(roots, h, t)) { return; }
    }
    out.push_back(t);
  });
  return out;
}

inline std::vector<Interpretation> stable_models(const Theory& theory, const Limits& limits = {}) {
  Circuit c(Signature(atoms_of(theory)));
  if (!is_objective(theory)) { throw UnsupportedError("stable models need an objective theory"); }
  auto roots = c.compile(theory);
  std::vector<Interpretation> out;
  for (auto const& m : stable_model_masks(c, roots, limits)) { out.push_back(c.signature().decode(m)); }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<Interpretation> stable_models_raw(const Theory& theory, std::size_t max_atoms = 6) {
  Circuit c(Signature(atoms_of(theory)));
  if (!is_objective(theory)) { throw UnsupportedError("stable models need an objective theory"); }
  if (c.signature().size() > max_atoms) {
    throw CapExceeded("raw stable-model enumeration is limited to " + std::to_string(max_atoms) + " atoms");
  }
  auto roots = c.compile(theory);
  std::vector<Interpretation> out;
  for (auto const& m : stable_model_masks_raw(c, roots)) { out.push_back(c.signature().decode(m)); }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace elp
