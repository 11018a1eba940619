#pragma once

#include <map>
#include <span>
#include <tuple>
#include <vector>

#include "elp/ground.hpp"
#include "elp/interpretation.hpp"

namespace elp {

// Ground formulas compiled into a shared DAG over a Signature.  Node 0 is ⊥
// and node 1 is ⊤.  Explicit literals are leaves (Op::Atom with `negated`).
class Circuit {
 public:
  struct Node {
    Op op;
    int a = -1;
    int b = -1;
    int atom = -1;
    bool negated = false;
  };
  static constexpr int kBot = 0;
  static constexpr int kTop = 1;

  explicit Circuit(Signature sig = {}) : sig_(std::move(sig)) {
    nodes_.push_back({Op::Bot});
    nodes_.push_back({Op::Top});
  }

  const Signature& signature() const { return sig_; }
  Signature& signature() { return sig_; }
  const Node& node(int i) const { return nodes_[i]; }
  std::size_t size() const { return nodes_.size(); }

  int compile(const Formula& f) {
    switch (f.op()) {
      case Op::Bot: return kBot;
      case Op::Top: return kTop;
      case Op::Atom:
        if (!f.atom().ground()) { throw UnsupportedError("formula is not ground: " + to_string(f)); }
        return lit(sig_.intern(f.atom()), false);
      case Op::Neg:
        if (f.arg().is(Op::Atom)) {
          if (!f.arg().atom().ground()) {
            throw UnsupportedError("formula is not ground: " + to_string(f));
          }
          return lit(sig_.intern(f.arg().atom()), true);
        }
        return make(Op::Neg, compile(f.arg()));
      case Op::And: return make(Op::And, compile(f.lhs()), compile(f.rhs()));
      case Op::Or: return make(Op::Or, compile(f.lhs()), compile(f.rhs()));
      case Op::Implies: return make(Op::Implies, compile(f.head()), compile(f.body()));
      case Op::K: return make(Op::K, compile(f.arg()));
      case Op::M: return make(Op::M, compile(f.arg()));
      case Op::Exists:
      case Op::Forall:
        throw UnsupportedError("quantified formula must be grounded first: " + to_string(f));
    }
    return kBot;
  }

  std::vector<int> compile(const Theory& t) {
    std::vector<int> out;
    for (auto const& f : t) { out.push_back(compile(f)); }
    return out;
  }

  int lit(int atom, bool negated) {
    Node n{Op::Atom, -1, -1, atom, negated};
    return intern(n);
  }
  int make(Op op, int a, int b = -1) { return intern({op, a, b, -1, false}); }
  int dneg(int a) { return make(Op::Implies, kBot, a); }

  // Builders with constant folding (sound for both the belief and the
  // here-and-there semantics).
  int fold(Op op, int a, int b = -1) {
    switch (op) {
      case Op::And:
        if (a == kBot || b == kBot) { return kBot; }
        if (a == kTop) { return b; }
        if (b == kTop) { return a; }
        if (a == b) { return a; }
        break;
      case Op::Or:
        if (a == kTop || b == kTop) { return kTop; }
        if (a == kBot) { return b; }
        if (b == kBot) { return a; }
        if (a == b) { return a; }
        break;
      case Op::Implies:
        if (b == kBot || a == kTop) { return kTop; }
        if (b == kTop) { return a; }
        break;
      case Op::Neg:
        if (a == kTop) { return kBot; }
        if (a == kBot) { return kTop; }
        break;
      case Op::K:
      case Op::M:
        if (a == kTop || a == kBot) { return a; }
        break;
      default: break;
    }
    return make(op, a, b);
  }

  bool is_dneg(int n) const { return nodes_[n].op == Op::Implies && nodes_[n].a == kBot; }

  Formula decompile(int n) const {
    const Node& x = nodes_[n];
    switch (x.op) {
      case Op::Bot: return Formula::bot();
      case Op::Top: return Formula::top();
      case Op::Atom: return Formula::literal({sig_.atom(x.atom), x.negated});
      case Op::Neg: return Formula::strong_neg(decompile(x.a));
      case Op::And: return Formula::conj(decompile(x.a), decompile(x.b));
      case Op::Or: return Formula::disj(decompile(x.a), decompile(x.b));
      case Op::Implies: return Formula::implies(decompile(x.a), decompile(x.b));
      case Op::K: return Formula::k(decompile(x.a));
      case Op::M: return Formula::m(decompile(x.a));
      default: return Formula::bot();
    }
  }

  bool has_modality(int n) const {
    const Node& x = nodes_[n];
    if (x.op == Op::K || x.op == Op::M) { return true; }
    if (x.a >= 0 && has_modality(x.a)) { return true; }
    return x.b >= 0 && has_modality(x.b);
  }

  // Maximal K/M subformulas reachable from the roots, in first-visit order.
  std::vector<int> maximal_modal(const std::vector<int>& roots) const {
    std::vector<int> out;
    std::vector<char> seen(nodes_.size(), 0);
    std::vector<char> listed(nodes_.size(), 0);
    std::vector<int> stack(roots.rbegin(), roots.rend());
    while (!stack.empty()) {
      int n = stack.back();
      stack.pop_back();
      if (seen[n]) { continue; }
      seen[n] = 1;
      const Node& x = nodes_[n];
      if (x.op == Op::K || x.op == Op::M) {
        if (!listed[n]) {
          listed[n] = 1;
          out.push_back(n);
        }
        continue;
      }
      if (x.b >= 0) { stack.push_back(x.b); }
      if (x.a >= 0) { stack.push_back(x.a); }
    }
    return out;
  }

  void atoms_below(int n, std::vector<char>& out) const {
    const Node& x = nodes_[n];
    if (x.op == Op::Atom) { out[x.atom] = 1; }
    if (x.a >= 0) { atoms_below(x.a, out); }
    if (x.b >= 0) { atoms_below(x.b, out); }
  }

 private:
  int intern(const Node& n) {
    auto key = std::make_tuple(static_cast<int>(n.op), n.a, n.b, n.atom, n.negated);
    auto it = index_.find(key);
    if (it != index_.end()) { return it->second; }
    int id = static_cast<int>(nodes_.size());
    nodes_.push_back(n);
    index_.emplace(key, id);
    return id;
  }

  Signature sig_;
  std::vector<Node> nodes_;
  std::map<std::tuple<int, int, int, int, bool>, int> index_;
};

// Copies the cone of `n` from `src` into `dst` (same signature), replacing
// nodes by `subst[n]` (a node of src) where subst[n] >= 0, folding constants.
class Rebuilder {
 public:
  Rebuilder(const Circuit& src, Circuit& dst, const std::vector<int>& subst)
      : src_(src), dst_(dst), subst_(subst), memo_(src.size(), -1) {}

  int operator()(int n) {
    if (memo_[n] >= 0) { return memo_[n]; }
    int r;
    if (n < static_cast<int>(subst_.size()) && subst_[n] >= 0 && subst_[n] != n) {
      r = (*this)(subst_[n]);
    } else {
      const auto& x = src_.node(n);
      switch (x.op) {
        case Op::Bot: r = Circuit::kBot; break;
        case Op::Top: r = Circuit::kTop; break;
        case Op::Atom: r = dst_.lit(x.atom, x.negated); break;
        case Op::Neg:
        case Op::K:
        case Op::M: r = dst_.fold(x.op, (*this)(x.a)); break;
        default: {
          int a = (*this)(x.a);
          int b = (*this)(x.b);
          r = dst_.fold(x.op, a, b);
        }
      }
    }
    memo_[n] = r;
    return r;
  }

 private:
  const Circuit& src_;
  Circuit& dst_;
  const std::vector<int>& subst_;
  std::vector<int> memo_;
};

// Belief-interpretation semantics ⟨W,I⟩ (satisfaction and falsification).
class BeliefEval {
 public:
  BeliefEval(const Circuit& c, std::span<const Mask> w) : c_(c), w_(w) {}

  bool sat(int n, const Mask& i) const {
    const auto& x = c_.node(n);
    switch (x.op) {
      case Op::Bot: return false;
      case Op::Top: return true;
      case Op::Atom: return i.has(x.atom, x.negated);
      case Op::Neg: return fals(x.a, i);
      case Op::And: return sat(x.a, i) && sat(x.b, i);
      case Op::Or: return sat(x.a, i) || sat(x.b, i);
      case Op::Implies: return !sat(x.b, i) || sat(x.a, i);
      case Op::K:
        for (auto const& j : w_) {
          if (!sat(x.a, j)) { return false; }
        }
        return true;
      case Op::M:
        for (auto const& j : w_) {
          if (sat(x.a, j)) { return true; }
        }
        return false;
      default: return false;
    }
  }

  bool fals(int n, const Mask& i) const {
    const auto& x = c_.node(n);
    switch (x.op) {
      case Op::Bot: return true;
      case Op::Top: return false;
      case Op::Atom: return i.has(x.atom, !x.negated);
      case Op::Neg: return sat(x.a, i);
      case Op::And: return fals(x.a, i) || fals(x.b, i);
      case Op::Or: return fals(x.a, i) && fals(x.b, i);
      case Op::Implies: return fals(x.a, i) && sat(x.b, i);
      case Op::K:
        for (auto const& j : w_) {
          if (!fals(x.a, j)) { return false; }
        }
        return true;
      case Op::M:
        for (auto const& j : w_) {
          if (fals(x.a, j)) { return true; }
        }
        return false;
      default: return false;
    }
  }

  // Member-independent truth of a subjective node: W ⊨ n.
  bool holds(int n) const {
    for (auto const& j : w_) {
      if (!sat(n, j)) { return false; }
    }
    return true;
  }

 private:
  const Circuit& c_;
  std::span<const Mask> w_;
};

// Here-and-there semantics for objective circuits.
struct HTEval {
  const Circuit& c;

  bool sat(int n, const Mask& h, const Mask& t) const {
    const auto& x = c.node(n);
    switch (x.op) {
      case Op::Bot: return false;
      case Op::Top: return true;
      case Op::Atom: return h.has(x.atom, x.negated);
      case Op::Neg: return fals(x.a, h, t);
      case Op::And: return sat(x.a, h, t) && sat(x.b, h, t);
      case Op::Or: return sat(x.a, h, t) || sat(x.b, h, t);
      case Op::Implies:
        return (!sat(x.b, h, t) || sat(x.a, h, t)) && (!sat(x.b, t, t) || sat(x.a, t, t));
      default: throw UnsupportedError("modal operator in objective evaluation");
    }
  }

  bool fals(int n, const Mask& h, const Mask& t) const {
    const auto& x = c.node(n);
    switch (x.op) {
      case Op::Bot: return true;
      case Op::Top: return false;
      case Op::Atom: return h.has(x.atom, !x.negated);
      case Op::Neg: return sat(x.a, h, t);
      case Op::And: return fals(x.a, h, t) || fals(x.b, h, t);
      case Op::Or: return fals(x.a, h, t) && fals(x.b, h, t);
      case Op::Implies: return fals(x.a, h, t) && sat(x.b, t, t);
      default: throw UnsupportedError("modal operator in objective evaluation");
    }
  }

  bool model(const std::vector<int>& roots, const Mask& h, const Mask& t) const {
    for (int r : roots) {
      if (!sat(r, h, t)) { return false; }
    }
    return true;
  }
};

}  // namespace elp
