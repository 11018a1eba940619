#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "elp/semantics.hpp"
#include "elp/translate.hpp"

namespace elp {

struct UnfoundedPair {
  std::set<ExplicitLiteral> x;
  Interpretation i;

  auto operator<=>(const UnfoundedPair&) const = default;
  bool operator==(const UnfoundedPair&) const = default;
};

struct UnfoundedSet {
  std::vector<UnfoundedPair> pairs;  // sorted
};

inline std::string to_string(const UnfoundedSet& u) {
  std::string out = "{";
  for (std::size_t k = 0; k < u.pairs.size(); ++k) {
    if (k) { out += ", "; }
    out += "<{";
    std::size_t j = 0;
    for (auto const& l : u.pairs[k].x) { out += (j++ ? ", " : "") + to_string(l); }
    out += "}, " + to_string(u.pairs[k].i) + ">";
  }
  return out + "}";
}

namespace detail {

// Program and world view compiled for justification checks.
class Justification {
 public:
  struct RuleInfo {
    Mask head;                   // depth-0 head literals
    Mask head_in;                // "not l" in the head: needs l ∈ I to justify
    Mask head_out;               // "not not l" in the head: needs l ∉ I
    bool head_top = false;
    Mask bodyrp;
    Mask bodymp;
    std::vector<char> body_sat;  // per belief set
  };

  // With m_positive, M l is kept and counts as a positive subjective
  // literal; otherwise M is rewritten to not K not first.
  Justification(const Program& program, const EpistemicInterpretation& wv,
                const std::set<ExplicitLiteral>& excluded, bool m_positive = false) {
    Program p = m_positive ? program : expand_m(program);
    std::set<Atom> atoms = atoms_of(p);
    for (auto const& i : wv.belief_sets()) {
      for (auto const& l : i.literals()) { atoms.insert(l.atom); }
    }
    circuit_ = Circuit(Signature(atoms));
    const Signature& sig = circuit_.signature();
    w_ = sig.encode(wv);
    BeliefEval ev(circuit_, w_);
    auto enc = [&](const ExplicitLiteral& l) { return lit_mask(lit_id(*sig.find(l.atom), l.negated)); };
    for (auto const& l : literals_of(p)) {
      if (!excluded.count(l)) { lits_.push_back(enc(l)); }
    }
    for (auto const& r : p.rules) {
      RuleInfo info;
      for (auto const& h : r.head) {
        if (h.core == ObjectiveLiteral::Core::True) { info.head_top = true; }
        if (h.is_constant()) { continue; }
        Mask m = enc(h.lit);
        if (h.depth == 0) { info.head = info.head | m; }
        else if (h.depth == 1) { info.head_in = info.head_in | m; }
        else { info.head_out = info.head_out | m; }
      }
      for (auto const& l : bodyrp(r)) { info.bodyrp = info.bodyrp | enc(l); }
      for (auto const& l : bodymp(r)) { info.bodymp = info.bodymp | enc(l); }
      int body = circuit_.compile(body_formula(r));
      for (auto const& i : w_) { info.body_sat.push_back(ev.sat(body, i)); }
      rules_.push_back(std::move(info));
    }
  }

  const std::vector<Mask>& literals() const { return lits_; }
  const std::vector<Mask>& world() const { return w_; }
  const Signature& signature() const { return circuit_.signature(); }

  // Some rule justifies ⟨X, W[i]⟩ given the union U of all X' in the set.
  bool justified(const Mask& x, std::size_t i, const Mask& u) const {
    const Mask& in = w_[i];
    for (auto const& r : rules_) {
      if (!r.head.intersects(x)) { continue; }
      if (!r.body_sat[i]) { continue; }
      if (r.bodyrp.intersects(x)) { continue; }
      if (r.head.minus(x).intersects(in)) { continue; }
      if (r.head_top || !r.head_in.subset_of(in) || r.head_out.intersects(in)) { continue; }
      if (r.bodymp.intersects(u)) { continue; }
      return true;
    }
    return false;
  }

  UnfoundedPair decode(const Mask& x, std::size_t i) const {
    UnfoundedPair p;
    const Signature& sig = circuit_.signature();
    for (std::size_t a = 0; a < sig.size(); ++a) {
      if (x.has(static_cast<int>(a), false)) { p.x.insert({sig.atom(static_cast<int>(a)), false}); }
      if (x.has(static_cast<int>(a), true)) { p.x.insert({sig.atom(static_cast<int>(a)), true}); }
    }
    p.i = sig.decode(w_[i]);
    return p;
  }

 private:
  Circuit circuit_;
  std::vector<Mask> w_;
  std::vector<Mask> lits_;
  std::vector<RuleInfo> rules_;
};

class SubsetMasks {
 public:
  explicit SubsetMasks(const std::vector<Mask>& lits) : n_(lits.size()) {
    lo_bits_ = n_ / 2;
    lo_.assign(std::size_t{1} << lo_bits_, Mask{});
    hi_.assign(std::size_t{1} << (n_ - lo_bits_), Mask{});
    for (std::size_t s = 1; s < lo_.size(); ++s) {
      std::size_t b = static_cast<std::size_t>(std::countr_zero(s));
      lo_[s] = lo_[s & (s - 1)] | lits[b];
    }
    for (std::size_t s = 1; s < hi_.size(); ++s) {
      std::size_t b = static_cast<std::size_t>(std::countr_zero(s));
      hi_[s] = hi_[s & (s - 1)] | lits[lo_bits_ + b];
    }
  }
  Mask operator()(std::uint64_t s) const {
    return lo_[s & ((std::uint64_t{1} << lo_bits_) - 1)] | hi_[s >> lo_bits_];
  }
  std::uint64_t count() const { return std::uint64_t{1} << n_; }

 private:
  std::size_t n_;
  std::size_t lo_bits_;
  std::vector<Mask> lo_;
  std::vector<Mask> hi_;
};

inline std::set<ExplicitLiteral> kem_covered(const Theory& extra) {
  std::set<ExplicitLiteral> out;
  for (auto const& f : extra) {
    if (auto l = kem_literal(f)) { out.insert(*l); }
  }
  return out;
}

inline std::optional<UnfoundedSet> unfounded_gfp(const Justification& j, const Limits& limits) {
  const auto& w = j.world();
  std::size_t n = j.literals().size();
  if (n > 40 || (std::uint64_t{1} << n) * w.size() > limits.max_unfounded_pairs) {
    throw CapExceeded("unfounded-set candidate universe of " + std::to_string(n) + " literals x " +
                      std::to_string(w.size()) + " belief sets exceeds the cap");
  }
  SubsetMasks sub(j.literals());
  std::uint64_t total = sub.count();
  std::vector<std::vector<char>> alive(w.size(), std::vector<char>(total, 0));
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::uint64_t s = 1; s < total; ++s) {
      if (sub(s).intersects(w[i])) { alive[i][s] = 1; }
    }
  }
  bool changed = true;
  while (changed) {
    changed = false;
    Mask u;
    for (std::size_t i = 0; i < w.size(); ++i) {
      for (std::uint64_t s = 1; s < total; ++s) {
        if (alive[i][s]) { u = u | sub(s); }
      }
    }
    for (std::size_t i = 0; i < w.size(); ++i) {
      for (std::uint64_t s = 1; s < total; ++s) {
        if (alive[i][s] && j.justified(sub(s), i, u)) {
          alive[i][s] = 0;
          changed = true;
        }
      }
    }
  }
  UnfoundedSet out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::uint64_t s = 1; s < total; ++s) {
      if (alive[i][s]) { out.pairs.push_back(j.decode(sub(s), i)); }
    }
  }
  if (out.pairs.empty()) { return std::nullopt; }
  std::sort(out.pairs.begin(), out.pairs.end());
  return out;
}

}  // namespace detail

// Greatest unfounded set among the pairs ⟨X,I⟩ with I ∈ W, X ∩ I ≠ ∅;
// nullopt when W is founded.  Literals covered by K(ℓ ∨ not ℓ) axioms in
// `kem` never enter X.
inline std::optional<UnfoundedSet> find_unfounded_set(const Program& p, const EpistemicInterpretation& wv,
                                                      const Limits& limits = {},
                                                      const Theory& kem = {}, bool m_positive = false) {
  if (!is_ground(p)) { throw UnsupportedError("program must be grounded first"); }
  detail::Justification j(p, wv, detail::kem_covered(kem), m_positive);
  return detail::unfounded_gfp(j, limits);
}

// Independent check by enumerating the union S of the X components: W is
// unfounded iff for some S the pairs ⟨X,I⟩ with X ⊆ S that no rule justifies
// w.r.t. S cover S exactly.  Works on the rule syntax directly.
inline bool is_unfounded_raw(const Program& program, const EpistemicInterpretation& wv,
                             std::size_t max_literals = 8) {
  Program p = expand_m(program);
  const auto universe = literals_of(p);
  std::vector<ExplicitLiteral> lits(universe.begin(), universe.end());
  if (lits.size() > max_literals) { throw CapExceeded("raw unfounded-set oracle limited to few literals"); }
  auto bits_of = [&](const std::set<ExplicitLiteral>& xs) {
    std::uint32_t b = 0;
    for (std::size_t k = 0; k < lits.size(); ++k) {
      if (xs.count(lits[k])) { b |= 1u << k; }
    }
    return b;
  };
  const auto& sets = wv.belief_sets();
  struct R {
    std::uint32_t head = 0;                       // depth-0 head literals
    std::vector<std::pair<std::uint32_t, bool>> others;  // head literal bits (0 if none), false in I
    std::uint32_t pos = 0;
    std::uint32_t modal = 0;
    std::vector<char> body;
    std::vector<std::vector<char>> head_false;    // per belief set, per head literal
  };
  std::vector<R> rules;
  std::vector<std::uint32_t> in(sets.size());
  for (std::size_t i = 0; i < sets.size(); ++i) {
    in[i] = bits_of({sets[i].literals().begin(), sets[i].literals().end()});
  }
  for (auto const& r : p.rules) {
    R x;
    for (auto const& h : r.head) {
      if (h.depth == 0 && !h.is_constant()) { x.head |= bits_of({h.lit}); }
    }
    x.pos = bits_of(bodyrp(r));
    x.modal = bits_of(bodymp(r));
    for (auto const& i : sets) {
      BeliefInterpretation bi{wv, i};
      x.body.push_back(bi_satisfies(bi, body_formula(r)));
      std::vector<char> hf;
      for (auto const& h : r.head) { hf.push_back(!bi_satisfies(bi, to_formula(h))); }
      x.head_false.push_back(std::move(hf));
    }
    for (auto const& h : r.head) {
      x.others.push_back({h.depth == 0 && !h.is_constant() ? bits_of({h.lit}) : 0u, false});
    }
    rules.push_back(std::move(x));
  }
  auto justified = [&](std::uint32_t x, std::size_t i, std::uint32_t s) {
    for (auto const& r : rules) {
      if (!(r.head & x) || !r.body[i] || (r.pos & x) || (r.modal & s)) { continue; }
      bool rest = true;
      for (std::size_t k = 0; k < r.others.size() && rest; ++k) {
        std::uint32_t b = r.others[k].first;
        if (b && (b & x)) { continue; }
        if (!r.head_false[i][k]) { rest = false; }
      }
      if (rest) { return true; }
    }
    return false;
  };
  std::uint32_t all = lits.empty() ? 0u : static_cast<std::uint32_t>((std::uint64_t{1} << lits.size()) - 1);
  for (std::uint32_t s = 1; s <= all && s != 0; ++s) {
    std::uint32_t cover = 0;
    for (std::size_t i = 0; i < sets.size(); ++i) {
      for (std::uint32_t x = s; x; x = (x - 1) & s) {
        if ((x & in[i]) && !justified(x, i, s)) { cover |= x; }
      }
    }
    if (cover == s) { return true; }
  }
  return false;
}

// Checks the witness conditions of an unfounded set from scratch.
inline bool verify_unfounded_set(const Program& p, const EpistemicInterpretation& wv, const UnfoundedSet& u) {
  if (u.pairs.empty()) { return false; }
  detail::Justification j(p, wv, {});
  const Signature& sig = j.signature();
  auto enc = [&](const std::set<ExplicitLiteral>& x) {
    Mask m;
    for (auto const& l : x) {
      auto id = sig.find(l.atom);
      if (!id) { return std::optional<Mask>{}; }
      m.set(*id, l.negated);
    }
    return std::optional<Mask>{m};
  };
  Mask un;
  for (auto const& pr : u.pairs) {
    auto m = enc(pr.x);
    if (!m) { return false; }
    un = un | *m;
  }
  for (auto const& pr : u.pairs) {
    if (pr.x.empty() || !wv.contains(pr.i)) { return false; }
    auto it = std::find(wv.belief_sets().begin(), wv.belief_sets().end(), pr.i);
    std::size_t idx = static_cast<std::size_t>(it - wv.belief_sets().begin());
    Mask x = *enc(pr.x);
    if (!x.intersects(j.world()[idx])) { return false; }
    if (j.justified(x, idx, un)) { return false; }
  }
  return true;
}

inline WorldViews c19_world_views(const Program& p, const Limits& limits = {}, bool m_positive = false) {
  WorldViews out;
  for (auto const& w : g94_world_views(p, limits)) {
    if (!find_unfounded_set(p, w, limits, {}, m_positive)) { out.push_back(w); }
  }
  return out;
}

// Theories accepted by the founded characterization: rule-shaped sentences
// plus K(ℓ ∨ not ℓ) axioms.
inline WorldViews c19_world_views(const Theory& t, const Limits& limits = {}) {
  Program p;
  Theory kem;
  for (auto const& f : t) {
    if (kem_literal(f)) {
      kem.push_back(f);
    } else if (auto r = as_rule(f)) {
      p.rules.push_back(*r);
    } else {
      throw UnsupportedError("C19 is computed for programs plus K(l | not l) axioms only: " + to_string(f));
    }
  }
  WorldViews out;
  for (auto const& w : g94_world_views(t, limits)) {
    if (!find_unfounded_set(p, w, limits, kem)) { out.push_back(w); }
  }
  return out;
}

inline WorldViews fk15_world_views(const Program& p, const Limits& limits = {}) {
  // M stays primitive so that M K l remains a positive subjective literal.
  Program n = normalize_to_program(translate_k(program_to_theory(p), true));
  return restrict(c19_world_views(n, limits, true), atoms_of(p));
}

}  // namespace elp
