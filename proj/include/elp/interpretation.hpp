#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "elp/syntax.hpp"

namespace elp {

// A consistent set of ground explicit literals, kept sorted.
class Interpretation {
 public:
  Interpretation() = default;
  Interpretation(std::initializer_list<const char*> lits) {
    for (auto const* s : lits) { lits_.push_back(make_literal(s)); }
    finish();
  }
  explicit Interpretation(std::vector<ExplicitLiteral> lits) : lits_(std::move(lits)) { finish(); }

  const std::vector<ExplicitLiteral>& literals() const { return lits_; }
  bool contains(const ExplicitLiteral& l) const {
    return std::binary_search(lits_.begin(), lits_.end(), l);
  }
  std::size_t size() const { return lits_.size(); }
  bool empty() const { return lits_.empty(); }
  bool subset_of(const Interpretation& o) const {
    return std::includes(o.lits_.begin(), o.lits_.end(), lits_.begin(), lits_.end());
  }
  Interpretation restrict(const std::set<Atom>& atoms) const {
    std::vector<ExplicitLiteral> out;
    for (auto const& l : lits_) {
      if (atoms.count(l.atom)) { out.push_back(l); }
    }
    return Interpretation(std::move(out));
  }
  Interpretation united(const Interpretation& o) const {
    std::vector<ExplicitLiteral> out(lits_);
    out.insert(out.end(), o.lits_.begin(), o.lits_.end());
    return Interpretation(std::move(out));
  }

  auto operator<=>(const Interpretation&) const = default;
  bool operator==(const Interpretation&) const = default;

 private:
  void finish() {
    std::sort(lits_.begin(), lits_.end());
    lits_.erase(std::unique(lits_.begin(), lits_.end()), lits_.end());
    for (std::size_t i = 0; i + 1 < lits_.size(); ++i) {
      if (lits_[i].atom == lits_[i + 1].atom) {
        throw Error("inconsistent interpretation: contains both " + to_string(lits_[i].atom) +
                    " and its explicit negation");
      }
    }
  }

  std::vector<ExplicitLiteral> lits_;
};

inline std::string to_string(const Interpretation& i) {
  std::string out = "{";
  for (std::size_t k = 0; k < i.literals().size(); ++k) {
    if (k) { out += ", "; }
    out += to_string(i.literals()[k]);
  }
  return out + "}";
}

// Non-empty set of interpretations, kept sorted.
class EpistemicInterpretation {
 public:
  EpistemicInterpretation() = default;
  EpistemicInterpretation(std::initializer_list<Interpretation> sets) : sets_(sets) { finish(); }
  explicit EpistemicInterpretation(std::vector<Interpretation> sets) : sets_(std::move(sets)) {
    finish();
  }

  const std::vector<Interpretation>& belief_sets() const { return sets_; }
  std::size_t size() const { return sets_.size(); }
  bool contains(const Interpretation& i) const {
    return std::binary_search(sets_.begin(), sets_.end(), i);
  }
  bool subset_of(const EpistemicInterpretation& o) const {
    return std::includes(o.sets_.begin(), o.sets_.end(), sets_.begin(), sets_.end());
  }
  EpistemicInterpretation restrict(const std::set<Atom>& atoms) const {
    std::vector<Interpretation> out;
    for (auto const& i : sets_) { out.push_back(i.restrict(atoms)); }
    return EpistemicInterpretation(std::move(out));
  }

  auto operator<=>(const EpistemicInterpretation&) const = default;
  bool operator==(const EpistemicInterpretation&) const = default;

 private:
  void finish() {
    std::sort(sets_.begin(), sets_.end());
    sets_.erase(std::unique(sets_.begin(), sets_.end()), sets_.end());
  }

  std::vector<Interpretation> sets_;
};

inline std::string to_string(const EpistemicInterpretation& w) {
  std::string out = "[";
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) { out += ", "; }
    out += to_string(w.belief_sets()[k]);
  }
  return out + "]";
}

using WorldViews = std::vector<EpistemicInterpretation>;

inline WorldViews canonical(WorldViews w) {
  std::sort(w.begin(), w.end());
  w.erase(std::unique(w.begin(), w.end()), w.end());
  return w;
}

inline WorldViews restrict(const WorldViews& ws, const std::set<Atom>& atoms) {
  WorldViews out;
  for (auto const& w : ws) { out.push_back(w.restrict(atoms)); }
  return canonical(std::move(out));
}

inline std::string to_string(const WorldViews& ws) {
  std::string out = "{";
  for (std::size_t k = 0; k < ws.size(); ++k) {
    if (k) { out += ", "; }
    out += to_string(ws[k]);
  }
  return out + "}";
}

// Bitmask machinery used by the engines.  Literal sets over at most 64 atoms.
struct Mask {
  std::uint64_t pos = 0;
  std::uint64_t neg = 0;

  bool has(int atom, bool negated) const {
    return ((negated ? neg : pos) >> atom) & 1u;
  }
  void set(int atom, bool negated) { (negated ? neg : pos) |= std::uint64_t{1} << atom; }
  void clear(int atom, bool negated) { (negated ? neg : pos) &= ~(std::uint64_t{1} << atom); }
  bool consistent() const { return (pos & neg) == 0; }
  bool empty() const { return pos == 0 && neg == 0; }
  bool subset_of(const Mask& o) const { return (pos & ~o.pos) == 0 && (neg & ~o.neg) == 0; }
  bool intersects(const Mask& o) const { return (pos & o.pos) != 0 || (neg & o.neg) != 0; }
  int count() const { return std::popcount(pos) + std::popcount(neg); }
  Mask operator|(const Mask& o) const { return {pos | o.pos, neg | o.neg}; }
  Mask operator&(const Mask& o) const { return {pos & o.pos, neg & o.neg}; }
  Mask minus(const Mask& o) const { return {pos & ~o.pos, neg & ~o.neg}; }

  auto operator<=>(const Mask&) const = default;
  bool operator==(const Mask&) const = default;
};

// Literal ids: 2*atom + negated.
inline int lit_id(int atom, bool negated) { return 2 * atom + (negated ? 1 : 0); }
inline Mask lit_mask(int id) {
  Mask m;
  m.set(id / 2, id % 2 == 1);
  return m;
}

class Signature {
 public:
  static constexpr std::size_t kMaxAtoms = 64;

  Signature() = default;
  explicit Signature(const std::set<Atom>& atoms) {
    for (auto const& a : atoms) { intern(a); }
  }

  int intern(const Atom& a) {
    auto it = index_.find(a);
    if (it != index_.end()) { return it->second; }
    if (atoms_.size() >= kMaxAtoms) {
      throw CapExceeded("more than 64 ground atoms in one search");
    }
    int id = static_cast<int>(atoms_.size());
    atoms_.push_back(a);
    index_.emplace(a, id);
    return id;
  }
  std::optional<int> find(const Atom& a) const {
    auto it = index_.find(a);
    if (it == index_.end()) { return std::nullopt; }
    return it->second;
  }
  const Atom& atom(int i) const { return atoms_[i]; }
  std::size_t size() const { return atoms_.size(); }
  const std::vector<Atom>& atoms() const { return atoms_; }
  std::set<Atom> atom_set() const { return {atoms_.begin(), atoms_.end()}; }

  Mask all() const {
    std::uint64_t m = atoms_.size() >= 64 ? ~std::uint64_t{0}
                                          : (std::uint64_t{1} << atoms_.size()) - 1;
    return {m, m};
  }

  Interpretation decode(const Mask& m) const {
    std::vector<ExplicitLiteral> out;
    for (std::size_t i = 0; i < atoms_.size(); ++i) {
      if (m.has(static_cast<int>(i), false)) { out.push_back({atoms_[i], false}); }
      if (m.has(static_cast<int>(i), true)) { out.push_back({atoms_[i], true}); }
    }
    return Interpretation(std::move(out));
  }
  // Literals over atoms outside the signature are dropped.
  Mask encode(const Interpretation& in) const {
    Mask m;
    for (auto const& l : in.literals()) {
      if (auto id = find(l.atom)) { m.set(*id, l.negated); }
    }
    return m;
  }
  bool covers(const Interpretation& in) const {
    for (auto const& l : in.literals()) {
      if (!find(l.atom)) { return false; }
    }
    return true;
  }
  EpistemicInterpretation decode(const std::vector<Mask>& w) const {
    std::vector<Interpretation> out;
    for (auto const& m : w) { out.push_back(decode(m)); }
    return EpistemicInterpretation(std::move(out));
  }
  std::vector<Mask> encode(const EpistemicInterpretation& w) const {
    std::vector<Mask> out;
    for (auto const& i : w.belief_sets()) { out.push_back(encode(i)); }
    return out;
  }

 private:
  std::vector<Atom> atoms_;
  std::map<Atom, int> index_;
};

// All consistent literal sets over the first n atoms of a signature (3^n).
template <class Fn>
void for_each_interpretation(std::size_t n, Fn&& fn) {
  std::vector<int> digit(n, 0);
  for (;;) {
    Mask m;
    for (std::size_t i = 0; i < n; ++i) {
      if (digit[i] == 1) { m.set(static_cast<int>(i), false); }
      if (digit[i] == 2) { m.set(static_cast<int>(i), true); }
    }
    fn(m);
    std::size_t i = 0;
    while (i < n && digit[i] == 2) { digit[i++] = 0; }
    if (i == n) { return; }
    ++digit[i];
  }
}

}  // namespace elp
