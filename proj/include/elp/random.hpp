#pragma once

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "elp/program.hpp"
#include "elp/splitting.hpp"

namespace elp {

struct RandomConfig {
  std::size_t atoms = 3;
  std::size_t max_rules = 4;
  std::size_t max_head = 2;
  std::size_t max_body = 2;
  bool strong_negation = false;
  bool modal = true;
  bool m_operator = true;
  bool negation = true;  // default negation in bodies and heads
};

namespace detail {

class Dice {
 public:
  explicit Dice(std::uint64_t seed) : rng_(seed) {}
  std::size_t below(std::size_t n) { return n == 0 ? 0 : static_cast<std::size_t>(rng_() % n); }
  bool chance(unsigned percent) { return below(100) < percent; }

 private:
  std::mt19937_64 rng_;
};

inline std::string atom_name(std::size_t k) {
  static const char* names[] = {"p", "q", "r", "s", "t", "u"};
  return k < 6 ? names[k] : "a" + std::to_string(k);
}

inline ExplicitLiteral random_literal(Dice& d, const RandomConfig& c) {
  ExplicitLiteral l{make_atom(atom_name(d.below(c.atoms))), false};
  if (c.strong_negation) { l.negated = d.chance(30); }
  return l;
}

inline int random_depth(Dice& d, const RandomConfig& c, unsigned one, unsigned two) {
  if (!c.negation) { return 0; }
  std::size_t x = d.below(100);
  if (x < two) { return 2; }
  if (x < two + one) { return 1; }
  return 0;
}

}  // namespace detail

// Reproducible: the same seed and configuration give the same program.
inline Program random_program(std::uint64_t seed, const RandomConfig& c = {}) {
  detail::Dice d(seed);
  Program p;
  std::size_t rules = 1 + d.below(c.max_rules);
  for (std::size_t k = 0; k < rules; ++k) {
    Rule r;
    std::size_t heads = d.chance(15) ? 0 : 1 + d.below(c.max_head);
    for (std::size_t h = 0; h < heads; ++h) {
      r.head.push_back(ObjectiveLiteral::of(detail::random_literal(d, c), detail::random_depth(d, c, 8, 4)));
    }
    std::size_t body = d.below(c.max_body + 1);
    for (std::size_t b = 0; b < body; ++b) {
      auto inner = ObjectiveLiteral::of(detail::random_literal(d, c));
      if (c.modal && d.chance(50)) {
        inner.depth = detail::random_depth(d, c, 10, 0);
        Modality m = c.m_operator && d.chance(35) ? Modality::M : Modality::K;
        r.body.emplace_back(SubjectiveLiteral{m, inner, detail::random_depth(d, c, 35, 10)});
      } else {
        inner.depth = detail::random_depth(d, c, 35, 10);
        r.body.emplace_back(inner);
      }
    }
    p.rules.push_back(std::move(r));
  }
  return canonical(std::move(p));
}

// A single subjective literal used as an integrity constraint.
inline Formula random_constraint(std::uint64_t seed, const RandomConfig& c = {}) {
  detail::Dice d(seed ^ 0x9e3779b97f4a7c15ULL);
  auto inner = ObjectiveLiteral::of(detail::random_literal(d, c));
  Modality m = c.m_operator && d.chance(35) ? Modality::M : Modality::K;
  return to_formula(SubjectiveLiteral{m, inner, detail::random_depth(d, c, 30, 10)});
}

// One splitting set of p picked by the seed.
inline std::set<Atom> random_splitting_set(std::uint64_t seed, const Program& p) {
  auto sets = find_splitting_sets(p);
  std::vector<std::set<Atom>> proper;
  std::size_t n = atoms_of(p).size();
  for (auto const& u : sets) {
    if (!u.empty() && u.size() < n) { proper.push_back(u); }
  }
  if (!proper.empty()) { sets = std::move(proper); }
  detail::Dice d(seed ^ 0x5851f42d4c957f2dULL);
  return sets[d.below(sets.size())];
}

}  // namespace elp
