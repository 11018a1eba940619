#pragma once

#include <optional>
#include <string>
#include <vector>

#include "elp/f15.hpp"
#include "elp/founded.hpp"
#include "elp/parser.hpp"

namespace elp {

enum class Semantics { G94, G11, K15, S16, C19, F15, FK15, M85, S92 };

inline const std::vector<Semantics>& all_semantics() {
  static const std::vector<Semantics> v{Semantics::G94, Semantics::G11, Semantics::K15,
                                        Semantics::S16, Semantics::C19, Semantics::F15,
                                        Semantics::FK15, Semantics::M85, Semantics::S92};
  return v;
}

// The six world-view semantics of the property table.
inline const std::vector<Semantics>& table_semantics() {
  static const std::vector<Semantics> v{Semantics::G94, Semantics::G11, Semantics::F15,
                                        Semantics::K15, Semantics::S16, Semantics::C19};
  return v;
}

inline std::string to_string(Semantics s) {
  switch (s) {
    case Semantics::G94: return "g94";
    case Semantics::G11: return "g11";
    case Semantics::K15: return "k15";
    case Semantics::S16: return "s16";
    case Semantics::C19: return "c19";
    case Semantics::F15: return "f15";
    case Semantics::FK15: return "fk15";
    case Semantics::M85: return "m85";
    case Semantics::S92: return "s92";
  }
  return "?";
}

inline std::optional<Semantics> parse_semantics(std::string s) {
  for (auto& c : s) { c = static_cast<char>(std::tolower(static_cast<unsigned char>(c))); }
  for (auto x : all_semantics()) {
    if (to_string(x) == s) { return x; }
  }
  return std::nullopt;
}

inline WorldViews s92_world_views(const Theory& t, const Limits& limits = {}) {
  return m85_world_views(translate_b(t), limits);
}

// K15 for theories that are not programs: the G94 world views of Γ^B.
inline WorldViews k15_world_views(const Theory& t, const Limits& limits = {}) {
  if (auto p = theory_to_program(t)) { return k15_world_views(*p, limits); }
  return g94_world_views(translate_b(t), limits);
}

inline WorldViews world_views(const Program& p, Semantics s, const Limits& limits = {}) {
  switch (s) {
    case Semantics::G94: return g94_world_views(p, limits);
    case Semantics::G11: return g11_world_views(p, limits);
    case Semantics::K15: return k15_world_views(p, limits);
    case Semantics::S16: return s16_world_views(p, limits);
    case Semantics::C19: return c19_world_views(p, limits);
    case Semantics::F15: return f15_world_views(program_to_theory(p), limits);
    case Semantics::FK15: return fk15_world_views(p, limits);
    case Semantics::M85: return m85_world_views(program_to_theory(p), limits);
    case Semantics::S92: return s92_world_views(program_to_theory(p), limits);
  }
  return {};
}

inline WorldViews world_views(const Theory& t, Semantics s, const Limits& limits = {}) {
  switch (s) {
    case Semantics::G94: return g94_world_views(t, limits);
    case Semantics::K15: return k15_world_views(t, limits);
    case Semantics::C19: return c19_world_views(t, limits);
    case Semantics::F15: return f15_world_views(t, limits);
    case Semantics::M85: return m85_world_views(t, limits);
    case Semantics::S92: return s92_world_views(t, limits);
    default: break;
  }
  auto p = theory_to_program(t);
  if (!p) { throw UnsupportedError(to_string(s) + " is defined for programs only"); }
  return world_views(*p, s, limits);
}

struct EpistemicSpecificationInput {
  Theory theory;
  Theory constraints;
  std::set<std::string> constants;
};

inline EpistemicSpecificationInput specification(const Document& d) {
  EpistemicSpecificationInput in;
  in.theory = program_to_theory(d.program);
  in.theory.insert(in.theory.end(), d.formulas.begin(), d.formulas.end());
  in.constraints = d.constraints;
  in.constants = d.program.constants;
  return in;
}

// World views of the theory that satisfy every subjective constraint.
inline WorldViews solve_specification(const EpistemicSpecificationInput& in, Semantics s,
                                      const Limits& limits = {}) {
  std::set<std::string> consts = in.constants;
  for (auto const& c : constants_of(in.theory)) { consts.insert(c); }
  for (auto const& c : constants_of(in.constraints)) { consts.insert(c); }
  Theory constraints = ground(in.constraints, consts);
  for (auto const& c : constraints) {
    if (!is_subjective(c)) { throw UnsupportedError("constraint is not subjective: " + to_string(c)); }
  }
  Theory t = ground(in.theory, consts);
  WorldViews out;
  for (auto const& w : world_views(t, s, limits)) {
    if (ei_satisfies(w, constraints)) { out.push_back(w); }
  }
  return out;
}

}  // namespace elp
