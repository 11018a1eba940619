#pragma once

#include <string>

#include "elp/solve.hpp"

namespace elp {

enum class Property { ConstraintMonotonicity, Splitting, Foundedness, SupraAsp, SupraS5 };
enum class Verdict { HoldsOnInstance, Counterexample };

inline std::string to_string(Property p) {
  switch (p) {
    case Property::ConstraintMonotonicity: return "constraint-monotonicity";
    case Property::Splitting: return "splitting";
    case Property::Foundedness: return "foundedness";
    case Property::SupraAsp: return "supra-asp";
    case Property::SupraS5: return "supra-s5";
  }
  return "?";
}

inline std::string to_string(Verdict v) {
  return v == Verdict::HoldsOnInstance ? "holds-on-instance" : "counterexample";
}

// Outcome of one per-instance property check.  `left` and `right` are the
// two sides that were compared; `witness` describes a counterexample.
struct PropertyReport {
  Property property = Property::Splitting;
  Semantics semantics = Semantics::G94;
  Verdict verdict = Verdict::HoldsOnInstance;
  std::string instance;
  WorldViews left;
  WorldViews right;
  std::string witness;

  bool holds() const { return verdict == Verdict::HoldsOnInstance; }
};

inline std::string to_string(const PropertyReport& r) {
  std::string out = to_string(r.property) + " " + to_string(r.semantics) + ": " + to_string(r.verdict);
  if (!r.holds()) { out += " (" + r.witness + ")"; }
  return out;
}

}  // namespace elp
