#pragma once

#include "elp/program.hpp"

namespace elp {

// not not not F  ↦  not F, exhaustively.
inline Formula simplify_triple_negation(const Formula& f) {
  return transform(f, [](const Formula& g) {
    Formula h = g;
    while (h.is_dneg() && h.body().is_dneg() && h.body().body().is_dneg()) {
      h = h.body().body();
    }
    return h;
  });
}

// M G ↦ not K not G (unless keep_m), followed by triple-negation
// simplification.  eNot never reaches the AST: the parser rewrites it.
inline Formula expand_modal_abbreviations(const Formula& f, bool keep_m = false) {
  if (keep_m) { return simplify_triple_negation(f); }
  Formula g = transform(f, [](const Formula& x) {
    if (x.is(Op::M)) { return Formula::dneg(Formula::k(Formula::dneg(x.arg()))); }
    return x;
  });
  return simplify_triple_negation(g);
}

inline Theory expand_modal_abbreviations(const Theory& t, bool keep_m = false) {
  Theory out;
  for (auto const& f : t) { out.push_back(expand_modal_abbreviations(f, keep_m)); }
  return out;
}

inline Theory simplify_triple_negation(const Theory& t) {
  Theory out;
  for (auto const& f : t) { out.push_back(simplify_triple_negation(f)); }
  return out;
}

// Program-level M expansion: not^d M l  ↦  not^(d+1) K not l.
inline SubjectiveLiteral expand_m(const SubjectiveLiteral& s) {
  if (s.modality == Modality::K) { return s; }
  SubjectiveLiteral out = s;
  out.modality = Modality::K;
  out.inner.depth += 1;
  out.depth += 1;
  return normalize(out);
}

inline Program expand_m(const Program& p) {
  Program out = p;
  for (auto& r : out.rules) {
    for (auto& l : r.body) {
      if (auto* s = std::get_if<SubjectiveLiteral>(&l)) { *s = expand_m(*s); }
    }
  }
  return out;
}

}  // namespace elp
