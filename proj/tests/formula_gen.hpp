#pragma once

#include <random>
#include <string>
#include <vector>

#include "elp/syntax.hpp"

// Random ground formulas for the property tests.
namespace testgen {

class FormulaGen {
 public:
  FormulaGen(std::uint64_t seed, std::size_t atoms, bool modal) : rng_(seed), atoms_(atoms), modal_(modal) {}

  elp::Formula operator()(int depth = 3) {
    std::size_t pick = below(depth <= 0 ? 3 : (modal_ ? 10 : 8));
    switch (pick) {
      case 0:
      case 1: return elp::Formula::atom(elp::make_atom(std::string(1, static_cast<char>('p' + below(atoms_)))));
      case 2: return below(2) ? elp::Formula::top() : elp::Formula::bot();
      case 3: return elp::Formula::strong_neg((*this)(depth - 1));
      case 4: return elp::Formula::conj((*this)(depth - 1), (*this)(depth - 1));
      case 5: return elp::Formula::disj((*this)(depth - 1), (*this)(depth - 1));
      case 6: return elp::Formula::implies((*this)(depth - 1), (*this)(depth - 1));
      case 7: return elp::Formula::dneg((*this)(depth - 1));
      case 8: return elp::Formula::k((*this)(depth - 1));
      default: return elp::Formula::m((*this)(depth - 1));
    }
  }

 private:
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(rng_() % n); }

  std::mt19937_64 rng_;
  std::size_t atoms_;
  bool modal_;
};

// Every consistent interpretation over the first n of p, q, r, ...
inline std::vector<elp::Interpretation> interpretations(std::size_t n) {
  std::vector<elp::Interpretation> out{elp::Interpretation{}};
  for (std::size_t k = 0; k < n; ++k) {
    std::string a(1, static_cast<char>('p' + k));
    std::string na = "-" + a;
    std::vector<elp::Interpretation> next;
    for (auto const& i : out) {
      next.push_back(i);
      next.push_back(i.united(elp::Interpretation{a.c_str()}));
      next.push_back(i.united(elp::Interpretation{na.c_str()}));
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace testgen
