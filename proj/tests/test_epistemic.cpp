#include <catch_amalgamated.hpp>

#include "elp/epistemic.hpp"
#include "elp/ground.hpp"
#include "elp/parser.hpp"
#include "formula_gen.hpp"

using namespace elp;

namespace {

std::string reduct(const char* prog, EpistemicInterpretation w, Program (*f)(const Program&, const EpistemicInterpretation&)) {
  return to_string(f(ground(parse_program(prog)), w));
}

}  // namespace

TEST_CASE("belief interpretation examples", "[epistemic]") {
  EpistemicInterpretation w{{"p"}, {"q"}};
  BeliefInterpretation bi{w, {"p"}};
  CHECK(bi_satisfies(bi, parse_formula("M p")));
  CHECK(bi_satisfies(bi, parse_formula("K (p | q)")));
  CHECK_FALSE(bi_satisfies(bi, parse_formula("K p")));
  // falsity needs explicit negation, not just failure
  CHECK_FALSE(bi_falsifies(bi, parse_formula("K p")));
  CHECK_FALSE(bi_falsifies(bi, parse_formula("K -p")));
  CHECK(bi_falsifies(bi, parse_formula("M -p")));
  CHECK(bi_falsifies({EpistemicInterpretation{{"-p"}}, {}}, parse_formula("K p")));
  CHECK(bi_satisfies(bi, parse_formula("p & not q")));
  CHECK(ei_satisfies(w, parse_formula("p | q")));
  CHECK_FALSE(ei_satisfies(w, parse_formula("p")));
  CHECK_THROWS_AS(bi_satisfies({EpistemicInterpretation{}, {}}, parse_formula("K p")), Error);
}

TEST_CASE("coherence and modal duality", "[epistemic][property]") {
  auto is = testgen::interpretations(2);
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    testgen::FormulaGen gen(seed, 2, true);
    Formula f = gen(3);
    std::vector<Interpretation> sets;
    for (std::size_t k = 0; k < is.size(); ++k) {
      if ((seed >> (k % 8)) & 1 || k == seed % is.size()) { sets.push_back(is[k]); }
    }
    EpistemicInterpretation w(sets);
    INFO(to_string(f) << " in " << to_string(w));
    // M is falsified by a single world, so only M-free formulas are coherent
    bool has_m = to_string(f).find('M') != std::string::npos;
    for (auto const& h : is) {
      BeliefInterpretation bi{w, h};
      if (!has_m) { CHECK_FALSE((bi_satisfies(bi, f) && bi_falsifies(bi, f))); }
      CHECK(bi_satisfies(bi, Formula::m(f)) == bi_satisfies(bi, Formula::dneg(Formula::k(Formula::dneg(f)))));
      CHECK(bi_satisfies(bi, Formula::k(f)) == ei_satisfies(w, f));
    }
  }
}

TEST_CASE("M can be satisfied and falsified at once", "[epistemic]") {
  BeliefInterpretation bi{EpistemicInterpretation{{"q"}, {"-q"}}, {}};
  CHECK(bi_satisfies(bi, parse_formula("M q")));
  CHECK(bi_falsifies(bi, parse_formula("M q")));
  CHECK_FALSE(bi_falsifies(bi, parse_formula("K q")));
}

TEST_CASE("g94 reduct", "[epistemic]") {
  Theory t{parse_formula("p <- K q"), parse_formula("q | r"), parse_formula("s <- not M r")};
  EpistemicInterpretation w{{"q"}, {"r"}};
  std::vector<std::string> got;
  for (auto const& f : g94_reduct(t, w)) { got.push_back(to_string(f)); }
  CHECK(got == std::vector<std::string>{"p <- #false", "q | r", "s <- not #true"});
  CHECK(maximal_subjective_subformulas(t).size() == 2);
}

TEST_CASE("subjective reduct keeps outer negations", "[epistemic]") {
  Program p = ground(parse_program("a :- K b. c :- not K b. d :- not not M e. b."));
  EpistemicInterpretation w{{"b"}};
  CHECK(to_string(subjective_reduct(p, w)) == "a :- #true.\nb.\nc :- not #true.\nd :- not not #false.\n");
  Program part = subjective_reduct_sig(p, w, {make_atom("e")});
  CHECK(to_string(part) == "a :- K b.\nb.\nc :- not K b.\nd :- not not #false.\n");
}

TEST_CASE("g11 and k15 reducts", "[epistemic]") {
  EpistemicInterpretation w{{"p"}, {"q"}};
  CHECK(reduct("a :- K p. b :- not K p. c :- M q.", w, g11_reduct) == "a :- #false.\nb :- #true.\nc :- #true.\n");
  CHECK(reduct("a :- K p. b :- not K p. c :- M q.", w, k15_reduct) == "a :- #false.\nb :- not #false.\nc :- not #false.\n");
  EpistemicInterpretation wp{{"p"}};
  CHECK(reduct("a :- K p. b :- not K p.", wp, g11_reduct) == "a :- p.\nb :- #false.\n");
  CHECK(reduct("a :- K p. b :- not K p.", wp, k15_reduct) == "a :- p.\nb :- not p.\n");
}
