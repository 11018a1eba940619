#include <catch_amalgamated.hpp>

#include "elp/ht.hpp"
#include "elp/random.hpp"
#include "elp/rewrite.hpp"
#include "formula_gen.hpp"

using namespace elp;

TEST_CASE("parse single rules", "[syntax]") {
  Program p = parse_program("p :- K p.");
  REQUIRE(p.rules.size() == 1);
  CHECK(to_string(p.rules[0]) == "p :- K p.");
  CHECK(p.rules[0].head.size() == 1);
  REQUIRE(p.rules[0].body.size() == 1);
  CHECK(std::holds_alternative<SubjectiveLiteral>(p.rules[0].body[0]));

  CHECK(parse_program("").rules.empty());
  CHECK(parse_program("% only a comment\n").rules.empty());
  CHECK(to_string(parse_program(":- .")) == ":- .\n");

  Program p4 = parse_program("p | q. s :- K p. :- not s.");
  REQUIRE(p4.rules.size() == 3);
  CHECK(p4.rules[2].head.empty());
}

TEST_CASE("negation depth and keywords", "[syntax]") {
  Program p = parse_program("a :- not not b, not K -c, M not d. -e | not f.");
  CHECK(to_string(p) == "-e | not f.\na :- not not b, not K -c, M not d.\n");
  CHECK_THROWS_AS(parse_program("a :- not not not b."), ParseError);
  // eNot is read as not K.
  CHECK(to_string(parse_program("a :- enot b.")) == "a :- not K b.\n");
}

TEST_CASE("parse errors carry a position", "[syntax]") {
  try {
    parse_program("p.\nq :- r,\n.");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() == 1);
  }
  CHECK_THROWS_AS(parse_program("p :- K ."), ParseError);
  CHECK_THROWS_AS(parse_program("p"), ParseError);
}

TEST_CASE("round trip on generated programs", "[syntax][property]") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    RandomConfig c;
    c.atoms = 1 + seed % 4;
    c.strong_negation = seed % 2;
    Program p = random_program(seed, c);
    Program q = canonical(parse_program(to_string(p)));
    INFO(to_string(p));
    CHECK(q == p);
  }
}

TEST_CASE("formula printing round trips", "[syntax]") {
  for (auto s : {"forall C: K (exists X: teach(X,C)) <- K class(C)", "(exists X: p(X)) & q", "K (forall Y: p(Y)) | r",
                 "-(a & b) <- not not c", "M (a | -b) & not K c", "#false <- #true"}) {
    Formula f = parse_formula(s);
    CHECK(parse_formula(to_string(f)) == f);
  }
  CHECK(to_string(parse_formula("exists X: p(X) & q")) == "exists X: p(X) & q");
}

TEST_CASE("grounding", "[syntax]") {
  Program p = ground(parse_program("p(a) | p(b).\n-p(X) :- not M p(X).\n#const a, b, c.\n"));
  CHECK(p.rules.size() == 4);
  CHECK(to_string(p).find("-p(c) :- not M p(c).") != std::string::npos);

  Program e = ground(parse_program("r(Y) :- K r(X), edge(X,Y).\n#const a, b.\n"));
  CHECK(e.rules.size() == 4);

  Program g = parse_program("p :- K q.");
  CHECK(ground(g) == canonical(g));
  CHECK(ground(p) == p);
  CHECK(ground(ground(e)) == ground(e));
  CHECK_THROWS_AS(ground(parse_program("p(X) :- q(X).")), UnsupportedError);
}

TEST_CASE("program to theory", "[syntax]") {
  Theory t = program_to_theory(parse_program("p :- K p. :- not s. p | q."));
  std::vector<std::string> got;
  for (auto const& f : t) { got.push_back(to_string(f)); }
  std::sort(got.begin(), got.end());
  CHECK(got == std::vector<std::string>{"not not s", "p <- K p", "p | q <- #true"});
}

TEST_CASE("modal abbreviations", "[syntax]") {
  CHECK(to_string(expand_modal_abbreviations(parse_formula("M p"))) == "not K not p");
  CHECK(to_string(expand_modal_abbreviations(parse_formula("K p"))) == "K p");
  CHECK(to_string(expand_modal_abbreviations(parse_formula("not not M p"))) == "not K not p");
  CHECK(to_string(expand_modal_abbreviations(parse_formula("M p"), true)) == "M p");
  CHECK(to_string(simplify_triple_negation(parse_formula("not not not p"))) == "not p");
  CHECK(to_string(simplify_triple_negation(parse_formula("not p"))) == "not p");
  CHECK(to_string(simplify_triple_negation(parse_formula("not not not not p"))) == "not not p");
}


TEST_CASE("triple negation keeps HT satisfaction", "[syntax][property]") {
  auto is = testgen::interpretations(2);
  for (auto s : {"not not not p", "not not not (p | -q) <- not not not not q", "not not not not (p & not not not q)"}) {
    Formula f = parse_formula(s);
    Formula g = simplify_triple_negation(f);
    for (auto const& t : is) {
      for (auto const& h : is) {
        if (!h.subset_of(t)) { continue; }
        CHECK(ht_satisfies({h, t}, f) == ht_satisfies({h, t}, g));
      }
    }
  }
}
