#include <catch_amalgamated.hpp>

#include "elp/campaign.hpp"
#include "elp/corpus.hpp"
#include "elp/founded.hpp"
#include "elp/properties.hpp"
#include "elp/random.hpp"

using namespace elp;
using S = Semantics;

TEST_CASE("constraint monotonicity examples", "[properties]") {
  Program p = parse_program("p | q.");
  Theory kp{parse_formula("K p")};
  for (S s : {S::G94, S::G11, S::C19}) { CHECK(check_constraint_monotonicity(p, kp, s).holds()); }
  for (S s : {S::K15, S::S16, S::F15}) {
    auto r = check_constraint_monotonicity(p, kp, s);
    INFO(to_string(s));
    CHECK_FALSE(r.holds());
    CHECK(r.witness.find("merged theory") != std::string::npos);
  }
}

TEST_CASE("foundedness examples", "[properties]") {
  Program p3 = corpus_program("P3");
  CHECK_FALSE(check_foundedness(p3, S::G94).holds());
  CHECK(check_foundedness(p3, S::C19).holds());
  Program p1 = corpus_program("P1");
  auto u = find_unfounded_set(p1, EpistemicInterpretation{{"p"}});
  REQUIRE(u.has_value());
  CHECK(verify_unfounded_set(p1, EpistemicInterpretation{{"p"}}, *u));
  CHECK_FALSE(find_unfounded_set(p1, EpistemicInterpretation{Interpretation{}}).has_value());
}

TEST_CASE("unfounded search agrees with the raw definition", "[properties][property]") {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    RandomConfig c;
    c.atoms = 1 + seed % 3;
    Program p = random_program(seed, c);
    for (auto const& w : world_views(p, S::G94)) {
      INFO(seed << " " << to_string(w) << "\n" << to_string(p));
      CHECK(find_unfounded_set(p, w).has_value() == is_unfounded_raw(p, w));
    }
  }
}

TEST_CASE("supra properties", "[properties][property]") {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    RandomConfig c;
    c.atoms = 2 + seed % 2;
    Program p = random_program(seed, c);
    c.modal = false;
    Program o = random_program(seed, c);
    for (S s : table_semantics()) {
      INFO(seed << " " << to_string(s));
      CHECK(check_supra_s5(p, s).holds());
      CHECK(check_supra_asp(o, s).holds());
    }
  }
  CHECK_THROWS_AS(check_supra_asp(parse_program("p :- K p."), S::G94), UnsupportedError);
}

TEST_CASE("epistemic tightness", "[properties]") {
  auto lambda = is_epistemically_tight(corpus_program("P7"));
  REQUIRE(lambda.has_value());
  CHECK(lambda->count(make_atom("interview(mike)")));
  auto up = is_epistemically_tight(parse_program("a :- K b. b :- c."));
  REQUIRE(up.has_value());
  CHECK((*up)[make_atom("a")] > (*up)[make_atom("b")]);
  CHECK((*up)[make_atom("b")] == (*up)[make_atom("c")]);
  CHECK_FALSE(is_epistemically_tight(corpus_program("P3")).has_value());
  CHECK(is_epistemically_tight(parse_program("p | q. r :- p, not q.")).has_value());
}

TEST_CASE("generator is reproducible", "[properties]") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    CHECK(random_program(seed) == random_program(seed));
    CHECK(random_constraint(seed) == random_constraint(seed));
  }
  CHECK_FALSE(random_program(1) == random_program(2));
}

TEST_CASE("table claims", "[properties]") {
  CHECK(claimed_property(Property::Foundedness, S::C19));
  CHECK_FALSE(claimed_property(Property::Foundedness, S::G94));
  CHECK(claimed_property(Property::Splitting, S::G94));
  CHECK_FALSE(claimed_property(Property::Splitting, S::K15));
  CHECK(claimed_property(Property::ConstraintMonotonicity, S::G11));
  CHECK_FALSE(claimed_property(Property::ConstraintMonotonicity, S::F15));
}

TEST_CASE("small campaign", "[properties]") {
  CampaignConfig c;
  c.seeds = 40;
  c.parallel = 2;
  auto res = run_campaign(c);
  CHECK(res.refuted_claims().empty());
  c.parallel = 1;
  auto again = run_campaign(c);
  REQUIRE(again.cells.size() == res.cells.size());
  for (std::size_t k = 0; k < res.cells.size(); ++k) {
    CHECK(again.cells[k].violations == res.cells[k].violations);
    CHECK(again.cells[k].first_counterexample == res.cells[k].first_counterexample);
  }
}
