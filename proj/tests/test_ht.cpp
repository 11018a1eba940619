#include <catch_amalgamated.hpp>

#include "elp/ht.hpp"
#include "elp/random.hpp"
#include "formula_gen.hpp"

using namespace elp;

namespace {

std::string models(const char* text) {
  return to_string(canonical(WorldViews{EpistemicInterpretation(stable_models(Theory{parse_formula(text)}))}));
}

std::vector<HTPair> pairs(std::size_t atoms) {
  auto is = testgen::interpretations(atoms);
  std::vector<HTPair> out;
  for (auto const& t : is) {
    for (auto const& h : is) {
      if (h.subset_of(t)) { out.push_back({h, t}); }
    }
  }
  return out;
}

}  // namespace

TEST_CASE("ht satisfaction on small pairs", "[ht]") {
  Interpretation p{"p"};
  CHECK(ht_satisfies({p, p}, parse_formula("p")));
  CHECK(ht_satisfies({{}, p}, parse_formula("p <- p")));
  CHECK_FALSE(ht_satisfies({{}, p}, parse_formula("not p")));
  CHECK_FALSE(ht_satisfies({{}, p}, parse_formula("p | not p")));
  CHECK(ht_satisfies({{}, p}, parse_formula("not not p")));
  CHECK(ht_falsifies({{}, {}}, parse_formula("#false")));
  CHECK(ht_satisfies({{}, {}}, parse_formula("#true")));
  CHECK(ht_satisfies({{"-p"}, {"-p"}}, parse_formula("-p")));
  CHECK(ht_falsifies({{"-p"}, {"-p"}}, parse_formula("p")));
  CHECK_THROWS_AS(ht_satisfies({p, {}}, parse_formula("p")), Error);
}

TEST_CASE("stable models of small theories", "[ht]") {
  CHECK(models("p <- #false") == "{[{}]}");
  CHECK(models("p | q") == "{[{p}, {q}]}");
  CHECK(models("p <- not not p") == "{[{}, {p}]}");
  CHECK(stable_models(Theory{parse_formula("p <- not p")}).empty());
  CHECK(models("-p | q") == "{[{-p}, {q}]}");
  CHECK(stable_models(Theory{parse_formula("p"), parse_formula("-p")}).empty());
  CHECK_THROWS_AS(stable_models(Theory{parse_formula("p <- K q")}), UnsupportedError);
}

TEST_CASE("persistence and coherence", "[ht][property]") {
  auto ps = pairs(3);
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    testgen::FormulaGen gen(seed, 3, false);
    Formula f = gen(4);
    INFO(to_string(f));
    for (auto const& hp : ps) {
      bool sat = ht_satisfies(hp, f);
      bool fal = ht_falsifies(hp, f);
      CHECK_FALSE((sat && fal));
      if (sat) { CHECK(ht_satisfies({hp.there, hp.there}, f)); }
      if (fal) { CHECK(ht_falsifies({hp.there, hp.there}, f)); }
    }
  }
}

TEST_CASE("stable models agree with the raw enumeration", "[ht][property]") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    Theory t;
    testgen::FormulaGen gen(seed, 3, false);
    for (std::size_t k = 0; k < 1 + seed % 3; ++k) { t.push_back(gen(3)); }
    INFO(seed);
    auto a = stable_models(t);
    auto b = stable_models_raw(t);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    CHECK(a == b);
  }
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    RandomConfig c;
    c.modal = false;
    c.strong_negation = seed % 3 == 0;
    Theory t = program_to_theory(random_program(seed, c));
    auto a = stable_models(t);
    auto b = stable_models_raw(t);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    CHECK(a == b);
  }
}
