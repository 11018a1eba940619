#include <catch_amalgamated.hpp>

#include "elp/corpus.hpp"
#include "elp/oracle.hpp"
#include "elp/properties.hpp"
#include "elp/random.hpp"

using namespace elp;
using S = Semantics;

namespace {

RandomConfig small(std::size_t atoms) {
  RandomConfig c;
  c.atoms = atoms;
  return c;
}

// Sets the negation depth of every subjective literal.
Program with_subjective_depth(Program p, bool negated) {
  for (auto& r : p.rules) {
    for (auto& l : r.body) {
      if (auto* s = std::get_if<SubjectiveLiteral>(&l)) {
        s->modality = Modality::K;
        s->depth = negated ? std::max(1, s->depth) : 0;
      }
    }
  }
  return canonical(std::move(p));
}

bool subset(const WorldViews& a, const WorldViews& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

TEST_CASE("small programs under each semantics", "[semantics]") {
  Program p1 = parse_program("p :- K p.");
  CHECK(to_string(world_views(p1, S::G94)) == "{[{}], [{p}]}");
  CHECK(to_string(world_views(p1, S::G11)) == "{[{}]}");
  CHECK(to_string(world_views(p1, S::C19)) == "{[{}]}");
  Program p6 = corpus_program("P6");
  CHECK(world_views(p6, S::K15).size() == 2);
  CHECK(world_views(p6, S::S16).size() == 1);
  CHECK(world_views(parse_program("p :- not K p."), S::G94).empty());
}

TEST_CASE("semantics names", "[semantics]") {
  for (S s : all_semantics()) { CHECK(parse_semantics(to_string(s)) == s); }
  CHECK_FALSE(parse_semantics("nope").has_value());
}

TEST_CASE("engine agrees with the oracle", "[semantics][property]") {
  for (std::uint64_t seed = 0; seed < 250; ++seed) {
    RandomConfig c = small(1 + seed % 3);
    c.strong_negation = seed % 7 == 0 && c.atoms < 3;
    Program p = random_program(seed, c);
    for (S s : table_semantics()) {
      INFO(seed << " " << to_string(s) << "\n" << to_string(p));
      CHECK(world_views(p, s) == brute_force_world_views(p, s));
    }
  }
}

TEST_CASE("autoepistemic fixpoints agree with the oracle", "[semantics][property]") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Program p = random_program(seed, small(1 + seed % 2));
    for (S s : {S::M85, S::S92}) {
      INFO(seed << " " << to_string(s) << "\n" << to_string(p));
      CHECK(world_views(p, s) == brute_force_world_views(p, s));
    }
  }
}

TEST_CASE("inclusions between semantics", "[semantics][property]") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    Program p = random_program(seed, small(2 + seed % 3));
    INFO(seed << "\n" << to_string(p));
    CHECK(subset(world_views(p, S::S16), world_views(p, S::K15)));
    CHECK(subset(world_views(p, S::C19), world_views(p, S::G94)));
  }
}

TEST_CASE("G11 meets G94 and K15 at the extremes", "[semantics][property]") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    Program p = random_program(seed, small(2 + seed % 3));
    Program neg = with_subjective_depth(p, true);
    Program pos = with_subjective_depth(p, false);
    INFO(seed << "\n" << to_string(neg) << "\n" << to_string(pos));
    CHECK(world_views(neg, S::G11) == world_views(neg, S::G94));
    CHECK(world_views(pos, S::G11) == world_views(pos, S::K15));
  }
}

TEST_CASE("reflexivity probe", "[semantics][property]") {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    Program p = random_program(seed, small(1 + seed % 3));
    for (S s : {S::G11, S::K15, S::S16, S::F15}) {
      INFO(seed << " " << to_string(s) << "\n" << to_string(p));
      CHECK(probe_reflexivity(p, s).unchanged);
    }
  }
  Program p4 = corpus_program("P4");
  CHECK_FALSE(probe_reflexivity(p4, S::G94).unchanged);
  CHECK_FALSE(probe_reflexivity(p4, S::C19).unchanged);
}

TEST_CASE("tight programs: C19 equals G94", "[semantics][property]") {
  std::size_t tight = 0;
  for (auto const& e : corpus()) {
    Program p = corpus_program(e.name);
    if (atoms_of(p).size() > 12 || !is_epistemically_tight(p)) { continue; }
    ++tight;
    INFO(e.name);
    CHECK(world_views(p, S::C19) == world_views(p, S::G94));
  }
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    Program p = random_program(seed, small(2 + seed % 3));
    if (!is_epistemically_tight(p)) { continue; }
    ++tight;
    INFO(seed << "\n" << to_string(p));
    CHECK(world_views(p, S::C19) == world_views(p, S::G94));
  }
  CHECK(tight > 50);
}

TEST_CASE("caps are reported", "[semantics]") {
  Limits l;
  l.max_atoms = 2;
  CHECK_THROWS_AS(world_views(parse_program("a | b | c."), S::G94, l), CapExceeded);
}
