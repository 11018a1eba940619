#include <catch_amalgamated.hpp>

#include "elp/corpus.hpp"
#include "elp/random.hpp"
#include "elp/splitting.hpp"

using namespace elp;
using S = Semantics;

namespace {

std::set<Atom> atoms(std::initializer_list<const char*> names) {
  std::set<Atom> out;
  for (auto const* n : names) { out.insert(make_atom(n)); }
  return out;
}

}  // namespace

TEST_CASE("splitting set recognition", "[splitting]") {
  Program p4 = corpus_program("P4");
  CHECK(is_splitting_set(atoms({"p", "q"}), p4));
  CHECK(is_splitting_set(atoms({}), p4));
  CHECK(is_splitting_set(atoms_of(p4), p4));
  CHECK_FALSE(is_splitting_set(atoms({"p"}), p4));
  CHECK_FALSE(is_splitting_set(atoms({"s"}), p4));

  Splitting s = split(atoms({"p", "q"}), p4);
  CHECK(to_string(s.bottom) == "p | q.\n");
  CHECK(s.top.rules.size() == 2);
  CHECK_THROWS_AS(split(atoms({"s"}), p4), Error);

  // a rule through K only may cross the boundary
  CHECK(is_splitting_set(atoms({"q"}), parse_program("p :- K q. q.")));
  CHECK_FALSE(is_splitting_set(atoms({"q"}), parse_program("p :- q. q.")));
}

TEST_CASE("combining layers", "[splitting]") {
  EpistemicInterpretation b{{"p"}, {"q"}};
  EpistemicInterpretation t{{"s"}, {}};
  CHECK(to_string(combine(b, t)) == "[{p}, {p, s}, {q}, {q, s}]");
}

TEST_CASE("splitting examples", "[splitting]") {
  Program p7 = corpus_program("P7");
  std::set<Atom> u;
  for (auto const& a : atoms_of(p7)) {
    if (a.predicate != "interview" && a.predicate != "appointment") { u.insert(a); }
  }
  REQUIRE(is_splitting_set(u, p7));
  for (S s : {S::G94, S::C19}) { CHECK(check_splitting_instance(p7, s, u).holds()); }

  auto r = check_splitting_instance(corpus_program("P4"), S::G11, atoms({"p", "q"}));
  CHECK_FALSE(r.holds());
  CHECK_FALSE(r.witness.empty());
}

TEST_CASE("split and unsplit round trip", "[splitting][property]") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    Program p = random_program(seed, {});
    auto u = random_splitting_set(seed, p);
    REQUIRE(is_splitting_set(u, p));
    CHECK(canonical(unsplit(split(u, p))) == canonical(p));
  }
}

TEST_CASE("found splitting sets are splitting sets", "[splitting][property]") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Program p = random_program(seed, {});
    auto sets = find_splitting_sets(p);
    CHECK(sets.size() >= 1);
    for (auto const& u : sets) { CHECK(is_splitting_set(u, p)); }
  }
}

TEST_CASE("splitting holds for G94 and C19 on generated programs", "[splitting][property]") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    RandomConfig c;
    c.atoms = 2 + seed % 3;
    Program p = random_program(seed, c);
    auto u = random_splitting_set(seed, p);
    for (S s : {S::G94, S::C19}) {
      auto r = check_splitting_instance(p, s, u);
      INFO(seed << " " << to_string(s) << " " << r.witness);
      CHECK(r.holds());
    }
  }
}
