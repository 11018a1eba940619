// Acceptance run: one PASS/FAIL line per criterion.  Exits non-zero when any
// criterion fails.
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <thread>

#include "elp/campaign.hpp"
#include "elp/corpus.hpp"
#include "elp/oracle.hpp"
#include "elp/properties.hpp"
#include "elp/random.hpp"

using namespace elp;
using S = Semantics;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream log;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      if (ok) { log << what; }
      ok = false;
    }
  }
};

std::string wv(const Program& p, S s) { return to_string(world_views(p, s)); }

bool expected_corpus(Outcome& o, const std::string& name, S s, const std::string& want) {
  std::string got = wv(corpus_program(name), s);
  o.expect(got == want, name + "/" + to_string(s) + ": got " + got + ", want " + want);
  return got == want;
}

Program db_program() { return corpus_program("DB"); }

WorldViews db_with_constraint(std::size_t k) {
  auto const& e = corpus_entry("DB");
  auto d = parse_document(e.text + "#constraint " + e.constraints[k] + ".\n");
  return solve_specification(specification(d), S::G94);
}

RandomConfig small(std::size_t atoms) {
  RandomConfig c;
  c.atoms = atoms;
  return c;
}

// ---------------------------------------------------------------------------

void c1(Outcome& o) {
  expected_corpus(o, "P1", S::G94, "{[{}], [{p}]}");
  expected_corpus(o, "P3", S::G94, "{[{p}, {q}], [{p, q}]}");
  expected_corpus(o, "P4", S::G94, "{}");
  auto db = world_views(db_program(), S::G94);
  o.expect(db.size() == 1 && db[0].size() == 2, "DB: expected one world view with two belief sets, got " + to_string(db));
  if (db.size() == 1) {
    auto w = db[0];
    o.expect(ei_satisfies(w, parse_formula("K (h(bob) & teach(bob,java))")), "DB: K (h(bob) & teach(bob,java))");
    o.expect(!ei_satisfies(w, ground(Theory{parse_formula("exists X: K (h(X) & teach(X,ai))")}, {"bob", "mary", "staff"})),
             "DB: exists X K(h(X) & teach(X,ai)) should fail");
  }
  o.expect(db_with_constraint(0).empty(), "DB: closure of exists X K(h(X) & teach(X,C)) should remove the world view");
  o.expect(db_with_constraint(2) == db, "DB: closure of K exists X teach(X,C) should keep the world view");
}

void c2(Outcome& o) {
  expected_corpus(o, "P1", S::G11, "{[{}]}");
  expected_corpus(o, "P3", S::G11, "{[{p}, {q}], [{p, q}]}");
  expected_corpus(o, "P4", S::G11, "{[{p, s}]}");
  expected_corpus(o, "P2", S::G11, "{[{}], [{p}]}");
}

void c3(Outcome& o) {
  for (S s : {S::K15, S::S16}) {
    expected_corpus(o, "P2", s, "{[{p}]}");
    expected_corpus(o, "P5", s, "{[{p}]}");
  }
  expected_corpus(o, "P6", S::K15, "{[{}], [{p}, {q}]}");
  expected_corpus(o, "P6", S::S16, "{[{p}, {q}]}");
}

void c4(Outcome& o) {
  expected_corpus(o, "P1", S::F15, "{[{}]}");
  expected_corpus(o, "P2", S::F15, "{[{}]}");
  expected_corpus(o, "P3c", S::F15, "{[{p, q}]}");
  expected_corpus(o, "P5", S::F15, "{[{p}]}");
}

void c5(Outcome& o) {
  expected_corpus(o, "P1", S::C19, "{[{}]}");
  expected_corpus(o, "P3", S::C19, "{[{p}, {q}]}");
  // The stated C19 world view of P3c is [{p},{q}], which falsifies the
  // constraint "not K p".  C19 world views are the founded G94 ones, and the
  // only G94 world view is unfounded, so the set is empty.
  Program p3c = corpus_program("P3c");
  EpistemicInterpretation stated{Interpretation{"p"}, Interpretation{"q"}};
  o.expect(!ei_satisfies(stated, program_to_theory(p3c)), "P3c: [{p},{q}] unexpectedly satisfies the program");
  auto g94 = world_views(p3c, S::G94);
  o.expect(g94.size() == 1 && find_unfounded_set(p3c, g94[0]).has_value(), "P3c: G94 world view should be unfounded");
  expected_corpus(o, "P3c", S::C19, "{}");
  o.log << "P3c: stated [{p},{q}] violates its constraint; C19 gives {}";
}

void c6(Outcome& o) {
  auto u1 = find_unfounded_set(corpus_program("P1"), EpistemicInterpretation{Interpretation{"p"}});
  o.expect(u1 && to_string(*u1) == "{<{p}, {p}>}", "P1/[{p}]: " + (u1 ? to_string(*u1) : "none"));
  Interpretation pq{"p", "q"};
  auto u3 = find_unfounded_set(corpus_program("P3"), EpistemicInterpretation{pq});
  o.expect(u3 && to_string(*u3) == "{<{p}, {p, q}>, <{q}, {p, q}>}", "P3/[{p,q}]: " + (u3 ? to_string(*u3) : "none"));
  std::size_t checked = 0;
  for (std::uint64_t seed = 0; seed < 300 && o.ok; ++seed) {
    RandomConfig c = small(1 + seed % 3);
    c.strong_negation = seed % 4 == 0;
    Program p = random_program(seed, c);
    auto cands = oracle::head_candidates(p);
    if (cands.size() > 8) { cands.resize(8); }
    oracle::for_each_epistemic(cands, [&](const EpistemicInterpretation& w) {
      if (!o.ok) { return; }
      auto gfp = find_unfounded_set(p, w);
      bool raw = is_unfounded_raw(p, w);
      ++checked;
      o.expect(gfp.has_value() == raw, "seed " + std::to_string(seed) + " " + to_string(p) + " at " + to_string(w) +
                                           ": gfp " + (gfp ? to_string(*gfp) : "none") + ", raw " + (raw ? "yes" : "no"));
      if (gfp) { o.expect(verify_unfounded_set(p, w, *gfp), "gfp witness does not verify at seed " + std::to_string(seed)); }
    });
  }
  o.log << checked << " (program, interpretation) pairs";
}

void c7(Outcome& o) {
  Program p7 = corpus_program("P7");
  std::set<Atom> u = atoms_of(p7);
  u.erase(make_atom("interview(mike)"));
  u.erase(make_atom("appointment(mike)"));
  o.expect(is_splitting_set(u, p7), "P7: eligibility atoms do not split the program");
  for (S s : {S::G94, S::C19}) {
    auto r = check_splitting_instance(p7, s, u);
    o.expect(r.holds(), "P7 " + to_string(s) + ": " + r.witness);
    o.expect(to_string(r.left) == corpus_entry("P7").expected[0].world_views, "P7 " + to_string(s) + ": " + to_string(r.left));
  }
  Program p4 = corpus_program("P4");
  auto r4 = check_splitting_instance(p4, S::G11, {make_atom("p"), make_atom("q")});
  o.expect(!r4.holds(), "P4 under G11 should be a splitting counterexample");
  std::size_t n = 0;
  for (std::uint64_t seed = 0; seed < 500 && o.ok; ++seed) {
    Program p = random_program(seed, small(2 + seed % 3));
    auto u2 = random_splitting_set(seed, p);
    for (S s : {S::G94, S::C19}) {
      auto r = check_splitting_instance(p, s, u2);
      ++n;
      o.expect(r.holds(), "seed " + std::to_string(seed) + " " + to_string(s) + " " + to_string(p) + " " + r.witness);
    }
  }
  o.log << n << " random splittings";
}

bool embeddings_agree(Outcome& o, const Program& p, const std::string& tag) {
  auto atoms = atoms_of(p);
  Theory t = program_to_theory(p);
  auto k15 = world_views(p, S::K15);
  auto via_b = restrict(world_views(normalize_to_program(translate_b(t)), S::G94), atoms);
  o.expect(k15 == via_b, tag + ": K15 " + to_string(k15) + " vs G94(B) " + to_string(via_b));
  auto g94 = world_views(p, S::G94);
  auto via_k = restrict(world_views(normalize_to_program(translate_k(t)), S::K15), atoms);
  o.expect(g94 == via_k, tag + ": G94 " + to_string(g94) + " vs K15(K) " + to_string(via_k));
  return o.ok;
}

void c8(Outcome& o) {
  std::size_t n = 0;
  for (auto const& e : corpus()) {
    Program p = corpus_program(e.name);
    if (atoms_of(p).size() > 12) { continue; }
    ++n;
    if (!embeddings_agree(o, p, e.name)) { return; }
  }
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    ++n;
    RandomConfig c = small(1 + seed % 3);
    c.strong_negation = seed % 4 == 0;
    if (!embeddings_agree(o, random_program(seed, c), "seed " + std::to_string(seed))) { return; }
  }
  o.log << n << " programs";
}

bool autoepistemic_agree(Outcome& o, const Theory& t, const std::string& tag) {
  auto atoms = atoms_of(t);
  auto m85 = world_views(t, S::M85);
  auto g94em = restrict(world_views(with_em(t), S::G94), atoms);
  o.expect(m85 == g94em, tag + ": M85 " + to_string(m85) + " vs G94+EM " + to_string(g94em));
  auto s92 = world_views(t, S::S92);
  auto k15em = restrict(world_views(with_em(t), S::K15), atoms);
  o.expect(s92 == k15em, tag + ": S92 " + to_string(s92) + " vs K15+EM " + to_string(k15em));
  auto g94 = world_views(t, S::G94);
  auto c19kem = restrict(world_views(with_kem(t), S::C19), atoms);
  o.expect(g94 == c19kem, tag + ": G94 " + to_string(g94) + " vs C19+KEM " + to_string(c19kem));
  return o.ok;
}

void c9(Outcome& o) {
  std::size_t n = 0;
  for (auto const& e : corpus()) {
    Program p = corpus_program(e.name);
    if (atoms_of(p).size() > 3) { continue; }
    ++n;
    if (!autoepistemic_agree(o, program_to_theory(p), e.name)) { return; }
  }
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    ++n;
    Theory t = program_to_theory(random_program(seed, small(1 + seed % 2)));
    if (!autoepistemic_agree(o, t, "seed " + std::to_string(seed))) { return; }
  }
  o.log << n << " theories";
}

void c10(Outcome& o) {
  auto p8 = world_views(corpus_program("P8"), S::G94);
  o.expect(p8.size() == 1, "P8: expected a single world view, got " + std::to_string(p8.size()));
  if (p8.size() == 1) {
    for (std::string a : {"trigger_0", "load_1", "trigger_2"}) {
      o.expect(ei_satisfies(p8[0], Formula::k(Formula::atom(make_atom(a)))), "P8: K " + a + " missing");
    }
    for (std::string a : {"load_0", "trigger_1", "load_2"}) {
      o.expect(ei_satisfies(p8[0], Formula::k(Formula::dneg(Formula::atom(make_atom(a))))), "P8: " + a + " not excluded");
    }
  }
  o.expect(world_views(corpus_program("P8v"), S::G94).empty(), "P8v: load, trigger should not be conformant");
  auto p9 = world_views(corpus_program("P9"), S::G94);
  o.expect(p9.size() == 1, "P9: expected one world view, got " + to_string(p9));
  if (p9.size() == 1) {
    o.expect(ei_satisfies(p9[0], parse_formula("K close_ftp & K close_sshd")), "P9: both hardenings expected");
  }
}

void c11(Outcome& o) {
  std::size_t n = 0;
  for (std::uint64_t seed = 0; seed < 1000 && o.ok; ++seed) {
    RandomConfig c = small(1 + seed % 3);
    if (seed % 5 == 0) {
      c = small(1 + seed % 2);
      c.strong_negation = true;
    }
    Program p = random_program(seed, c);
    for (S s : table_semantics()) {
      auto a = world_views(p, s);
      auto b = brute_force_world_views(p, s);
      ++n;
      o.expect(a == b, "seed " + std::to_string(seed) + " " + to_string(s) + " " + to_string(p) + ": engine " +
                           to_string(a) + ", oracle " + to_string(b));
    }
  }
  o.log << n << " comparisons";
}

// Property matrix campaign over the corpus and random instances.
void c12(Outcome& o) {
  CampaignConfig cfg;
  cfg.parallel = std::max(1u, std::thread::hardware_concurrency());
  auto res = run_campaign(cfg);
  std::size_t blank = 0, refuted = 0;
  for (auto const& c : res.cells) {
    std::string cell = to_string(c.property) + "/" + to_string(c.semantics);
    if (c.claimed) {
      o.expect(c.violations == 0, cell + " claimed but refuted by " + c.first_counterexample);
    } else if (c.property != Property::SupraS5 && c.property != Property::SupraAsp) {
      ++blank;
      refuted += c.violations > 0;
      o.expect(c.violations > 0, cell + " has no counterexample");
    }
  }
  o.log << res.instances << " instances, " << refuted << "/" << blank << " blank cells refuted, " << res.skipped
        << " (instance, semantics) skipped at caps";
}

}  // namespace

int main() {
  std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria = {
      {"G94 corpus", c1},
      {"G11 corpus", c2},
      {"K15/S16 corpus", c3},
      {"F15 corpus", c4},
      {"C19 corpus", c5},
      {"foundedness witnesses and GFP vs raw oracle", c6},
      {"splitting", c7},
      {"B/K embeddings", c8},
      {"autoepistemic correspondences", c9},
      {"planning and attack graph", c10},
      {"engine vs brute-force oracle", c11},
      {"property matrix", c12},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    try {
      criteria[k].second(o);
    } catch (const std::exception& e) {
      o.ok = false;
      o.log << "exception: " << e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << (o.ok ? "PASS " : "FAIL ") << k + 1 << " " << criteria[k].first << " [" << secs << "s]";
    if (!o.log.str().empty()) { std::cout << " " << o.log.str(); }
    std::cout << std::endl;
    failed += !o.ok;
  }
  return failed ? EXIT_FAILURE : EXIT_SUCCESS;
}
