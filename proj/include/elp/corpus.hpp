#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "elp/solve.hpp"

namespace elp {

struct CorpusEntry {
  std::string name;
  std::string summary;
  std::string text;
  // Expected world views (printed form) per semantics.  The tag says
  // whether the value is stated in the literature or derived by hand.
  struct Expectation {
    Semantics semantics;
    std::string world_views;
    std::string tag;  // "stated" or "derived"
  };
  std::vector<Expectation> expected;
  std::vector<std::string> constraints;  // extra subjective constraints, as #constraint bodies
};

namespace detail {

inline std::string yale_define(int horizon) {
  std::string out = "alive_0 | -alive_0.\nloaded_0 | -loaded_0.\n";
  for (int i = 0; i < horizon; ++i) {
    std::string s = std::to_string(i);
    std::string n = std::to_string(i + 1);
    out += "-alive_" + n + " :- trigger_" + s + ", loaded_" + s + ".\n";
    out += "-loaded_" + n + " :- trigger_" + s + ".\n";
    out += "loaded_" + n + " :- load_" + s + ".\n";
    out += "impossible :- load_" + s + ", loaded_" + s + ".\n";
    // inertia
    out += "alive_" + n + " :- alive_" + s + ", not -alive_" + n + ".\n";
    out += "-alive_" + n + " :- -alive_" + s + ", not alive_" + n + ".\n";
    out += "loaded_" + n + " :- loaded_" + s + ", not -loaded_" + n + ".\n";
    out += "-loaded_" + n + " :- -loaded_" + s + ", not loaded_" + n + ".\n";
  }
  return out;
}

inline std::string yale_test(int horizon) {
  return ":- not K -alive_" + std::to_string(horizon) + ".\n:- M impossible.\n";
}

inline std::string yale_guess(int horizon) {
  std::string out;
  for (int i = 0; i < horizon; ++i) {
    for (std::string a : {"trigger_", "load_"}) {
      a += std::to_string(i);
      out += a + " | not " + a + ".\n" + a + " :- M " + a + ".\n";
    }
  }
  return out;
}

inline std::vector<CorpusEntry> build_corpus() {
  using S = Semantics;
  std::vector<CorpusEntry> c;
  // The intended reading is the second G94 world view; the other two
  // decide one disjunct by assuming it is not possible.
  c.push_back({"P0", "closed world assumption with an epistemic guard",
               "p(a) | p(b).\n-p(X) :- not M p(X).\n#const a, b, c.\n",
               {{S::G94, "{[{p(a), -p(b), -p(c)}], [{p(a), -p(c)}, {p(b), -p(c)}], [{-p(a), p(b), -p(c)}]}", "derived"},
                {S::K15, "{[{p(a), -p(c)}, {p(b), -p(c)}]}", "derived"},
                {S::S16, "{[{p(a), -p(c)}, {p(b), -p(c)}]}", "derived"},
                {S::F15, "{[{p(a), -p(c)}, {p(b), -p(c)}]}", "derived"}},
               {}});
  c.push_back({"P1", "self-supported belief", "p :- K p.\n",
               {{S::G94, "{[{}], [{p}]}", "stated"},
                {S::G11, "{[{}]}", "stated"},
                {S::K15, "{[{}]}", "derived"},
                {S::F15, "{[{}]}", "stated"},
                {S::C19, "{[{}]}", "stated"},
                {S::FK15, "{[{}]}", "derived"}},
               {}});
  c.push_back({"P2", "self-supported possibility", "p :- M p.\n",
               {{S::G11, "{[{}], [{p}]}", "stated"},
                {S::K15, "{[{p}]}", "stated"},
                {S::F15, "{[{}]}", "stated"},
                {S::FK15, "{[{}]}", "derived"}},
               {}});
  c.push_back({"P3", "larger set of worlds", "p | q.\np :- K q.\nq :- K p.\n",
               {{S::G94, "{[{p}, {q}], [{p, q}]}", "stated"},
                {S::G11, "{[{p}, {q}], [{p, q}]}", "stated"},
                {S::C19, "{[{p}, {q}]}", "stated"}},
               {}});
  // The literature also lists [{p},{q}] as the C19 world view here, but that
  // world view violates the constraint; see README.
  c.push_back({"P3c", "larger set of worlds with a knowledge constraint",
               "p | q.\np :- K q.\nq :- K p.\n:- not K p.\n",
               {{S::F15, "{[{p, q}]}", "stated"}, {S::G94, "{[{p, q}]}", "derived"}, {S::C19, "{}", "derived"}},
               {}});
  c.push_back({"P4", "splitting refuter", "p | q.\ns :- K p.\n:- not s.\n",
               {{S::G94, "{}", "stated"}, {S::G11, "{[{p, s}]}", "stated"}},
               {}});
  c.push_back({"P4n", "splitting refuter without its constraint", "p | q.\ns :- K p.\n",
               {{S::G94, "{[{p}, {q}]}", "stated"},
                {S::G11, "{[{p}, {q}]}", "stated"},
                {S::K15, "{[{p}, {q}]}", "stated"},
                {S::S16, "{[{p}, {q}]}", "stated"},
                {S::F15, "{[{p}, {q}]}", "stated"},
                {S::C19, "{[{p}, {q}]}", "stated"}},
               {}});
  c.push_back({"P5", "constraint monotonicity refuter", "p | q.\n:- not K p.\n",
               {{S::K15, "{[{p}]}", "stated"}, {S::S16, "{[{p}]}", "stated"}, {S::F15, "{[{p}]}", "stated"}},
               {}});
  c.push_back({"P6", "mutual possibility", "p :- M q, not q.\nq :- M p, not p.\n",
               {{S::K15, "{[{}], [{p}, {q}]}", "stated"}, {S::S16, "{[{p}, {q}]}", "stated"}},
               {}});
  c.push_back({"P7", "scholarship eligibility",
               "eligible(X) :- high(X).\n"
               "eligible(X) :- minority(X), fair(X).\n"
               "-eligible(X) :- -fair(X), -high(X).\n"
               "fair(mike) | high(mike).\n"
               "interview(X) :- not K eligible(X), not K -eligible(X).\n"
               "appointment(X) :- K interview(X).\n",
               {{S::G94,
                 "{[{appointment(mike), eligible(mike), high(mike), interview(mike)}, "
                 "{appointment(mike), fair(mike), interview(mike)}]}",
                 "stated"}},
               {}});
  c.push_back({"P8", "conformant planning, Yale shooting with horizon 3",
               yale_guess(3) + yale_define(3) + yale_test(3), {}, {}});
  c.push_back({"P8v", "Yale shooting with the action sequence load, trigger",
               "load_1.\ntrigger_2.\n" + yale_define(3) + yale_test(3), {{S::G94, "{}", "stated"}}, {}});
  c.push_back({"P9", "attack graph with hardening guesses",
               "ftp_rhosts(0,2) :- ftp(0,2), user(0).\n"
               "trust(2,0) :- ftp_rhosts(0,2).\n"
               "rsh(0,2) :- trust(2,0).\n"
               "sshd_bof(1,2) :- sshd(1,2), user(1).\n"
               "user(2) :- rsh(0,2).\n"
               "user(2) :- sshd_bof(1,2).\n"
               "local_bof(2) :- user(2).\n"
               "root(2) :- local_bof(2).\n"
               "ftp(0,2) | -ftp(0,2).\n"
               "user(0) | -user(0).\n"
               "sshd(1,2) | -sshd(1,2).\n"
               "user(1) | -user(1).\n"
               ":- M root(2).\n"
               "close_ftp :- not K -close_ftp.\n"
               "-close_ftp :- not K close_ftp.\n"
               "close_sshd :- not K -close_sshd.\n"
               "-close_sshd :- not K close_sshd.\n"
               "-ftp(0,2) :- close_ftp.\n"
               "-sshd(1,2) :- close_sshd.\n",
               {}, {}});
  c.push_back({"P10", "agreement of all semantics", "p :- K p.\np | q.\ns :- K p.\n:- not s.\n",
               {{S::G94, "{[{p, s}]}", "stated"},
                {S::G11, "{[{p, s}]}", "stated"},
                {S::K15, "{[{p, s}]}", "stated"},
                {S::S16, "{[{p, s}]}", "stated"},
                {S::F15, "{[{p, s}]}", "stated"},
                {S::C19, "{[{p, s}]}", "stated"}},
               {}});
  c.push_back({"DB", "disjunctive teaching database",
               "h(bob).\nh(mary).\n"
               "teach(bob,java).\nteach(staff,python).\n"
               "teach(bob,ai) | teach(mary,ai).\n"
               "class(java).\nclass(python).\nclass(ai).\n",
               {{S::G94,
                 "{[{class(ai), class(java), class(python), h(bob), h(mary), teach(bob,ai), teach(bob,java), "
                 "teach(staff,python)}, {class(ai), class(java), class(python), h(bob), h(mary), "
                 "teach(bob,java), teach(mary,ai), teach(staff,python)}]}",
                 "stated"}},
               {"forall C: (exists X: K (h(X) & teach(X,C))) <- K class(C)",
                "forall C: (exists X: K teach(X,C)) <- K class(C)",
                "forall C: (K exists X: teach(X,C)) <- K class(C)"}});
  return c;
}

}  // namespace detail

inline const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> c = detail::build_corpus();
  return c;
}

inline const CorpusEntry* find_corpus(const std::string& name) {
  for (auto const& e : corpus()) {
    if (e.name == name) { return &e; }
  }
  return nullptr;
}

inline const CorpusEntry& corpus_entry(const std::string& name) {
  if (auto* e = find_corpus(name)) { return *e; }
  throw Error("unknown corpus entry: " + name);
}

inline Program corpus_program(const std::string& name) { return ground(parse_program(corpus_entry(name).text)); }

}  // namespace elp
