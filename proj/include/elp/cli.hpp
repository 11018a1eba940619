#pragma once

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "elp/campaign.hpp"
#include "elp/oracle.hpp"

namespace elp::cli {

using Json = nlohmann::ordered_json;

enum ExitCode : int {
  kOk = 0,
  kUsage = 2,
  kParse = 10,
  kUnsupported = 20,
  kCap = 30,
};

struct RunConfig {
  std::string command;
  std::vector<std::string> semantics;
  std::vector<std::string> inputs;
  std::string format = "text";
  std::size_t max_atoms = Limits{}.max_atoms;
  std::size_t f15_max_atoms = Limits{}.f15_max_atoms;
  bool oracle = false;
  unsigned parallel = 1;
  std::uint64_t seed = 0;
  std::vector<std::string> constants;

  // command specific
  std::string property;
  std::vector<std::string> constraint;
  std::vector<std::string> split;
  std::string to;
  bool normalize = false;
  std::string corpus_action;
  std::string corpus_name;
  std::size_t seeds = 500;
  std::size_t random_atoms = 3;

  Limits limits() const {
    Limits l;
    l.max_atoms = max_atoms;
    l.f15_max_atoms = f15_max_atoms;
    return l;
  }
  bool json() const { return format == "json"; }
};

// Usage problems that are not parse errors of the input.
class UsageError : public Error {
 public:
  using Error::Error;
};

namespace detail {

inline std::string read_input(const std::string& name, std::istream& in) {
  if (name.rfind("corpus:", 0) == 0) {
    auto const* e = find_corpus(name.substr(7));
    if (!e) { throw UsageError("unknown corpus entry: " + name.substr(7)); }
    std::string text = e->text;
    if (!e->constraints.empty()) { text += "% alternative subjective constraints, one at a time:\n"; }
    for (auto const& c : e->constraints) { text += "% #constraint " + c + ".\n"; }
    return text;
  }
  if (name == "-") { return {std::istreambuf_iterator<char>(in), {}}; }
  std::ifstream f(name);
  if (!f) { throw UsageError("cannot read " + name); }
  return {std::istreambuf_iterator<char>(f), {}};
}

inline Document load(const RunConfig& cfg, const std::string& name, std::istream& in) {
  Document d = parse_document(read_input(name, in));
  for (auto const& c : cfg.constants) { d.program.constants.insert(c); }
  return d;
}

inline bool is_specification(const Document& d) { return !d.formulas.empty() || !d.constraints.empty(); }

inline Program program_of(const Document& d) {
  if (is_specification(d)) { throw UnsupportedError("this command needs a program without #formula or #constraint"); }
  return ground(d.program);
}

inline std::vector<Semantics> semantics_list(const RunConfig& cfg, std::vector<Semantics> fallback) {
  if (cfg.semantics.empty()) { return fallback; }
  std::vector<Semantics> out;
  for (auto const& s : cfg.semantics) {
    auto x = parse_semantics(s);
    if (!x) { throw UsageError("unknown semantics: " + s); }
    out.push_back(*x);
  }
  return out;
}

inline WorldViews solve_one(const RunConfig& cfg, const Document& d, Semantics s) {
  if (is_specification(d)) {
    if (cfg.oracle) { throw UnsupportedError("the oracle takes programs only"); }
    return solve_specification(specification(d), s, cfg.limits());
  }
  Program p = ground(d.program);
  return cfg.oracle ? brute_force_world_views(p, s) : world_views(p, s, cfg.limits());
}

inline Json to_json(const Interpretation& i) {
  Json out = Json::array();
  for (auto const& l : i.literals()) { out.push_back(to_string(l)); }
  return out;
}

inline Json to_json(const WorldViews& ws) {
  Json out = Json::array();
  for (auto const& w : ws) {
    Json sets = Json::array();
    for (auto const& i : w.belief_sets()) { sets.push_back(to_json(i)); }
    out.push_back(Json{{"belief_sets", sets}});
  }
  return out;
}

inline std::set<Atom> atoms_of_document(const Document& d) {
  std::set<Atom> out = atoms_of(ground(d.program));
  for (auto const& f : d.formulas) {
    for (auto const& a : atoms_of(f)) { out.insert(a); }
  }
  return out;
}

inline std::string lines(const WorldViews& ws) {
  std::string out;
  for (auto const& w : ws) { out += to_string(w) + "\n"; }
  return out;
}

// ---------------------------------------------------------------------------

inline int cmd_solve(const RunConfig& cfg, std::istream& in, std::ostream& out) {
  auto sems = semantics_list(cfg, {Semantics::G94});
  if (sems.size() != 1) { throw UsageError("solve takes a single semantics; use compare for several"); }
  for (auto const& name : cfg.inputs) {
    Document d = load(cfg, name, in);
    WorldViews ws = solve_one(cfg, d, sems[0]);
    if (cfg.json()) {
      Json j{{"input", name},
             {"semantics", to_string(sems[0])},
             {"world_views", to_json(ws)},
             {"stats", {{"atoms", atoms_of_document(d).size()}, {"world_views", ws.size()}}}};
      out << j.dump() << "\n";
    } else {
      out << "% " << name << " under " << to_string(sems[0]) << ": " << ws.size() << " world view"
          << (ws.size() == 1 ? "" : "s") << "\n"
          << lines(ws);
    }
  }
  return kOk;
}

inline int cmd_compare(const RunConfig& cfg, std::istream& in, std::ostream& out) {
  auto sems = semantics_list(cfg, table_semantics());
  for (auto const& name : cfg.inputs) {
    Document d = load(cfg, name, in);
    Json rows = Json::array();
    std::size_t width = 0;
    for (auto s : sems) { width = std::max(width, to_string(s).size()); }
    std::string text;
    for (auto s : sems) {
      std::string row;
      Json j{{"semantics", to_string(s)}};
      try {
        WorldViews ws = solve_one(cfg, d, s);
        j["world_views"] = to_json(ws);
        row = to_string(ws);
      } catch (const UnsupportedError& e) {
        j["unsupported"] = e.what();
        row = "unsupported: " + std::string(e.what());
      } catch (const CapExceeded& e) {
        j["cap_exceeded"] = e.what();
        row = "cap exceeded: " + std::string(e.what());
      }
      rows.push_back(j);
      text += to_string(s) + std::string(width + 2 - to_string(s).size(), ' ') + row + "\n";
    }
    if (cfg.json()) {
      out << Json{{"input", name}, {"rows", rows}}.dump() << "\n";
    } else {
      out << "% " << name << "\n" << text;
    }
  }
  return kOk;
}

inline std::set<Atom> parse_atoms(const std::vector<std::string>& xs) {
  std::set<Atom> out;
  for (auto const& x : xs) { out.insert(make_atom(x)); }
  return out;
}

// ":- B" with B a single subjective literal becomes the constraint "not B",
// so that a program such as {p | q. :- not K p.} is checked as {p | q} with
// the constraint K p.
inline Document lift_constraints(Document d) {
  std::vector<Rule> keep;
  for (auto const& r : d.program.rules) {
    auto const* s = r.head.empty() && r.body.size() == 1 ? std::get_if<SubjectiveLiteral>(&r.body[0]) : nullptr;
    if (!s) {
      keep.push_back(r);
      continue;
    }
    SubjectiveLiteral c = *s;
    c.depth = c.depth == 1 ? 0 : 1;
    d.constraints.push_back(to_formula(c));
  }
  d.program.rules = std::move(keep);
  return d;
}

inline Json to_json(const PropertyReport& r) {
  Json j{{"semantics", to_string(r.semantics)}, {"verdict", to_string(r.verdict)}};
  if (!r.holds()) { j["witness"] = r.witness; }
  j["left"] = to_json(r.left);
  j["right"] = to_json(r.right);
  return j;
}

inline std::vector<PropertyReport> check_reports(const RunConfig& cfg, const Document& d, Semantics s) {
  const Limits limits = cfg.limits();
  if (cfg.property == "constraint-monotonicity" || cfg.property == "cm") {
    Document base = d;
    if (d.constraints.empty() && cfg.constraint.empty()) { base = lift_constraints(d); }
    auto spec = specification(base);
    for (auto const& c : cfg.constraint) { spec.constraints.push_back(parse_formula(c)); }
    std::set<std::string> consts = spec.constants;
    for (auto const& c : constants_of(spec.theory)) { consts.insert(c); }
    for (auto const& c : constants_of(spec.constraints)) { consts.insert(c); }
    return {check_constraint_monotonicity(ground(spec.theory, consts), ground(spec.constraints, consts), s, limits)};
  }
  Program p = program_of(d);
  if (cfg.property == "splitting") {
    std::vector<std::set<Atom>> us;
    if (!cfg.split.empty()) {
      us.push_back(parse_atoms(cfg.split));
      if (!is_splitting_set(us[0], p)) { throw UsageError("not an epistemic splitting set of the program"); }
    } else {
      us = find_splitting_sets(p);
    }
    std::vector<PropertyReport> out;
    for (auto const& u : us) {
      auto r = check_splitting_instance(p, s, u, limits);
      if (!r.holds() || us.size() == 1) { return {r}; }
      if (out.empty()) { out.push_back(r); }
    }
    return out;
  }
  if (cfg.property == "foundedness") { return {check_foundedness(p, s, limits)}; }
  if (cfg.property == "supra-asp") { return {check_supra_asp(p, s, limits)}; }
  if (cfg.property == "supra-s5") { return {check_supra_s5(p, s, limits)}; }
  if (cfg.property == "tightness") {
    PropertyReport r;
    r.semantics = s;
    auto lambda = is_epistemically_tight(p);
    if (!lambda) {
      r.verdict = Verdict::Counterexample;
      r.witness = "no level mapping exists";
    } else {
      std::string w;
      for (auto const& [a, l] : *lambda) { w += (w.empty() ? "" : ", ") + to_string(a) + "=" + std::to_string(l); }
      r.witness = w;
    }
    return {r};
  }
  throw UsageError("unknown property: " + cfg.property);
}

inline int cmd_check(const RunConfig& cfg, std::istream& in, std::ostream& out) {
  auto sems = semantics_list(cfg, table_semantics());
  if (cfg.property == "tightness") { sems.resize(1); }
  for (auto const& name : cfg.inputs) {
    Document d = load(cfg, name, in);
    Json reports = Json::array();
    for (auto s : sems) {
      for (auto const& r : check_reports(cfg, d, s)) {
        if (cfg.json()) {
          Json j = to_json(r);
          if (cfg.property == "tightness") {
            j = Json{{"tight", r.holds()}, {"lambda", r.witness}};
          }
          reports.push_back(j);
        } else if (cfg.property == "tightness") {
          out << name << ": " << (r.holds() ? "tight, " + r.witness : "not tight") << "\n";
        } else {
          out << name << " " << cfg.property << " " << to_string(s) << ": " << to_string(r.verdict);
          if (!r.holds()) { out << "\n  " << r.witness; }
          out << "\n";
        }
      }
    }
    if (cfg.json()) { out << Json{{"input", name}, {"property", cfg.property}, {"reports", reports}}.dump() << "\n"; }
  }
  return kOk;
}

inline int cmd_translate(const RunConfig& cfg, std::istream& in, std::ostream& out) {
  if (cfg.to != "b" && cfg.to != "k") { throw UsageError("--to must be b or k"); }
  for (auto const& name : cfg.inputs) {
    Document d = load(cfg, name, in);
    if (!d.constraints.empty()) { throw UnsupportedError("translate does not take #constraint directives"); }
    auto spec = specification(d);
    std::set<std::string> consts = spec.constants;
    for (auto const& c : constants_of(spec.theory)) { consts.insert(c); }
    Theory t = ground(spec.theory, consts);
    t = cfg.to == "b" ? translate_b(t) : translate_k(t);
    std::string text;
    Json j{{"input", name}, {"to", cfg.to}};
    if (cfg.normalize) {
      text = to_string(normalize_to_program(t));
      j["program"] = text;
    } else {
      Json fs = Json::array();
      for (auto const& f : t) {
        text += "#formula " + to_string(f) + ".\n";
        fs.push_back(to_string(f));
      }
      j["formulas"] = fs;
    }
    if (cfg.json()) {
      out << j.dump() << "\n";
    } else {
      out << text;
    }
  }
  return kOk;
}

inline int cmd_ground(const RunConfig& cfg, std::istream& in, std::ostream& out) {
  for (auto const& name : cfg.inputs) {
    Document d = load(cfg, name, in);
    Program p = ground(d.program);
    if (cfg.json()) {
      out << Json{{"input", name}, {"program", to_string(p)}}.dump() << "\n";
    } else {
      out << to_string(p);
    }
  }
  return kOk;
}

inline int cmd_corpus(const RunConfig& cfg, std::ostream& out) {
  if (cfg.corpus_action == "list") {
    Json list = Json::array();
    for (auto const& e : corpus()) {
      Json exp = Json::array();
      for (auto const& x : e.expected) {
        exp.push_back({{"semantics", to_string(x.semantics)}, {"world_views", x.world_views}, {"source", x.tag}});
      }
      list.push_back({{"name", e.name}, {"summary", e.summary}, {"expected", exp}});
      if (!cfg.json()) { out << e.name << std::string(6 - std::min<std::size_t>(5, e.name.size()), ' ') << e.summary << "\n"; }
    }
    if (cfg.json()) { out << list.dump() << "\n"; }
    return kOk;
  }
  auto const* e = find_corpus(cfg.corpus_name);
  if (!e) { throw UsageError("unknown corpus entry: " + cfg.corpus_name); }
  std::istringstream none;
  std::string text = read_input("corpus:" + e->name, none);
  if (cfg.json()) {
    out << Json{{"name", e->name}, {"text", text}}.dump() << "\n";
  } else {
    out << text;
  }
  return kOk;
}

inline int cmd_campaign(const RunConfig& cfg, std::ostream& out) {
  CampaignConfig c;
  c.seeds = cfg.seeds;
  c.base_seed = cfg.seed;
  c.max_atoms = cfg.random_atoms;
  c.parallel = cfg.parallel;
  c.limits = cfg.limits();
  auto res = run_campaign(c);
  if (cfg.json()) {
    Json cells = Json::array();
    for (auto const& x : res.cells) {
      Json j{{"property", to_string(x.property)},
             {"semantics", to_string(x.semantics)},
             {"claimed", x.claimed},
             {"checks", x.checks},
             {"violations", x.violations}};
      if (x.violations) { j["first_counterexample"] = x.first_counterexample; }
      cells.push_back(j);
    }
    out << Json{{"seeds", c.seeds},
                {"base_seed", c.base_seed},
                {"instances", res.instances},
                {"skipped", res.skipped},
                {"cells", cells}}
               .dump()
        << "\n";
  } else {
    out << "% " << res.instances << " instances, " << res.skipped << " (instance, semantics) skipped at caps\n";
    out << "property                 semantics claimed checks violations\n";
    for (auto const& x : res.cells) {
      std::string p = to_string(x.property);
      std::string s = to_string(x.semantics);
      out << p << std::string(25 - p.size(), ' ') << s << std::string(10 - s.size(), ' ') << (x.claimed ? "yes     " : "no      ")
          << x.checks << std::string(7 - std::min<std::size_t>(6, std::to_string(x.checks).size()), ' ') << x.violations
          << (x.claimed && x.violations ? "  REFUTED" : "") << "\n";
    }
  }
  return res.refuted_claims().empty() ? kOk : 1;
}

}  // namespace detail

inline int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"World views of epistemic logic programs under several semantics"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  auto common = [&](CLI::App* sub, bool takes_input) {
    sub->add_option("--semantics,-s", cfg.semantics, "g94, g11, k15, s16, c19, f15, fk15, m85, s92")->delimiter(',');
    sub->add_option("--format,-f", cfg.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--max-atoms", cfg.max_atoms, "atoms per stable-model search")->check(CLI::PositiveNumber);
    sub->add_option("--f15-max-atoms", cfg.f15_max_atoms, "atoms for the F15 enumeration")->check(CLI::PositiveNumber);
    sub->add_flag("--oracle", cfg.oracle, "use the brute-force oracle (programs of up to 3 atoms)");
    sub->add_option("--parallel,-j", cfg.parallel, "worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--seed", cfg.seed, "random seed");
    sub->add_option("--constants", cfg.constants, "extra constants for grounding")->delimiter(',');
    if (takes_input) { sub->add_option("input", cfg.inputs, "file, '-' for stdin, or corpus:NAME")->required(); }
  };

  auto* solve = app.add_subcommand("solve", "world views under one semantics");
  common(solve, true);
  auto* compare = app.add_subcommand("compare", "world views across semantics");
  common(compare, true);
  auto* check = app.add_subcommand("check", "per-instance property check");
  common(check, true);
  check->add_option("--property,-p", cfg.property,
                    "constraint-monotonicity, splitting, foundedness, supra-asp, supra-s5, tightness")
      ->required();
  check->add_option("--constraint", cfg.constraint, "extra subjective constraint (repeatable)");
  check->add_option("--split", cfg.split, "splitting set atoms")->delimiter(',');
  auto* translate = app.add_subcommand("translate", "B or K translation");
  common(translate, true);
  translate->add_option("--to", cfg.to, "b or k")->required();
  translate->add_flag("--normalize", cfg.normalize, "rewrite into rule form");
  auto* groundc = app.add_subcommand("ground", "instantiate variables");
  common(groundc, true);
  auto* corp = app.add_subcommand("corpus", "bundled example programs");
  common(corp, false);
  corp->add_option("action", cfg.corpus_action, "list or emit")->required()->check(CLI::IsMember({"list", "emit"}));
  corp->add_option("name", cfg.corpus_name, "entry to emit");
  auto* camp = app.add_subcommand("campaign", "property campaign over the corpus and random programs");
  common(camp, false);
  camp->add_option("--seeds", cfg.seeds, "number of random instances");
  camp->add_option("--atoms", cfg.random_atoms, "largest random program")->check(CLI::Range(2, 4));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }
  cfg.command = app.get_subcommands().front()->get_name();

  try {
    if (cfg.command == "solve") { return detail::cmd_solve(cfg, in, out); }
    if (cfg.command == "compare") { return detail::cmd_compare(cfg, in, out); }
    if (cfg.command == "check") { return detail::cmd_check(cfg, in, out); }
    if (cfg.command == "translate") { return detail::cmd_translate(cfg, in, out); }
    if (cfg.command == "ground") { return detail::cmd_ground(cfg, in, out); }
    if (cfg.command == "corpus") {
      if (cfg.corpus_action == "emit" && cfg.corpus_name.empty()) { throw UsageError("corpus emit needs a name"); }
      return detail::cmd_corpus(cfg, out);
    }
    if (cfg.command == "campaign") { return detail::cmd_campaign(cfg, out); }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const UnsupportedError& e) {
    err << "unsupported: " << e.what() << "\n";
    return kUnsupported;
  } catch (const CapExceeded& e) {
    err << "cap exceeded: " << e.what() << "\n";
    return kCap;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace elp::cli
