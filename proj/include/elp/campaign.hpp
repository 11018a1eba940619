#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <map>
#include <string>
#include <thread>
#include <vector>

#include "elp/corpus.hpp"
#include "elp/properties.hpp"
#include "elp/random.hpp"

namespace elp {

struct CampaignConfig {
  std::size_t seeds = 500;
  std::uint64_t base_seed = 0;
  std::size_t max_atoms = 3;     // random programs use 2..max_atoms atoms
  std::size_t corpus_atoms = 4;  // corpus entries above this are left out
  unsigned parallel = 1;
  Limits limits;
};

struct CampaignInstance {
  std::string name;
  Program program;
  Theory constraints;
  std::set<Atom> split;
};

struct CampaignCell {
  Property property;
  Semantics semantics;
  bool claimed = false;
  std::size_t checks = 0;
  std::size_t violations = 0;
  std::string first_counterexample;  // instance name and witness
};

struct CampaignResult {
  std::vector<CampaignCell> cells;  // property-major, semantics in table order
  std::size_t instances = 0;
  std::size_t skipped = 0;          // (instance, semantics) pairs stopped by a cap

  // Violations in a cell the table marks as satisfied.
  std::vector<const CampaignCell*> refuted_claims() const {
    std::vector<const CampaignCell*> out;
    for (auto const& c : cells) {
      if (c.claimed && c.violations) { out.push_back(&c); }
    }
    return out;
  }
};

inline const std::vector<Property>& campaign_properties() {
  static const std::vector<Property> ps = {Property::SupraS5, Property::SupraAsp, Property::ConstraintMonotonicity,
                                           Property::Splitting, Property::Foundedness};
  return ps;
}

// Corpus entries, the bundled counterexamples, then one random instance per
// seed.
inline std::vector<CampaignInstance> campaign_instances(const CampaignConfig& c) {
  std::vector<CampaignInstance> out;
  Theory kp{parse_formula("K p")};
  for (auto const& e : corpus()) {
    Program p = corpus_program(e.name);
    if (atoms_of(p).size() > c.corpus_atoms) { continue; }
    out.push_back({e.name, p, kp, random_splitting_set(c.base_seed, p)});
  }
  out.push_back({"p|q with K p", canonical(parse_program("p | q.")), kp, {make_atom("p"), make_atom("q")}});
  out.push_back({"P4 split at {p,q}", corpus_program("P4"), kp, {make_atom("p"), make_atom("q")}});
  for (std::size_t k = 0; k < c.seeds; ++k) {
    std::uint64_t seed = c.base_seed + k;
    RandomConfig rc;
    rc.atoms = 2 + seed % std::max<std::size_t>(1, c.max_atoms - 1);
    rc.modal = seed % 5 != 0;
    Program p = random_program(seed, rc);
    out.push_back({"seed " + std::to_string(seed), p, {random_constraint(seed, rc)}, random_splitting_set(seed, p)});
  }
  return out;
}

struct InstanceOutcome {
  std::vector<PropertyReport> reports;
  std::size_t skipped = 0;
};

inline InstanceOutcome check_instance(const CampaignInstance& in, const Limits& limits) {
  InstanceOutcome out;
  for (Semantics s : table_semantics()) {
    std::vector<PropertyReport> rs;
    try {
      rs.push_back(check_supra_s5(in.program, s, limits));
      if (is_objective(in.program)) { rs.push_back(check_supra_asp(in.program, s, limits)); }
      rs.push_back(check_constraint_monotonicity(in.program, in.constraints, s, limits));
      rs.push_back(check_splitting_instance(in.program, s, in.split, limits));
      rs.push_back(check_foundedness(in.program, s, limits));
    } catch (const CapExceeded&) {
      ++out.skipped;
      continue;
    }
    for (auto& r : rs) { out.reports.push_back(std::move(r)); }
  }
  return out;
}

// Instances are independent; results are merged in instance order so the
// outcome does not depend on the thread count.
inline CampaignResult run_campaign(const CampaignConfig& c) {
  auto instances = campaign_instances(c);
  std::vector<InstanceOutcome> outcomes(instances.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k; (k = next++) < instances.size();) { outcomes[k] = check_instance(instances[k], c.limits); }
  };
  unsigned n = std::max(1u, c.parallel);
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n; ++t) { pool.emplace_back(worker); }
  worker();
  for (auto& t : pool) { t.join(); }

  CampaignResult res;
  res.instances = instances.size();
  std::map<std::pair<Property, Semantics>, std::size_t> index;
  for (auto prop : campaign_properties()) {
    for (auto s : table_semantics()) {
      index[{prop, s}] = res.cells.size();
      res.cells.push_back({prop, s, claimed_property(prop, s), 0, 0, {}});
    }
  }
  for (std::size_t k = 0; k < instances.size(); ++k) {
    res.skipped += outcomes[k].skipped;
    for (auto const& r : outcomes[k].reports) {
      auto& cell = res.cells[index[{r.property, r.semantics}]];
      ++cell.checks;
      if (!r.holds() && !cell.violations++) { cell.first_counterexample = instances[k].name + ": " + r.witness; }
    }
  }
  return res;
}

}  // namespace elp
