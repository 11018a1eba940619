#pragma once

#include <cstddef>

namespace elp {

// Resource caps shared by the engines.
struct Limits {
  std::size_t max_atoms = 18;         // atoms per stable-model search
  std::size_t f15_max_atoms = 4;      // F15 brute-force enumeration
  std::size_t oracle_max_atoms = 3;   // brute-force world-view oracle
  std::size_t max_guess_bits = 24;    // maximal subjective subformulas per theory
  std::size_t max_unfounded_pairs = std::size_t{1} << 23;
};

}  // namespace elp
