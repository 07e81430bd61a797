#pragma once

// Cross-checks between the independent routes through the theory: structural
// enumeration vs brute force, closure form vs pointwise form, partition
// bijection vs tuple arithmetic, lattice engine vs hand formulas.  Every
// property is deterministic; randomized samples use a fixed seed.

#include <cstdint>
#include <string>
#include <vector>

#include "ncploc/intervals.hpp"

namespace ncploc {

struct PropertyResult {
  std::string name;
  bool pass = false;
  std::string detail;  // short note: sizes checked, first failure, ...
  double seconds = 0.0;
};

struct VerifyOptions {
  int max_points = 8;
  int brute_force_bits = 22;
  std::uint64_t seed = 0x6e63706c6f63ULL;
  std::size_t random_samples = 10000;
};

// Runs every property applicable to this space size; properties that would
// bust a budget are skipped rather than failed.
std::vector<PropertyResult> run_verification(const Space& space,
                                             const VerifyOptions& options = {});

}  // namespace ncploc
