#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "arcmatch/oracle.hpp"

namespace arcmatch {

struct FuzzOptions {
  int64_t count = 1000;
  int32_t max_m = 8;
  int32_t max_n = 10;
  uint64_t seed = 42;
  // Two letters keep arc endpoint matches frequent at these sizes.
  std::string alphabet = "AU";
  // Definition oracles are skipped for texts longer than this.
  int32_t oracle_cap = kDefaultOracleCap;
};

// Draws random instance pairs and cross-checks all three engine modes
// against the recurrence and, within the cap, the definition oracles.
// Prints the first divergence verbatim plus a "k/count agree" summary.
// Returns the number of divergent instances.
int64_t run_fuzz(const FuzzOptions& options, std::ostream& out);

}  // namespace arcmatch
