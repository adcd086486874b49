#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "arcmatch/engine.hpp"

namespace arcmatch {

struct BenchOptions {
  int32_t m = 100;
  int32_t n = 100000;
  EngineMode mode = EngineMode::kUncompressed;
  int32_t repeats = 5;
  uint64_t seed = 1;
};

// Stats of every repeat on the same seeded instance (text arc density n/4,
// outer arc present so no wrapping blurs the sizes).
struct BenchReport {
  bool is_subsequence = false;
  int32_t gamma_root = 0;
  std::vector<EngineStats> runs;
  double median_wall_ms = 0.0;
};

BenchReport run_bench(const BenchOptions& options);

// Plain rendering, one key per line per run, wall time fields last.
void print_bench(const BenchReport& report, const BenchOptions& options,
                 std::ostream& out);

}  // namespace arcmatch
