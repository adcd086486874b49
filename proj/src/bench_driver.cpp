#include "arcmatch/bench_driver.hpp"

#include <algorithm>
#include <ostream>
#include <random>

#include "arcmatch/instance_gen.hpp"

namespace arcmatch {

BenchReport run_bench(const BenchOptions& options) {
  std::mt19937_64 rng(options.seed);
  InstanceOptions qo;
  qo.length = options.n;
  qo.arc_target = options.n / 4;
  qo.outer_arc = true;
  const ArcAnnotatedString q = random_instance(qo, rng);

  InstanceOptions po;
  po.length = options.m;
  po.arc_target = options.m / 4;
  const ArcAnnotatedString p = random_instance(po, rng);

  BenchReport report;
  EngineConfig config;
  config.mode = options.mode;
  for (int32_t r = 0; r < std::max(options.repeats, 1); ++r) {
    NapsResult result = naps(p, q, config);
    report.is_subsequence = result.is_subsequence;
    report.gamma_root = result.gamma_root;
    report.runs.push_back(result.stats);
  }

  std::vector<double> times;
  times.reserve(report.runs.size());
  for (const auto& s : report.runs) times.push_back(s.wall_ms);
  std::sort(times.begin(), times.end());
  const size_t h = times.size() / 2;
  report.median_wall_ms = times.size() % 2 == 1
                              ? times[h]
                              : (times[h - 1] + times[h]) / 2.0;
  return report;
}

void print_bench(const BenchReport& report, const BenchOptions& options,
                 std::ostream& out) {
  const EngineStats& shape = report.runs.front();
  out << "m=" << shape.m << "\n"
      << "n=" << shape.n_input << "\n"
      << "mode=" << to_string(options.mode) << "\n"
      << "repeats=" << options.repeats << "\n"
      << "seed=" << options.seed << "\n"
      << "arcs_q=" << shape.arcs_q_effective << "\n"
      << "lightdepth_max=" << shape.lightdepth_max << "\n"
      << "sum_spaces=" << shape.sum_spaces << "\n"
      << "per_seq_bound_bits=" << 2 * shape.m + 1 << "\n"
      << "is_subsequence=" << (report.is_subsequence ? "true" : "false")
      << "\n"
      << "gamma_root=" << report.gamma_root << "\n";
  for (size_t r = 0; r < report.runs.size(); ++r) {
    const EngineStats& s = report.runs[r];
    out << "run=" << r + 1 << " initialize=" << s.initialize
        << " extend=" << s.extend << " combine=" << s.combine
        << " meld=" << s.meld << " encode=" << s.encode_ops
        << " decode=" << s.decode_ops
        << " peak_live_gamma=" << s.peak_live_gamma
        << " peak_gamma_bits=" << s.peak_gamma_bits
        << " wall_ms=" << s.wall_ms << "\n";
  }
  out << "median_wall_ms=" << report.median_wall_ms << "\n";
}

}  // namespace arcmatch
