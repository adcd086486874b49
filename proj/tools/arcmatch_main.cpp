#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>

#include "CLI11.hpp"
#include "json.hpp"

#include "arcmatch/bench_driver.hpp"
#include "arcmatch/engine.hpp"
#include "arcmatch/fuzz_driver.hpp"
#include "arcmatch/succinct.hpp"

using nlohmann::ordered_json;

namespace {

arcmatch::DotBracketRecord first_record(const std::string& path) {
  auto records = arcmatch::read_dotbracket_file(path);
  if (records.empty()) {
    arcmatch::fail(arcmatch::ErrorKind::MalformedEncoding,
                   path + ": no dot-bracket records");
  }
  return std::move(records.front());
}

arcmatch::EngineMode mode_from(const std::string& name) {
  auto mode = arcmatch::parse_mode(name);
  if (!mode) {
    arcmatch::fail(arcmatch::ErrorKind::MalformedEncoding,
                   "unknown mode '" + name +
                       "' (expected uncompressed, compress-decompress, or "
                       "compress-random-access)");
  }
  return *mode;
}

void stats_lines(const arcmatch::EngineStats& s, std::ostream& out) {
  out << "initialize=" << s.initialize << "\n"
      << "extend=" << s.extend << "\n"
      << "combine=" << s.combine << "\n"
      << "meld=" << s.meld << "\n"
      << "encode=" << s.encode_ops << "\n"
      << "decode=" << s.decode_ops << "\n"
      << "peak_live_gamma=" << s.peak_live_gamma << "\n"
      << "peak_gamma_bits=" << s.peak_gamma_bits << "\n"
      << "n_effective=" << s.n_effective << "\n"
      << "arcs_q_effective=" << s.arcs_q_effective << "\n"
      << "lightdepth_max=" << s.lightdepth_max << "\n"
      << "sum_spaces=" << s.sum_spaces << "\n"
      << "wall_ms=" << s.wall_ms << "\n";
}

ordered_json stats_json(const arcmatch::EngineStats& s) {
  ordered_json j;
  j["initialize"] = s.initialize;
  j["extend"] = s.extend;
  j["combine"] = s.combine;
  j["meld"] = s.meld;
  j["encode"] = s.encode_ops;
  j["decode"] = s.decode_ops;
  j["peak_live_gamma"] = s.peak_live_gamma;
  j["peak_gamma_bits"] = s.peak_gamma_bits;
  j["n_effective"] = s.n_effective;
  j["arcs_q_effective"] = s.arcs_q_effective;
  j["lightdepth_max"] = s.lightdepth_max;
  j["sum_spaces"] = s.sum_spaces;
  j["wall_ms"] = s.wall_ms;
  return j;
}

struct CheckArgs {
  std::string pattern_file, text_file, mode;
  bool stats = false;
  bool json = false;
  bool dump_layers = false;
};

int cmd_check(const CheckArgs& args) {
  const auto pattern = first_record(args.pattern_file);
  const auto text = first_record(args.text_file);
  arcmatch::EngineConfig config;
  config.mode = mode_from(args.mode);
  arcmatch::GammaSeq root;
  if (args.dump_layers) {
    // The last sequence the traversal produces is the root table.
    config.gamma_observer = [&root](const arcmatch::GammaSeq& g) { root = g; };
  }
  const arcmatch::NapsResult result =
      arcmatch::naps(pattern.value, text.value, config);
  if (args.json) {
    ordered_json j;
    j["pattern"] = pattern.id;
    j["text"] = text.id;
    j["mode"] = arcmatch::to_string(config.mode);
    j["is_subsequence"] = result.is_subsequence;
    j["gamma_root"] = result.gamma_root;
    j["m"] = result.stats.m;
    j["n"] = result.stats.n_input;
    j["arcs_p"] = result.stats.arcs_p;
    j["arcs_q"] = result.stats.arcs_q_input;
    if (args.stats) j["stats"] = stats_json(result.stats);
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "pattern=" << pattern.id << "\n"
              << "text=" << text.id << "\n"
              << "mode=" << arcmatch::to_string(config.mode) << "\n"
              << "is_subsequence="
              << (result.is_subsequence ? "true" : "false") << "\n"
              << "gamma_root=" << result.gamma_root << "\n"
              << "m=" << result.stats.m << "\n"
              << "n=" << result.stats.n_input << "\n"
              << "arcs_p=" << result.stats.arcs_p << "\n"
              << "arcs_q=" << result.stats.arcs_q_input << "\n";
    if (args.stats) stats_lines(result.stats, std::cout);
  }
  if (args.dump_layers) {
    const auto frozen = arcmatch::encode(root);
    std::cout << "root_diff_layer=" << frozen.diff_layer_string() << "\n"
              << "root_end_layer=" << frozen.end_layer_string() << "\n";
  }
  return result.is_subsequence ? 0 : 1;
}

int cmd_prefix(const CheckArgs& args) {
  const auto pattern = first_record(args.pattern_file);
  const auto text = first_record(args.text_file);
  arcmatch::EngineConfig config;
  config.mode = mode_from(args.mode);
  std::cout << arcmatch::longest_prefix(pattern.value, text.value, config)
            << "\n";
  return 0;
}

int cmd_bench(const arcmatch::BenchOptions& options, bool json) {
  const arcmatch::BenchReport report = arcmatch::run_bench(options);
  if (json) {
    for (size_t r = 0; r < report.runs.size(); ++r) {
      ordered_json j;
      j["run"] = r + 1;
      j["m"] = report.runs[r].m;
      j["n"] = report.runs[r].n_input;
      j["mode"] = arcmatch::to_string(options.mode);
      j["seed"] = options.seed;
      j["per_seq_bound_bits"] = 2 * report.runs[r].m + 1;
      j["stats"] = stats_json(report.runs[r]);
      std::cout << j.dump() << "\n";
    }
    ordered_json j;
    j["median_wall_ms"] = report.median_wall_ms;
    std::cout << j.dump() << "\n";
  } else {
    print_bench(report, options, std::cout);
  }
  return 0;
}

// Quick built-in cross-check: a short oracle-backed fuzz run plus a
// round-trip of the structured report through the parser.
int cmd_selftest() {
  arcmatch::FuzzOptions options;
  options.count = 50;
  options.max_m = 6;
  options.max_n = 9;
  options.seed = 7;
  std::ostringstream sink;
  if (arcmatch::run_fuzz(options, sink) != 0) {
    std::cout << "selftest failed:\n" << sink.str();
    return 1;
  }
  const auto p = arcmatch::parse_dotbracket("CAAUCUGCG", "(.(.).())");
  ordered_json j;
  j["is_subsequence"] = true;
  j["gamma_root"] = p.length();
  const ordered_json back = ordered_json::parse(j.dump());
  if (back != j || back["gamma_root"] != p.length()) {
    std::cout << "selftest failed: report does not round-trip\n";
    return 1;
  }
  std::cout << "selftest ok\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"nested arc-preserving subsequence matcher"};
  app.require_subcommand(1);

  const char* env_mode = std::getenv("ARCMATCH_MODE");
  const std::string default_mode = env_mode ? env_mode : "uncompressed";
  const std::string mode_help =
      "uncompressed | compress-decompress | compress-random-access";

  CheckArgs check_args{.pattern_file = "", .text_file = "",
                       .mode = default_mode};
  auto* check = app.add_subcommand(
      "check", "decide whether the pattern embeds into the text");
  check->add_option("pattern_file", check_args.pattern_file)->required();
  check->add_option("text_file", check_args.text_file)->required();
  check->add_option("--mode", check_args.mode, mode_help);
  check->add_flag("--stats", check_args.stats, "print operation counters");
  check->add_flag("--json", check_args.json, "one structured record");
  check->add_flag("--dump-layers", check_args.dump_layers,
                  "debug: print the frozen bit layers of the final table");

  CheckArgs prefix_args{.pattern_file = "", .text_file = "",
                        .mode = default_mode};
  auto* prefix = app.add_subcommand(
      "prefix", "longest pattern prefix that embeds at an arc-preserving cut");
  prefix->add_option("pattern_file", prefix_args.pattern_file)->required();
  prefix->add_option("text_file", prefix_args.text_file)->required();
  prefix->add_option("--mode", prefix_args.mode, mode_help);

  arcmatch::FuzzOptions fuzz_options;
  auto* fuzz = app.add_subcommand(
      "fuzz", "cross-check the engine against the reference oracles");
  fuzz->add_option("--count", fuzz_options.count);
  fuzz->add_option("--max-m", fuzz_options.max_m);
  fuzz->add_option("--max-n", fuzz_options.max_n);
  fuzz->add_option("--seed", fuzz_options.seed);

  arcmatch::BenchOptions bench_options;
  std::string bench_mode = default_mode;
  bool bench_json = false;
  auto* bench = app.add_subcommand("bench", "timed runs on seeded instances");
  bench->add_option("--m", bench_options.m);
  bench->add_option("--n", bench_options.n);
  bench->add_option("--mode", bench_mode, mode_help);
  bench->add_option("--repeats", bench_options.repeats);
  bench->add_option("--seed", bench_options.seed);
  bench->add_flag("--json", bench_json, "one structured record per run");

  auto* selftest =
      app.add_subcommand("selftest", "built-in oracle and report checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (check->parsed()) return cmd_check(check_args);
    if (prefix->parsed()) return cmd_prefix(prefix_args);
    if (fuzz->parsed()) {
      return arcmatch::run_fuzz(fuzz_options, std::cout) == 0 ? 0 : 1;
    }
    if (bench->parsed()) {
      bench_options.mode = mode_from(bench_mode);
      return cmd_bench(bench_options, bench_json);
    }
    if (selftest->parsed()) return cmd_selftest();
  } catch (const arcmatch::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
