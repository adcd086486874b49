#include "arcmatch/fuzz_driver.hpp"

#include <array>
#include <optional>
#include <ostream>
#include <random>

#include "arcmatch/engine.hpp"
#include "arcmatch/instance_gen.hpp"

namespace arcmatch {

namespace {

constexpr std::array<EngineMode, 3> kAllModes = {
    EngineMode::kUncompressed,
    EngineMode::kCompressDecompress,
    EngineMode::kCompressRandomAccess,
};

void print_instance(std::ostream& out, const char* label,
                    const ArcAnnotatedString& s) {
  out << label << ":\n  " << s.bases() << "\n  " << to_dotbracket(s) << "\n";
}

}  // namespace

int64_t run_fuzz(const FuzzOptions& options, std::ostream& out) {
  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<int32_t> draw_m(0, options.max_m);
  std::uniform_int_distribution<int32_t> draw_n(0, options.max_n);
  std::uniform_int_distribution<int32_t> coin(0, 3);

  int64_t divergences = 0;
  for (int64_t t = 1; t <= options.count; ++t) {
    InstanceOptions po;
    po.length = draw_m(rng);
    po.arc_target =
        std::uniform_int_distribution<int32_t>(0, po.length / 2)(rng);
    po.outer_arc = coin(rng) == 0;
    po.alphabet = options.alphabet;
    const ArcAnnotatedString p = random_instance(po, rng);

    InstanceOptions qo;
    qo.length = draw_n(rng);
    qo.arc_target =
        std::uniform_int_distribution<int32_t>(0, qo.length / 2)(rng);
    qo.outer_arc = coin(rng) == 0;
    qo.alphabet = options.alphabet;
    const ArcAnnotatedString q = random_instance(qo, rng);

    std::array<int32_t, 3> roots;
    for (size_t i = 0; i < kAllModes.size(); ++i) {
      EngineConfig config;
      config.mode = kAllModes[i];
      roots[i] = naps(p, q, config).gamma_root;
    }

    GammaRecurrence rec(p, q);
    const int32_t expected = rec.root();

    std::optional<int32_t> by_definition;
    std::optional<bool> by_search;
    if (q.length() <= options.oracle_cap) {
      by_definition = gamma_def(p, q, 1, p.length(), 1, q.length(),
                                options.oracle_cap);
      by_search = embed_exists(p, q, nullptr, options.oracle_cap);
    }

    bool agree = roots[0] == expected && roots[1] == expected &&
                 roots[2] == expected;
    if (by_definition && *by_definition != expected) agree = false;
    if (by_search && *by_search != (expected == p.length())) agree = false;

    if (!agree) {
      ++divergences;
      if (divergences == 1) {
        out << "divergence on instance #" << t << " (seed " << options.seed
            << "):\n";
        print_instance(out, "pattern", p);
        print_instance(out, "text", q);
        for (size_t i = 0; i < kAllModes.size(); ++i) {
          out << "engine[" << to_string(kAllModes[i])
              << "] gamma_root=" << roots[i] << "\n";
        }
        out << "recurrence gamma_root=" << expected << "\n";
        if (by_definition) {
          out << "definition gamma_root=" << *by_definition << "\n";
        }
        if (by_search) {
          out << "embed=" << (*by_search ? "yes" : "no") << "\n";
        }
      }
    }
  }
  out << (options.count - divergences) << "/" << options.count << " agree\n";
  return divergences;
}

}  // namespace arcmatch
