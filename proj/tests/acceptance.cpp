// Acceptance harness: one self-contained check per criterion, one PASS/FAIL
// line each, exit 0 only when every criterion holds. Tolerances are pinned
// as constants next to the checks that use them.

#include <sys/resource.h>

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "arcmatch/arc_string.hpp"
#include "arcmatch/arc_tree.hpp"
#include "arcmatch/bench_driver.hpp"
#include "arcmatch/engine.hpp"
#include "arcmatch/gamma_seq.hpp"
#include "arcmatch/instance_gen.hpp"
#include "arcmatch/oracle.hpp"
#include "arcmatch/succinct.hpp"

using namespace arcmatch;

namespace {

// --- pinned tolerances -----------------------------------------------------
constexpr double kTimeRatioLo = 1.5;    // criterion 8
constexpr double kTimeRatioHi = 3.0;    // criterion 8
constexpr int64_t kInstrumentationBits = 0;  // criterion 9, no allowance
constexpr double kRssRatioMax = 12.0;   // criterion 9
constexpr double kQueryRatioMax = 2.0;  // criterion 10

struct Criterion {
  bool pass = false;
  std::string detail;
};

int32_t ilog2(int64_t x) {
  return static_cast<int32_t>(std::bit_width(static_cast<uint64_t>(x))) - 1;
}

// Every nested arc-annotated string over {A, U} up to the given length.
std::vector<ArcAnnotatedString> all_au_instances(int32_t max_len) {
  std::vector<ArcAnnotatedString> out;
  for (int32_t len = 0; len <= max_len; ++len) {
    for (int32_t mask = 0; mask < (1 << len); ++mask) {
      std::string bases(static_cast<size_t>(len), 'A');
      for (int32_t i = 0; i < len; ++i) {
        if (mask & (1 << i)) bases[static_cast<size_t>(i)] = 'U';
      }
      for (const auto& arcs : enumerate_arcsets(len)) {
        out.push_back(validate(bases, arcs));
      }
    }
  }
  return out;
}

// Shared by criteria 1, 2 (collection) and 4 (verdict): every sequence the
// traversal produces is frozen and checked against the envelope and the
// round-trip identity.
struct EnvelopeAudit {
  int64_t encoded = 0;
  int64_t envelope_violations = 0;
  int64_t roundtrip_violations = 0;

  void observe(const GammaSeq& g) {
    ++encoded;
    const auto c = encode(g);
    const int32_t m = g.m();
    bool ok = c.encoded_length() <= 2 * m + 1;
    ok = ok && c.diff_layer_string().size() == c.end_layer_string().size();
    ok = ok && c.diff_ones() <= m + 1;
    ok = ok && c.end_ones() == m;
    if (!ok) ++envelope_violations;
    const auto back = decode(c);
    if (!std::ranges::equal(back.values(), g.values()) ||
        back.i1() != g.i1() || back.i2() != g.i2()) {
      ++roundtrip_violations;
    }
  }

  bool clean() const {
    return envelope_violations == 0 && roundtrip_violations == 0;
  }
};

// Runs all three modes on one pair; returns false (with a message) on any
// disagreement with the expected root.
bool run_modes_against(const ArcAnnotatedString& p, const ArcAnnotatedString& q,
                       int32_t expected_root, EnvelopeAudit& audit,
                       std::string* msg) {
  static constexpr EngineMode kModes[] = {EngineMode::kUncompressed,
                                          EngineMode::kCompressDecompress,
                                          EngineMode::kCompressRandomAccess};
  for (const auto mode : kModes) {
    EngineConfig cfg;
    cfg.mode = mode;
    if (mode == EngineMode::kUncompressed) {
      cfg.gamma_observer = [&audit](const GammaSeq& g) { audit.observe(g); };
    } else {
      cfg.verify_compression = true;
    }
    const auto r = naps(p, q, cfg);
    if (r.gamma_root != expected_root ||
        r.is_subsequence != (expected_root == p.length())) {
      std::ostringstream os;
      os << "P=" << p.bases() << "/" << to_dotbracket(p) << " Q=" << q.bases()
         << "/" << to_dotbracket(q) << " mode=" << to_string(mode)
         << " got=" << r.gamma_root << " want=" << expected_root;
      *msg = os.str();
      return false;
    }
  }
  return true;
}

Criterion criterion1(EnvelopeAudit& audit) {
  const auto ps = all_au_instances(4);
  const auto qs = all_au_instances(6);
  if (ps.size() != 187 || qs.size() != 4123) {
    return {false, "instance enumeration off: " + std::to_string(ps.size()) +
                       " patterns, " + std::to_string(qs.size()) + " texts"};
  }
  int64_t pairs = 0;
  for (const auto& p : ps) {
    for (const auto& q : qs) {
      ++pairs;
      const bool expected = embed_exists(p, q);
      const int32_t root = gamma_def(p, q, 1, p.length(), 1, q.length());
      if ((root == p.length()) != expected) {
        return {false, "oracles disagree on P=" + p.bases() + "/" +
                           to_dotbracket(p) + " Q=" + q.bases() + "/" +
                           to_dotbracket(q)};
      }
      std::string msg;
      if (!run_modes_against(p, q, root, audit, &msg)) {
        return {false, "divergence after " + std::to_string(pairs) +
                           " pairs: " + msg};
      }
    }
  }
  return {pairs == 771001,
          std::to_string(pairs) + " pairs, 0 divergences, all modes"};
}

Criterion criterion2(EnvelopeAudit& audit) {
  std::mt19937_64 rng(2026);
  int64_t runs = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    InstanceOptions po;
    po.length = static_cast<int32_t>(rng() % 51);
    po.arc_target = static_cast<int32_t>(rng() % (po.length / 2 + 1));
    po.outer_arc = rng() % 2 == 0 && po.length >= 2;
    const auto p = random_instance(po, rng);

    InstanceOptions qo;
    qo.length = static_cast<int32_t>(rng() % 201);
    qo.arc_target = static_cast<int32_t>(rng() % (qo.length / 2 + 1));
    qo.outer_arc = rng() % 2 == 0 && qo.length >= 2;
    const auto q = random_instance(qo, rng);

    GammaRecurrence rec(p, q);
    const int32_t want = rec.root();
    std::string msg;
    if (!run_modes_against(p, q, want, audit, &msg)) {
      return {false, "divergence at trial " + std::to_string(trial) + ": " + msg};
    }
    ++runs;
  }
  return {runs == 1000, "1000 instances, 0 divergences, all modes"};
}

Criterion criterion3() {
  const auto p = parse_dotbracket("CAAUCUGCG", "(.(.).())");
  const auto q = parse_dotbracket("CAGGAUCUGCG", "(.(.(.))())");
  const auto r = naps(p, q, {});
  const auto tree = build_arc_tree(q);
  const auto root_spaces = tree.spaces(tree.root());
  const bool ok = r.is_subsequence && r.gamma_root == 9 &&
                  tree.left(tree.root()) == 1 && tree.right(tree.root()) == 11 &&
                  root_spaces == std::vector<int32_t>{1, 2, 11};
  std::ostringstream os;
  os << "decision=" << (r.is_subsequence ? "true" : "false")
     << " gamma_root=" << r.gamma_root << " spaces(1,11)={";
  for (size_t i = 0; i < root_spaces.size(); ++i) {
    os << (i ? "," : "") << root_spaces[i];
  }
  os << "}";
  return {ok, os.str()};
}

Criterion criterion4(const EnvelopeAudit& audit) {
  std::ostringstream os;
  os << audit.encoded << " sequences frozen, " << audit.envelope_violations
     << " envelope violations, " << audit.roundtrip_violations
     << " round-trip violations";
  return {audit.encoded > 0 && audit.clean(), os.str()};
}

Criterion criterion5() {
  std::mt19937_64 rng(2028);
  int64_t checked = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    const int32_t m = 1 + static_cast<int32_t>(rng() % 256);
    std::vector<int32_t> v(static_cast<size_t>(m));
    int32_t above = m;
    for (int32_t j = m; j >= 1; --j) {
      const int32_t drop = static_cast<int32_t>(rng() % 4);
      v[j - 1] = std::max(j - 1, above - drop);
      above = v[j - 1];
    }
    const int32_t i1 = 1 + static_cast<int32_t>(rng() % 50);
    const GammaSeq g(std::move(v), i1, i1 + static_cast<int32_t>(rng() % 80) - 1);
    const auto c = encode(g);
    for (int32_t k = 1; k <= m; ++k) {
      if (c.access(k) != g.value(k)) {
        return {false, "access mismatch at trial " + std::to_string(trial) +
                           " k=" + std::to_string(k)};
      }
      ++checked;
    }
  }
  return {true, "10000 sequences, " + std::to_string(checked) +
                    " entries, 0 mismatches"};
}

// Criteria 6 and 7 share one batch of instances; generated once.
std::vector<EngineStats> space_batch() {
  std::mt19937_64 rng(2027);
  std::vector<EngineStats> out;
  for (int trial = 0; trial < 100; ++trial) {
    const double u = std::uniform_real_distribution<double>(
        std::log(1e3), std::log(1e5))(rng);
    const int32_t arcs = static_cast<int32_t>(std::lround(std::exp(u)));

    InstanceOptions qo;
    qo.length = 3 * arcs;
    qo.arc_target = arcs;
    qo.outer_arc = true;
    const auto q = random_instance(qo, rng);

    InstanceOptions po;
    po.length = 1 + static_cast<int32_t>(rng() % 16);
    po.arc_target = static_cast<int32_t>(rng() % (po.length / 2 + 1));
    po.outer_arc = false;
    const auto p = random_instance(po, rng);

    out.push_back(naps(p, q, {}).stats);
  }
  return out;
}

Criterion criterion6(const std::vector<EngineStats>& batch) {
  int32_t worst_peak = 0, worst_bound = 0;
  for (const auto& s : batch) {
    if (s.arcs_q_effective < 1000 || s.arcs_q_effective > 100000) {
      return {false, "instance fell outside the arc-count range: " +
                         std::to_string(s.arcs_q_effective)};
    }
    const int32_t bound = 3 * (ilog2(s.arcs_q_effective) + 2);
    if (s.peak_live_gamma > bound) {
      return {false, "peak_live_gamma=" + std::to_string(s.peak_live_gamma) +
                         " > " + std::to_string(bound) + " at |A_Q|=" +
                         std::to_string(s.arcs_q_effective)};
    }
    if (s.peak_live_gamma > worst_peak) {
      worst_peak = s.peak_live_gamma;
      worst_bound = bound;
    }
  }
  return {batch.size() == 100,
          "100 instances, worst peak_live_gamma=" + std::to_string(worst_peak) +
              " (tightest bound hit: " + std::to_string(worst_bound) + ")"};
}

Criterion criterion7(const std::vector<EngineStats>& batch) {
  for (const auto& s : batch) {
    if (s.initialize != 2 * static_cast<int64_t>(s.arcs_q_effective)) {
      return {false, "initialize=" + std::to_string(s.initialize) +
                         " at |A_Q|=" + std::to_string(s.arcs_q_effective)};
    }
    if (s.meld != s.arcs_q_effective) {
      return {false, "meld=" + std::to_string(s.meld) +
                         " at |A_Q|=" + std::to_string(s.arcs_q_effective)};
    }
    const int64_t cap = 2 * static_cast<int64_t>(s.n_effective) +
                        4 * static_cast<int64_t>(s.arcs_q_effective);
    if (s.extend > cap) {
      return {false, "extend=" + std::to_string(s.extend) + " > " +
                         std::to_string(cap)};
    }
  }
  return {batch.size() == 100,
          "100 instances: initialize=2|A_Q|, meld=|A_Q|, extend within cap"};
}

Criterion criterion8() {
  BenchOptions base;
  base.m = 100;
  base.n = 100000;
  base.mode = EngineMode::kUncompressed;
  base.repeats = 5;
  base.seed = 1;

  auto double_n = base;
  double_n.n = 200000;
  auto double_m = base;
  double_m.m = 200;

  const auto rb = run_bench(base);
  const auto rn = run_bench(double_n);
  const auto rm = run_bench(double_m);
  const double ratio_n = rn.median_wall_ms / rb.median_wall_ms;
  const double ratio_m = rm.median_wall_ms / rb.median_wall_ms;

  std::ostringstream os;
  os.precision(3);
  os << "n-doubling ratio=" << ratio_n << ", m-doubling ratio=" << ratio_m
     << " (window [" << kTimeRatioLo << ", " << kTimeRatioHi << "], base "
     << rb.median_wall_ms << " ms)";
  const bool ok = ratio_n >= kTimeRatioLo && ratio_n <= kTimeRatioHi &&
                  ratio_m >= kTimeRatioLo && ratio_m <= kTimeRatioHi;
  return {ok, os.str()};
}

std::pair<ArcAnnotatedString, ArcAnnotatedString> memory_instance(int32_t m,
                                                                  int32_t n) {
  std::mt19937_64 rng(2029);
  InstanceOptions qo;
  qo.length = n;
  qo.arc_target = n / 4;
  qo.outer_arc = true;
  auto q = random_instance(qo, rng);
  InstanceOptions po;
  po.length = m;
  po.arc_target = m / 4;
  po.outer_arc = false;
  auto p = random_instance(po, rng);
  return {std::move(p), std::move(q)};
}

int64_t measure_rss_child(int32_t m, int32_t n) {
  const auto self = std::filesystem::read_symlink("/proc/self/exe").string();
  const std::string cmd =
      self + " --measure-rss " + std::to_string(m) + " " + std::to_string(n);
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return -1;
  long long rss = -1;
  const int got = fscanf(pipe, "%lld", &rss);
  const int status = pclose(pipe);
  if (got != 1 || status != 0) return -1;
  return rss;
}

Criterion criterion9() {
  const auto [p, q] = memory_instance(200, 1000000);
  EngineConfig cfg;
  cfg.mode = EngineMode::kCompressRandomAccess;
  const auto r = naps(p, q, cfg);
  const double log_arcs =
      std::log2(static_cast<double>(r.stats.arcs_q_effective));
  const int64_t bound =
      static_cast<int64_t>(4.0 * r.stats.m * (log_arcs + 2.0)) +
      kInstrumentationBits;
  const bool bits_ok = r.stats.peak_gamma_bits <= bound;

  const int64_t rss_small = measure_rss_child(200, 100000);
  const int64_t rss_large = measure_rss_child(200, 1000000);
  const bool rss_ok = rss_small > 0 && rss_large > 0 &&
                      static_cast<double>(rss_large) <=
                          kRssRatioMax * static_cast<double>(rss_small);

  std::ostringstream os;
  os << "peak_gamma_bits=" << r.stats.peak_gamma_bits << " bound=" << bound
     << " |A_Q|=" << r.stats.arcs_q_effective << "; rss " << rss_small
     << " -> " << rss_large << " KB (10x n), ratio="
     << (rss_small > 0
             ? static_cast<double>(rss_large) / static_cast<double>(rss_small)
             : -1.0);
  return {bits_ok && rss_ok, os.str()};
}

Criterion criterion10() {
  std::mt19937_64 rng(2031);
  constexpr int64_t kSmall = 10000, kLarge = 1000000;
  constexpr int kQueries = 100000;

  double mean_ns[2] = {0, 0};
  int which = 0;
  for (const int64_t len : {kSmall, kLarge}) {
    BitVector::Builder b;
    std::vector<int64_t> prefix{0};
    std::vector<int64_t> ones;
    for (int64_t i = 1; i <= len; ++i) {
      const bool bit = rng() % 2 == 0;
      b.push_back(bit);
      prefix.push_back(prefix.back() + (bit ? 1 : 0));
      if (bit) ones.push_back(i);
    }
    const auto v = b.finish();

    for (int qn = 0; qn < kQueries; ++qn) {
      const int64_t k = static_cast<int64_t>(rng() % (len + 1));
      if (v.rank(k) != prefix[static_cast<size_t>(k)]) {
        return {false, "rank mismatch at L=" + std::to_string(len)};
      }
      const auto s = static_cast<int64_t>(rng() % ones.size());
      if (v.select(s + 1) != ones[static_cast<size_t>(s)]) {
        return {false, "select mismatch at L=" + std::to_string(len)};
      }
    }

    // Timing: pre-drawn queries, checksummed, median of 5 sweeps.
    std::vector<int64_t> rank_q(kQueries), select_q(kQueries);
    for (int i = 0; i < kQueries; ++i) {
      rank_q[static_cast<size_t>(i)] = static_cast<int64_t>(rng() % (len + 1));
      select_q[static_cast<size_t>(i)] =
          static_cast<int64_t>(rng() % ones.size()) + 1;
    }
    int64_t checksum = 0;
    std::vector<double> sweeps;
    for (int rep = 0; rep < 5; ++rep) {
      const auto t0 = std::chrono::steady_clock::now();
      for (int i = 0; i < kQueries; ++i) {
        checksum += v.rank(rank_q[static_cast<size_t>(i)]);
        checksum += v.select(select_q[static_cast<size_t>(i)]);
      }
      const auto t1 = std::chrono::steady_clock::now();
      sweeps.push_back(
          std::chrono::duration<double, std::nano>(t1 - t0).count() /
          (2.0 * kQueries));
    }
    std::sort(sweeps.begin(), sweeps.end());
    mean_ns[which++] = sweeps[2];
    static volatile int64_t sink;
    sink = checksum;  // keep the timed loops observable
  }

  const double ratio = std::max(mean_ns[0], mean_ns[1]) /
                       std::min(mean_ns[0], mean_ns[1]);
  std::ostringstream os;
  os.precision(3);
  os << "0 mismatches in " << 2 * kQueries << " queries per length; "
     << mean_ns[0] << " ns vs " << mean_ns[1] << " ns per query, ratio="
     << ratio;
  return {ratio <= kQueryRatioMax, os.str()};
}

int run_measure_rss(int32_t m, int32_t n) {
  const auto [p, q] = memory_instance(m, n);
  EngineConfig cfg;
  cfg.mode = EngineMode::kCompressRandomAccess;
  naps(p, q, cfg);
  rusage usage{};
  getrusage(RUSAGE_SELF, &usage);
  std::cout << usage.ru_maxrss << "\n";  // KB on Linux
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc == 4 && std::strcmp(argv[1], "--measure-rss") == 0) {
    return run_measure_rss(std::atoi(argv[2]), std::atoi(argv[3]));
  }
  int only = 0;
  if (argc == 3 && std::strcmp(argv[1], "--only") == 0) {
    only = std::atoi(argv[2]);
  }

  EnvelopeAudit audit;
  std::vector<EngineStats> batch;
  int failures = 0;
  for (int id = 1; id <= 10; ++id) {
    if (only != 0 && id != only) continue;
    Criterion c;
    try {
      switch (id) {
        case 1: c = criterion1(audit); break;
        case 2: c = criterion2(audit); break;
        case 3: c = criterion3(); break;
        case 4: c = criterion4(audit); break;
        case 5: c = criterion5(); break;
        case 6:
          batch = space_batch();
          c = criterion6(batch);
          break;
        case 7: c = criterion7(batch); break;
        case 8: c = criterion8(); break;
        case 9: c = criterion9(); break;
        case 10: c = criterion10(); break;
      }
    } catch (const std::exception& e) {
      c = {false, std::string("exception: ") + e.what()};
    }
    std::cout << "criterion " << id << ": " << (c.pass ? "PASS" : "FAIL")
              << " (" << c.detail << ")" << std::endl;
    if (!c.pass) ++failures;
  }
  if (only == 0) {
    std::cout << (10 - failures) << "/10 criteria passed" << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
