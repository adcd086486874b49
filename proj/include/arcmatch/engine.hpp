#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>

#include "arcmatch/arc_string.hpp"
#include "arcmatch/gamma_seq.hpp"

namespace arcmatch {

// How sequences retained across a light-child descent are stored.
//   kUncompressed:         plain arrays throughout.
//   kCompressDecompress:   frozen before each light descent, thawed after.
//   kCompressRandomAccess: frozen once; later merges read entries straight
//                          out of the frozen form.
enum class EngineMode {
  kUncompressed,
  kCompressDecompress,
  kCompressRandomAccess,
};

const char* to_string(EngineMode mode);
std::optional<EngineMode> parse_mode(std::string_view name);

struct EngineConfig {
  EngineMode mode = EngineMode::kUncompressed;
  bool collect_stats = true;
  // Decode every frozen sequence right after encoding and compare; slow,
  // meant for test harnesses.
  bool verify_compression = false;
  // Testing hook: sees every sequence the traversal produces.
  std::function<void(const GammaSeq&)> gamma_observer;
};

struct EngineStats {
  // Primitive operation counts over the whole run.
  int64_t initialize = 0;
  int64_t extend = 0;
  int64_t combine = 0;
  int64_t meld = 0;
  int64_t encode_ops = 0;
  int64_t decode_ops = 0;

  // Largest number of sequences alive in the traversal state at any one
  // time (operands inside a single primitive call are not extra).
  int32_t peak_live_gamma = 0;
  // Largest total payload held across recursion boundaries: sampled at each
  // descent as the sum over active ancestors of the bits of the sequences
  // they keep while the descent runs (32 per entry when plain, the frozen
  // layer bits otherwise). Directory metadata is excluded.
  int64_t peak_gamma_bits = 0;

  // Instance shape. The effective text is the input text, sentinel-wrapped
  // when it lacks an outer arc; the pattern is never altered.
  int32_t m = 0;
  int32_t n_input = 0;
  int32_t n_effective = 0;
  int32_t arcs_p = 0;
  int32_t arcs_q_input = 0;
  int32_t arcs_q_effective = 0;
  int32_t lightdepth_max = 0;
  int64_t sum_spaces = 0;  // over all text arcs; always equals n_effective

  double wall_ms = 0.0;
};

struct NapsResult {
  bool is_subsequence = false;
  // Largest k such that the cut after k preserves the pattern's arcs and
  // P[1, k] embeds into the text; equal to |P| exactly when P embeds.
  int32_t gamma_root = 0;
  EngineStats stats;
};

// Decides whether p is a nested arc-preserving subsequence of q.
// O(|p| * |q|) time; sequences retained across the traversal stay within
// O(|p| * log |arcs|) words (bits, in the compressed modes).
NapsResult naps(const ArcAnnotatedString& p, const ArcAnnotatedString& q,
                const EngineConfig& config = {});

// Longest arc-preserving-cut prefix of p that embeds into q; gamma_root of
// the same run.
int32_t longest_prefix(const ArcAnnotatedString& p,
                       const ArcAnnotatedString& q,
                       const EngineConfig& config = {});

}  // namespace arcmatch
