#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "arcmatch/arc_string.hpp"

namespace arcmatch {

// Pattern fixture shared by all sequence operations: bases plus an O(1)
// partner lookup. The suffix end is always |P|, so "j opens an arc that
// ends inside the suffix" reduces to "j is a left arc endpoint".
class PatternContext {
 public:
  explicit PatternContext(const ArcAnnotatedString& p);

  const ArcAnnotatedString& pattern() const { return *p_; }
  int32_t m() const { return m_; }
  char base(int32_t j) const { return p_->base(j); }

  // Right endpoint of the arc opened at j, or 0 when j opens none.
  int32_t opens_arc(int32_t j) const {
    int32_t r = partner_[j];
    return r > j ? r : 0;
  }

 private:
  const ArcAnnotatedString* p_;
  int32_t m_;
  std::vector<int32_t> partner_;  // index j directly (entry 0 unused)
};

// For a text window [i1, i2], entry j1 is the largest prefix end k such
// that P[j1, k] embeds into the window and the cut after k preserves the
// arcs of the suffix P[j1, m]. Entries are a monotone staircase:
// j1 - 1 <= value(j1) <= value(j1 + 1) <= m, with value(m + 1) = m by
// convention. i1 == i2 + 1 denotes the empty window (all entries j1 - 1).
class GammaSeq {
 public:
  GammaSeq() = default;
  GammaSeq(std::vector<int32_t> values, int32_t i1, int32_t i2);

  static GammaSeq empty_window(int32_t m, int32_t boundary);

  int32_t m() const { return static_cast<int32_t>(values_.size()); }
  int32_t i1() const { return i1_; }
  int32_t i2() const { return i2_; }
  bool covers_empty_window() const { return i1_ > i2_; }

  // j1 in [1, m + 1]; the sentinel entry m + 1 reads m.
  int32_t value(int32_t j1) const {
    return j1 > m() ? m() : values_[j1 - 1];
  }
  std::span<const int32_t> values() const { return values_; }

  // Throws InvalidSequence unless the staircase shape holds.
  void check_shape() const;

 private:
  friend void extend_inplace(const PatternContext&, const ArcAnnotatedString&,
                             GammaSeq&, int32_t);
  std::vector<int32_t> values_;
  int32_t i1_ = 1, i2_ = 0;
};

// Reader concept used by the merge kernels: value(j1) over [1, m + 1].
struct PlainGammaReader {
  const GammaSeq* g;
  int32_t value(int32_t j1) const { return g->value(j1); }
};

// --- The four sequence primitives -----------------------------------------
//
// Debug builds check the staircase shape of every result.

// Window [i, i]: entry j1 is j1 when P[j1] matches the single base and
// opens no arc, else j1 - 1.
GammaSeq init_single(const PatternContext& ctx, const ArcAnnotatedString& q,
                     int32_t i);

// Empty window [boundary, boundary - 1].
GammaSeq init_empty(int32_t m, int32_t boundary);

// Grows the window one base to the left. Requires that q's position i1
// opens no arc ending inside the window.
GammaSeq extend(const PatternContext& ctx, const ArcAnnotatedString& q,
                const GammaSeq& g, int32_t i1);
void extend_inplace(const PatternContext& ctx, const ArcAnnotatedString& q,
                    GammaSeq& g, int32_t i1);

// Joins adjacent windows [i1, r] and [r + 1, i2] where (i1, r) is an arc:
// out(j1) = right(left(j1) + 1). Works for any reader pair; the engine
// feeds it compressed operands.
template <class LeftReader, class RightReader>
std::vector<int32_t> combine_values(const LeftReader& left,
                                    const RightReader& right, int32_t m) {
  std::vector<int32_t> out(m);
  for (int32_t j1 = 1; j1 <= m; ++j1) {
    out[j1 - 1] = right.value(left.value(j1) + 1);
  }
  return out;
}

GammaSeq combine(const GammaSeq& left, const GammaSeq& right);

// Closes the arc (i1, i2) around the three inner windows
//   a = [i1 + 1, i2],  b = [i1, i2 - 1],  c = [i1 + 1, i2 - 1].
GammaSeq meld(const PatternContext& ctx, const ArcAnnotatedString& q,
              const GammaSeq& a, const GammaSeq& b, const GammaSeq& c,
              int32_t i1, int32_t i2);

}  // namespace arcmatch
