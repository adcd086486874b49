#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "arcmatch/arc_string.hpp"

namespace arcmatch {

// Reference implementations, deliberately independent of the production
// engine: plain backtracking and a literal recurrence. Ground truth for
// tests; never called on anything large.

inline constexpr int32_t kDefaultOracleCap = 24;

// Decides whether the pattern window embeds into the text window as an
// arc-preserving subsequence (base equality, order, and arcs matched both
// ways). Fills *witness with the image of each pattern position when given.
// Refuses text windows larger than cap.
bool embed_exists(const ArcView& p, const ArcView& q,
                  std::vector<int32_t>* witness = nullptr,
                  int32_t cap = kDefaultOracleCap);
bool embed_exists(const ArcAnnotatedString& p, const ArcAnnotatedString& q,
                  std::vector<int32_t>* witness = nullptr,
                  int32_t cap = kDefaultOracleCap);

// gamma by definition: the largest k in [j1-1, j2] such that the cut after k
// preserves the arcs of P[j1, j2] and P[j1, k] embeds into Q[i1, i2].
int32_t gamma_def(const ArcAnnotatedString& p, const ArcAnnotatedString& q,
                  int32_t j1, int32_t j2, int32_t i1, int32_t i2,
                  int32_t cap = kDefaultOracleCap);

// gamma by the case-by-case recurrence, memoized on the 4-tuple. No size
// cap; handles empty text windows (i1 == i2 + 1) and inputs without outer
// arcs.
class GammaRecurrence {
 public:
  GammaRecurrence(const ArcAnnotatedString& p, const ArcAnnotatedString& q);

  int32_t operator()(int32_t j1, int32_t j2, int32_t i1, int32_t i2);

  // gamma(1, |P|, 1, |Q|); |P| when and only when P embeds into Q.
  int32_t root();

  size_t memo_size() const { return memo_.size(); }

 private:
  int32_t eval(int32_t j1, int32_t j2, int32_t i1, int32_t i2);

  const ArcAnnotatedString* p_;
  const ArcAnnotatedString* q_;
  std::unordered_map<uint64_t, int32_t> memo_;
};

// All nested endpoint-disjoint arc sets on len positions (Motzkin-counted:
// 1, 1, 2, 4, 9, 21, 51 for len = 0..6). Test and acceptance harness fuel.
std::vector<std::vector<Arc>> enumerate_arcsets(int32_t len);

}  // namespace arcmatch
