#include "arcmatch/instance_gen.hpp"

#include <utility>
#include <vector>

#include "arcmatch/error.hpp"

namespace arcmatch {

ArcAnnotatedString random_instance(const InstanceOptions& options,
                                   std::mt19937_64& rng) {
  const int32_t n = options.length;
  if (n < 0) fail(ErrorKind::OutOfRange, "negative instance length");
  if (options.alphabet.empty()) {
    fail(ErrorKind::InvalidBase, "empty alphabet");
  }
  std::string bases(static_cast<size_t>(n), ' ');
  std::uniform_int_distribution<size_t> pick_base(0,
                                                  options.alphabet.size() - 1);
  for (auto& b : bases) b = options.alphabet[pick_base(rng)];

  std::vector<Arc> arcs;
  // Runs of positions not yet touched by any endpoint; an arc drawn inside
  // one run can never cross an arc drawn in another.
  std::vector<std::pair<int32_t, int32_t>> gaps;
  int32_t want = options.arc_target;
  if (options.outer_arc && n >= 2) {
    arcs.push_back({1, n});
    if (n >= 4) gaps.push_back({2, n - 1});
    want -= 1;
  } else if (n >= 2) {
    gaps.push_back({1, n});
  }
  while (want > 0 && !gaps.empty()) {
    std::uniform_int_distribution<size_t> pick_gap(0, gaps.size() - 1);
    const size_t g = pick_gap(rng);
    const auto [lo, hi] = gaps[g];
    gaps[g] = gaps.back();
    gaps.pop_back();
    std::uniform_int_distribution<int32_t> pick_l(lo, hi - 1);
    const int32_t l = pick_l(rng);
    std::uniform_int_distribution<int32_t> pick_r(l + 1, hi);
    const int32_t r = pick_r(rng);
    arcs.push_back({l, r});
    if (l - lo >= 2) gaps.push_back({lo, l - 1});
    if (r - l >= 3) gaps.push_back({l + 1, r - 1});
    if (hi - r >= 2) gaps.push_back({r + 1, hi});
    --want;
  }
  // validate() sorts the arcs and re-checks nestedness.
  return validate(std::move(bases), std::move(arcs));
}

}  // namespace arcmatch
