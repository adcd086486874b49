#include "arcmatch/arc_tree.hpp"

#include <algorithm>
#include <numeric>

namespace arcmatch {

int32_t ArcTree::max_lightdepth() const {
  int32_t best = 0;
  for (int32_t d : lightdepth_) best = std::max(best, d);
  return best;
}

std::vector<int32_t> ArcTree::spaces(int32_t v) const {
  std::vector<int32_t> out;
  int32_t pos = left_[v];
  for (int32_t k = 1; k <= child_count(v); ++k) {
    int32_t c = child(v, k);
    while (pos < left_[c]) out.push_back(pos++);
    pos = right_[c] + 1;
  }
  while (pos <= right_[v]) out.push_back(pos++);
  return out;
}

std::vector<int32_t> ArcTree::preorder() const {
  // Arcs sorted by left endpoint are already in preorder.
  std::vector<int32_t> order(node_count());
  std::iota(order.begin(), order.end(), 0);
  return order;
}

ArcTree build_arc_tree(const ArcAnnotatedString& s) {
  if (!s.has_outer_arc()) {
    fail(ErrorKind::MissingRootArc,
         "no arc spans [1," + std::to_string(s.length()) + "]");
  }
  const auto& arcs = s.arcs();
  const auto a = static_cast<int32_t>(arcs.size());

  ArcTree t;
  t.left_.resize(a);
  t.right_.resize(a);
  t.parent_.assign(a, ArcTree::kNone);
  for (int32_t v = 0; v < a; ++v) {
    t.left_[v] = arcs[v].first;
    t.right_[v] = arcs[v].second;
  }

  // One pass over left-endpoint order; a stack of still-open arcs yields
  // parents directly because the set is nested.
  std::vector<int32_t> open;
  std::vector<int32_t> child_count(a, 0);
  for (int32_t v = 0; v < a; ++v) {
    while (!open.empty() && t.right_[open.back()] < t.left_[v]) open.pop_back();
    if (!open.empty()) {
      t.parent_[v] = open.back();
      ++child_count[open.back()];
    }
    open.push_back(v);
  }

  t.child_begin_.resize(a);
  t.child_end_.resize(a);
  int32_t offset = 0;
  for (int32_t v = 0; v < a; ++v) {
    t.child_begin_[v] = t.child_end_[v] = offset;
    offset += child_count[v];
  }
  t.children_.resize(offset);
  for (int32_t v = 1; v < a; ++v) {
    // Ascending v keeps each child list in left-to-right order.
    t.children_[t.child_end_[t.parent_[v]]++] = v;
  }

  // Children always rank above their parent, so one descending sweep
  // accumulates subtree sizes without recursion.
  t.size_.assign(a, 1);
  for (int32_t v = a - 1; v >= 1; --v) t.size_[t.parent_[v]] += t.size_[v];

  heavy_decompose(t);
  return t;
}

void heavy_decompose(ArcTree& t) {
  const int32_t a = t.node_count();
  t.heavy_.assign(a, ArcTree::kNone);
  t.heavy_index_.assign(a, 0);
  for (int32_t v = 0; v < a; ++v) {
    int32_t best = ArcTree::kNone, best_size = 0, best_k = 0;
    for (int32_t k = 1; k <= t.child_count(v); ++k) {
      int32_t c = t.child(v, k);
      if (t.size_[c] > best_size) {  // strict: leftmost wins ties
        best = c;
        best_size = t.size_[c];
        best_k = k;
      }
    }
    t.heavy_[v] = best;
    t.heavy_index_[v] = best_k;
  }
  t.lightdepth_.assign(a, 0);
  for (int32_t v = 1; v < a; ++v) {
    int32_t p = t.parent_[v];
    t.lightdepth_[v] = t.lightdepth_[p] + (t.heavy_[p] == v ? 0 : 1);
  }
}

}  // namespace arcmatch
