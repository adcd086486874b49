#pragma once

#include <cstdint>
#include <vector>

#include "arcmatch/arc_string.hpp"

namespace arcmatch {

// Nesting tree of an arc set that contains the outer arc (1, n). Nodes are
// arcs, identified by their rank in left-endpoint order; the outer arc is
// node 0. Stored as flat arrays; child lists are in left-to-right order.
class ArcTree {
 public:
  static constexpr int32_t kNone = -1;

  int32_t node_count() const { return static_cast<int32_t>(left_.size()); }
  int32_t root() const { return 0; }

  int32_t left(int32_t v) const { return left_[v]; }
  int32_t right(int32_t v) const { return right_[v]; }
  int32_t parent(int32_t v) const { return parent_[v]; }

  // Number of arcs in the subtree rooted at v, the node itself included.
  int32_t subtree_size(int32_t v) const { return size_[v]; }

  int32_t child_count(int32_t v) const {
    return child_end_[v] - child_begin_[v];
  }
  // k-th child of v, 1-based, left to right.
  int32_t child(int32_t v, int32_t k) const {
    return children_[child_begin_[v] + k - 1];
  }
  bool is_leaf(int32_t v) const { return child_count(v) == 0; }

  // Child with the largest subtree, leftmost on ties; kNone for leaves.
  int32_t heavy_child(int32_t v) const { return heavy_[v]; }
  // 1-based position of the heavy child among v's children; 0 for leaves.
  int32_t heavy_index(int32_t v) const { return heavy_index_[v]; }

  // Number of non-heavy edges on the path from v up to the root.
  int32_t lightdepth(int32_t v) const { return lightdepth_[v]; }
  int32_t max_lightdepth() const;

  // Positions inside arc v that lie in no child arc's span, in increasing
  // order. Endpoints of v itself are included; the sets over all nodes
  // partition [1, n].
  std::vector<int32_t> spaces(int32_t v) const;

  // Nodes in preorder, children left to right (equals node id order).
  std::vector<int32_t> preorder() const;

 private:
  friend ArcTree build_arc_tree(const ArcAnnotatedString& s);
  friend void heavy_decompose(ArcTree& t);

  std::vector<int32_t> left_, right_;
  std::vector<int32_t> parent_;
  std::vector<int32_t> size_;
  std::vector<int32_t> child_begin_, child_end_;
  std::vector<int32_t> children_;
  std::vector<int32_t> heavy_, heavy_index_;
  std::vector<int32_t> lightdepth_;
};

// Builds the nesting tree. The string must carry the outer arc (1, n);
// wrap() beforehand when it might not.
ArcTree build_arc_tree(const ArcAnnotatedString& s);

// Recomputes heavy children and light depths (build_arc_tree already does;
// exposed for tests that perturb sizes).
void heavy_decompose(ArcTree& t);

}  // namespace arcmatch
