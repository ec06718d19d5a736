#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "hypersat/audit.hpp"
#include "hypersat/hypergraph.hpp"

namespace hypersat {

// Rooted tree on a subset of the vertex ids [0, bound).
class RootedTree {
 public:
  RootedTree() = default;

  // child_parent lists (child, parent) pairs; every parent must already be
  // reachable from the root when the pairs are read in order. Throws
  // PreconditionViolated otherwise.
  static RootedTree from_parents(std::size_t bound, Vertex root,
                                std::span<const std::pair<Vertex, Vertex>> child_parent);

  Vertex root() const noexcept { return root_; }
  std::size_t bound() const noexcept { return parent_.size(); }
  bool contains(Vertex v) const { return v < depth_.size() && depth_[v] >= 0; }
  int depth(Vertex v) const { return depth_.at(v); }
  Vertex parent(Vertex v) const { return parent_.at(v); }
  std::span<const Vertex> children(Vertex v) const { return children_.at(v); }
  // Nodes in BFS order.
  std::span<const Vertex> nodes() const noexcept { return order_; }
  std::size_t size() const noexcept { return order_.size(); }
  int height() const noexcept { return height_; }

  bool is_ancestor(Vertex a, Vertex d) const;  // a == d counts
  // Child of `a` on the path down to its descendant d (d != a).
  Vertex child_toward(Vertex a, Vertex d) const;
  // v, parent(v), ..., up to and including `top`.
  std::vector<Vertex> path_up(Vertex v, Vertex top) const;
  // |V(T_v) ∩ S| for every node, S given as a mask over ids.
  std::vector<std::size_t> subtree_counts(std::span<const std::uint8_t> in_s) const;

 private:
  Vertex root_ = kNoVertex;
  std::vector<Vertex> parent_;
  std::vector<int> depth_;
  std::vector<std::vector<Vertex>> children_;
  std::vector<Vertex> order_;
  int height_ = 0;
};

// BFS tree of a 2-graph truncated at max_depth; each vertex hangs under its
// smallest-id neighbour on the previous level.
RootedTree bfs_tree(const LinearHypergraph& g, Vertex root, int max_depth);

struct BalancedRoot {
  Vertex vertex = kNoVertex;
  int depth = 0;
  std::size_t hits = 0;  // |V(T_y) ∩ S|
};

// Maximal-child descent: follow the child holding the most of S (lowest id on
// ties) until every child holds at most hits - b. Requires b >= 1,
// S ⊆ V(T) without repeats and |S| >= b*height + 1.
BalancedRoot balanced_root(const RootedTree& tree, std::span<const Vertex> s, std::size_t b);

// |V(T_y) ∩ S| >= |S| - depth*b and every child of y holds at most hits - b.
std::vector<Check> audit_balanced_root(const RootedTree& tree, std::span<const Vertex> s,
                                       std::size_t b, const BalancedRoot& result);

}  // namespace hypersat
