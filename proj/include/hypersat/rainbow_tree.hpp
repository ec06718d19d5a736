#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hypersat/audit.hpp"
#include "hypersat/hypergraph.hpp"
#include "hypersat/split.hpp"
#include "hypersat/tree.hpp"

namespace hypersat {

// One tree edge parent -> child with colour φ = (host edge) \ {parent, child}.
struct TreeEdge {
  Vertex parent = kNoVertex;
  Vertex child = kNoVertex;
  Edge colour;
  EdgeId host = 0;  // the host edge parent ∪ child ∪ colour
};

struct RainbowRootedTree {
  Vertex root = kNoVertex;
  std::vector<std::vector<Vertex>> levels;  // L_0 = {root}, L_1, ...
  std::vector<TreeEdge> edges;              // in level order
  std::vector<std::vector<Edge>> matchings; // M_1.., link sets (child included)
  RootedTree shape;

  int height() const { return static_cast<int>(levels.size()) - 1; }
  // Tree edge entering v, or nullptr for the root and non-members.
  const TreeEdge* edge_to(Vertex v) const;
  std::vector<Vertex> vertices() const;

  std::vector<std::size_t> edge_index_;  // by child id, npos if absent
};

struct RainbowTreeOptions {
  // Throw EmptyLevel when a level vertex has no usable restricted link.
  // Otherwise growth just stops when the matching comes out empty.
  bool strict = true;
};

// Levelled tree of height <= t rooted at x following the split parts: level
// i+1 is read off a greedy maximal matching of the restricted links of level i
// into S_{i+1}. Levels alternate between x's class and other_class. Link sets
// that contain a tree vertex are skipped. Throws NoPartition, EmptyLevel
// (item = level) or PreconditionViolated.
RainbowRootedTree build_rainbow_tree(const LinearHypergraph& g, Vertex x, int other_class,
                                     const SplitPartition& split, int t,
                                     const RainbowTreeOptions& options = {});

// BFS tree of a 2-graph in the same shape, with empty colours and no
// matchings recorded.
RainbowRootedTree bfs_rainbow_tree(const LinearHypergraph& g, Vertex x, int depth);

// Levels alternate classes, colours lie in the matching part of their level,
// matchings are matchings, φ is rainbow and strongly proper, and every
// root-to-node path lifts to a linear path of G.
std::vector<Check> audit_rainbow_tree(const LinearHypergraph& g, const RainbowRootedTree& tree,
                                      int other_class, const SplitPartition* split);

// Levels 0..height of the tree with matching levels and edges.
RainbowRootedTree truncated_tree(const RainbowRootedTree& tree, int height);

// Host edges of the lifted root-to-v path, root side first.
std::vector<EdgeId> lifted_path(const RainbowRootedTree& tree, Vertex v);

}  // namespace hypersat
