#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hypersat/cycles.hpp"
#include "hypersat/hypergraph.hpp"
#include "hypersat/seed.hpp"

namespace hypersat {

struct BfsLevels {
  Vertex root = kNoVertex;
  std::vector<std::vector<Vertex>> levels;  // exact distance classes L_0..
  // Smallest i <= k-1 with |L_{i+1}| < n^(1/k)·|L_i|, or -1.
  int stopping_level = -1;
  double expansion = 0.0;  // n^(1/k)
};

// Distance levels of a 2-graph from x up to depth k.
BfsLevels bfs_levels(const LinearHypergraph& g, Vertex x, int k);

struct BfsCycleOptions {
  // Paths examined per call; keeps dense inputs bounded.
  std::size_t max_paths = 100'000;
  Seed seed{0};
  // r >= 3: split floor and retries, and the second class (default: 1, or
  // 0 when x lies in class 1).
  double split_floor = 1.0;
  std::size_t split_retries = 200;
  int other_class = -1;
};

struct BfsCycleResult {
  CycleSet cycles;
  int level = -1;           // q: every cycle meets tree level q
  std::vector<Vertex> level_vertices;
  int stopping_level = -1;  // h (r = 2) or i (r >= 3)
  std::size_t paths_tried = 0;
  std::size_t extension_failures = 0;
  std::vector<std::string> diagnostics;
};

// r = 2: BFS tree to the stopping level, cleaned F between L_h and L_{h+1},
// balanced roots, paths in the densest F_j closed through the tree.
// r >= 3: split, rainbow tree, cross-cut H_x and the strong/weak sector
// recursion. Never throws on degenerate inputs; failed thresholds are
// reported in diagnostics.
BfsCycleResult bfs_find_cycles(const LinearHypergraph& g, Vertex x, int k,
                               const BfsCycleOptions& options = {});

// Every cycle passes the linear-cycle predicate and meets the reported level.
bool verify_bfs_result(const LinearHypergraph& g, const BfsCycleResult& result);

}  // namespace hypersat
