#pragma once

#include <cstddef>

#include "hypersat/cycles.hpp"
#include "hypersat/hypergraph.hpp"
#include "hypersat/paths.hpp"
#include "hypersat/rainbow_tree.hpp"

namespace hypersat {

// Everything the extension needs: the host graph, the tree, the coloured
// bipartite graph H between a tree level (side A) and outside vertices
// (side B), and the apex z whose subtree both path ends must reach.
struct ExtensionContext {
  const LinearHypergraph* g = nullptr;
  const RainbowRootedTree* tree = nullptr;
  const ColouredBipartiteGraph* h = nullptr;
  Vertex apex = kNoVertex;
};

struct Extension {
  LinearCycleCopy copy;
  Vertex closing_vertex = kNoVertex;  // u
  std::size_t candidates = 0;         // admissible choices of u
};

// Closes P = v_1 .. v_t (v_1 on the tree level below the apex, v_t outside
// the tree) with an H-edge v_t u, u under a different child of the apex,
// then runs both tree paths up to the apex. u must avoid V(P) and C(P) and
// its colour must avoid them too. The lowest admissible u whose cycle passes
// the linear-cycle predicate is used. Throws NoExtension otherwise.
Extension extend_path_to_cycle(const RainbowPath& p, const ExtensionContext& ctx);

}  // namespace hypersat
