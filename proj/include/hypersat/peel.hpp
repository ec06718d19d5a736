#pragma once

#include <span>
#include <vector>

#include "hypersat/audit.hpp"
#include "hypersat/hypergraph.hpp"

namespace hypersat {

// Repeatedly deletes vertices whose degree drops below min_degree. The
// result keeps the surviving ids, edges and partition.
LinearHypergraph peel_to_min_degree(const LinearHypergraph& g, double min_degree);

struct PeelResult {
  LinearHypergraph graph;
  double d_a = 0.0;  // average degree of class 0 in the input
  double d_b = 0.0;  // average degree of class 1 in the input
  std::vector<Vertex> removed;  // in deletion order
};

// Bipartite 2-graph with its 2-class partition: deletes class-0 vertices of
// degree < d_a/4 and class-1 vertices of degree < d_b/4 until none remain.
PeelResult peel_bipartite(const LinearHypergraph& h);

// e(H') >= e(H)/2, both minimum-degree floors, H' nonempty when H is.
std::vector<Check> audit_peel(const LinearHypergraph& h, const PeelResult& result);

}  // namespace hypersat
