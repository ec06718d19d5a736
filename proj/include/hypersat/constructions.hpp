#pragma once

#include <cstddef>
#include <span>

#include "hypersat/hypergraph.hpp"

// Small named graphs used by tests, the CLI and the harness.
namespace hypersat::constructions {

LinearHypergraph complete_graph(std::size_t n);
// Classes {0..a-1} and {a..a+b-1}; carries the bipartition.
LinearHypergraph complete_bipartite(std::size_t a, std::size_t b);
LinearHypergraph cycle_graph(std::size_t n);
LinearHypergraph path_graph(std::size_t n);
LinearHypergraph fano_plane();
// The r-expansion of the m-cycle (m*(r-1) vertices) and of the m-edge path.
LinearHypergraph linear_cycle(int r, std::size_t m);
LinearHypergraph linear_path(int r, std::size_t m);
// Circulant 2-graph: i ~ i +- o (mod n) for each offset o.
LinearHypergraph circulant(std::size_t n, std::span<const std::size_t> offsets);
// Edges {(x, x+y, x+2y, ..., x+(r-1)y) mod q : x, y in Z_q}, placed in r
// classes of size q. Linear and r-partite whenever q is a prime >= r.
LinearHypergraph transversal_design(int r, std::size_t q);

}  // namespace hypersat::constructions
