#pragma once

#include <cstddef>
#include <span>

#include "hypersat/hypergraph.hpp"
#include "hypersat/seed.hpp"

namespace hypersat {

// Erdos-Renyi G(n, p) as a 2-graph; pairs are visited in lexicographic order.
LinearHypergraph gnp(std::size_t n, double p, Seed seed);

// Random-greedy maximal linear r-graph: all r-sets in shuffled order, each
// accepted iff it shares at most one vertex with every accepted edge.
LinearHypergraph partial_steiner(std::size_t n, int r, Seed seed);

// Hill-climbing on a linear 3-graph: repeatedly pick a point x with two
// uncovered pairs xy, xz and insert xyz, evicting the triple that covers yz if
// there is one. The edge count never decreases. Stops after max_steps or when
// no point has two uncovered pairs. Output edges are sorted.
LinearHypergraph densify_packing(const LinearHypergraph& g, Seed seed,
                                 std::size_t max_steps);

// Each edge kept independently with probability p (vertex set kept).
LinearHypergraph subsample_edges(const LinearHypergraph& g, double p, Seed seed);

// Uniformly random subset of exactly m edges (vertex set kept).
LinearHypergraph sample_edges_exact(const LinearHypergraph& g, std::size_t m, Seed seed);

inline constexpr std::size_t kPartiteRejectionCap = 10'000;
inline constexpr std::size_t kPartiteRestarts = 256;

// Linear r-partite graph on contiguous classes [0,s0), [s0,s0+s1), ...
// Transversals are drawn uniformly and rejected if they reuse a covered pair.
// A run that hits kPartiteRejectionCap consecutive rejections is restarted on
// seed.child(attempt); BudgetInfeasible once kPartiteRestarts runs stall, or
// at once when the budget exceeds the smallest s_i * s_j.
LinearHypergraph random_r_partite(std::span<const std::size_t> class_sizes,
                                  std::size_t budget, Seed seed);

}  // namespace hypersat
