#pragma once

#include <cstddef>

#include "hypersat/cycles.hpp"

// Exhaustive counters that share no code with the pruned enumerator.
namespace hypersat::oracle {

inline constexpr std::size_t kVertexCap = 12;
inline constexpr std::size_t kSubsetCap = 5'000'000;

// All C_{2k} in a 2-graph: every 2k-vertex subset, every cyclic order with the
// smallest vertex first and v_2 < v_{2k}. SizeGuard when v(G) > vertex_cap.
CycleSet count_cycles_oracle(const LinearHypergraph& g, int k,
                             std::size_t vertex_cap = kVertexCap);

// All C^(r)_{2k}: every 2k-subset of edges tested with is_linear_cycle.
// SizeGuard when C(e, 2k) > subset_cap.
CycleSet linear_cycles_by_edge_subsets(const LinearHypergraph& g, int k,
                                       std::size_t subset_cap = kSubsetCap);

}  // namespace hypersat::oracle
