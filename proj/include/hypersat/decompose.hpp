#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hypersat/audit.hpp"
#include "hypersat/hypergraph.hpp"

namespace hypersat {

struct DecomposeOptions {
  double alpha = 0.5;
  int s = 1;
  int t = 1;
  double C = 1.0;
  // Replaces the default p so the recursive branches are reachable on small
  // graphs. Must be >= 3.
  std::optional<std::size_t> p_override;
};

enum class DecomposeBranch { Base, Case1 };

struct PartAudit {
  DecomposeBranch branch = DecomposeBranch::Base;
  int depth = 0;  // recursion depth that produced the part
  std::size_t v = 0;
  std::size_t e = 0;
  std::size_t min_degree = 0;
  std::size_t max_degree = 0;
  double f = 0.0;
  bool almost_regular = false;  // Δ <= q·δ
  bool dense = false;           // e >= (C/4)·v^(1+α)
  // Case 1 only: the bounds enforced by construction, with d the average
  // degree of the graph that was split.
  double parent_avg_degree = 0.0;
  bool max_degree_bound = true;  // Δ <= p·d
  bool min_degree_bound = true;  // δ >= d/8
};

struct DecompositionResult {
  std::size_t p = 0;
  std::size_t q = 0;
  std::vector<LinearHypergraph> parts;
  std::vector<std::vector<EdgeId>> source_edges;  // edge ids of each part in the input
  std::vector<PartAudit> audits;
  double f_input = 0.0;
  double f_sum = 0.0;
  bool f_sum_bound = false;  // f_sum >= f_input / 4^s
  bool edge_disjoint = false;
};

// ⌈2^max(4/α, (2s+t)/(t−s+1))⌉.
std::size_t decomposition_p(double alpha, int s, int t);

// Recursive almost-regular decomposition of a 2-graph. Throws
// DensityPrecondition if e(G) < C·v(G)^(1+α) and PreconditionViolated on
// bad parameters. Edges inside the top-degree part A_1 go only to the first
// recursive call so the output stays edge-disjoint.
DecompositionResult decompose_almost_regular(const LinearHypergraph& g,
                                             const DecomposeOptions& options);

// Edge-disjointness, parts ⊆ G, and the Case 1 degree bounds.
std::vector<Check> audit_decomposition(const LinearHypergraph& g,
                                       const DecompositionResult& result);

}  // namespace hypersat
