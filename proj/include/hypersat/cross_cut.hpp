#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "hypersat/audit.hpp"
#include "hypersat/hypergraph.hpp"
#include "hypersat/seed.hpp"

namespace hypersat {

struct CrossCutResult {
  std::vector<Vertex> kept;         // S', ascending
  std::vector<std::size_t> edges;   // indices into F of the edges in F'
  double threshold = 0.0;           // (u/2^u)·e(F)
  std::size_t attempts = 0;
  // The sampling cap was hit and S' came from the method of conditional
  // expectations instead.
  bool derandomized = false;
};

inline constexpr std::size_t kCrossCutAttempts = 1000;

// F is a u-uniform set system given as sorted vertex sets, S a vertex cover
// of it. Each attempt keeps every cover vertex with probability 1/2 using
// seed.child(attempt) and stops once the edges meeting S' exactly once reach
// the threshold. Throws PreconditionViolated if S misses an edge or F is not
// uniform.
CrossCutResult cross_cut(std::span<const Edge> f, std::span<const Vertex> cover, Seed seed,
                         std::size_t max_attempts = kCrossCutAttempts);

std::vector<Check> audit_cross_cut(std::span<const Edge> f, std::span<const Vertex> cover,
                                   const CrossCutResult& result);

}  // namespace hypersat
