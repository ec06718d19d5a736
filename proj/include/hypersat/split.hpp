#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "hypersat/audit.hpp"
#include "hypersat/hypergraph.hpp"
#include "hypersat/seed.hpp"

namespace hypersat {

struct SplitPartition {
  std::vector<std::vector<Vertex>> parts;  // S_1..S_k, each ascending
  std::vector<int> part_of;                // by vertex id, -1 outside V(G)
  std::vector<Vertex> audited;             // ascending
  // restricted[a][i] = |L_G(audited[a])|_{S_i}|
  std::vector<std::vector<std::size_t>> restricted;
  double floor = 0.0;
  std::size_t attempts = 0;

  std::size_t k() const noexcept { return parts.size(); }
  // Smallest restricted link size over all audited vertices and parts.
  std::size_t min_restricted() const;
};

// Dn^γ / (2k^(r−1)).
double splitting_floor(double D, double n, double gamma, int k, int r);

// Audit data for a given assignment (part_of over V(G), values in [0, k)).
SplitPartition make_split(const LinearHypergraph& g, std::span<const Vertex> audited, int k,
                          std::span<const int> part_of);

// Colours every vertex uniformly from [k] and resamples until each audited
// vertex keeps at least `floor` link sets inside every part. Attempt a uses
// seed.child(a). Throws RetriesExhausted with the worst deficit of the last
// attempt, or PreconditionViolated if the audited set spans more than two
// partition classes.
SplitPartition split_vertices(const LinearHypergraph& g, std::span<const Vertex> audited, int k,
                              double floor, Seed seed, std::size_t max_retries);

std::vector<Check> audit_split(const LinearHypergraph& g, const SplitPartition& split);

}  // namespace hypersat
