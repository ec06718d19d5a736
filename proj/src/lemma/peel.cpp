#include "hypersat/peel.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "hypersat/error.hpp"

namespace hypersat {

namespace {

// Deletes vertices with degree below floor_of(v) until stable.
template <typename Floor>
std::vector<Vertex> peel_order(const LinearHypergraph& g, Floor floor_of) {
  std::vector<std::size_t> deg(g.id_bound(), 0);
  std::vector<std::uint8_t> gone(g.id_bound(), 0);
  std::vector<std::uint8_t> edge_gone(g.e(), 0);
  std::deque<Vertex> queue;
  std::vector<std::uint8_t> queued(g.id_bound(), 0);
  for (Vertex v : g.vertices()) {
    deg[v] = g.degree(v);
    if (static_cast<double>(deg[v]) < floor_of(v)) {
      queue.push_back(v);
      queued[v] = 1;
    }
  }
  std::vector<Vertex> removed;
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    gone[v] = 1;
    removed.push_back(v);
    for (EdgeId id : g.incident(v)) {
      if (edge_gone[id]) continue;
      edge_gone[id] = 1;
      for (Vertex u : g.edge(id)) {
        if (u == v) continue;
        --deg[u];
        if (!queued[u] && static_cast<double>(deg[u]) < floor_of(u)) {
          queued[u] = 1;
          queue.push_back(u);
        }
      }
    }
  }
  return removed;
}

LinearHypergraph without(const LinearHypergraph& g, std::span<const Vertex> removed) {
  const auto mask = make_mask(g.id_bound(), removed);
  std::vector<Vertex> keep;
  for (Vertex v : g.vertices()) {
    if (!mask[v]) keep.push_back(v);
  }
  return induced(g, keep);
}

}  // namespace

LinearHypergraph peel_to_min_degree(const LinearHypergraph& g, double min_degree) {
  const auto removed = peel_order(g, [&](Vertex) { return min_degree; });
  return without(g, removed);
}

PeelResult peel_bipartite(const LinearHypergraph& h) {
  if (h.r() != 2 || !h.has_partition()) {
    throw Error(ErrorCode::NoPartition, "peel_bipartite needs a 2-graph with its bipartition");
  }
  const auto& parts = h.partition();
  const double e = static_cast<double>(h.e());
  PeelResult out;
  out.d_a = parts[0].empty() ? 0.0 : e / static_cast<double>(parts[0].size());
  out.d_b = parts[1].empty() ? 0.0 : e / static_cast<double>(parts[1].size());
  const double floor_a = out.d_a / 4.0;
  const double floor_b = out.d_b / 4.0;
  out.removed = peel_order(h, [&](Vertex v) { return h.class_of(v) == 0 ? floor_a : floor_b; });
  out.graph = without(h, out.removed);
  return out;
}

std::vector<Check> audit_peel(const LinearHypergraph& h, const PeelResult& result) {
  const auto& g = result.graph;
  Check edges{"e(H') >= e(H)/2", 2 * g.e() >= h.e(), {}};
  if (!edges.passed) edges.witness = std::to_string(g.e()) + " of " + std::to_string(h.e());
  Check floor_a{"class-0 degrees >= d_A/4", true, {}};
  Check floor_b{"class-1 degrees >= d_B/4", true, {}};
  for (Vertex v : g.vertices()) {
    const auto d = static_cast<double>(g.degree(v));
    Check& c = h.class_of(v) == 0 ? floor_a : floor_b;
    const double need = (h.class_of(v) == 0 ? result.d_a : result.d_b) / 4.0;
    if (c.passed && d < need) {
      c.passed = false;
      c.witness = "vertex " + std::to_string(v) + " has degree " + std::to_string(g.degree(v));
    }
  }
  Check nonempty{"H' nonempty", h.e() == 0 || g.e() > 0, {}};
  return {edges, floor_a, floor_b, nonempty};
}

}  // namespace hypersat
