#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

namespace hypersat {

using Vertex = std::uint32_t;
using EdgeId = std::uint32_t;
// Edges are stored as sorted vertex arrays.
using Edge = std::vector<Vertex>;

inline constexpr Vertex kNoVertex = static_cast<Vertex>(-1);

// An r-uniform hypergraph in which two distinct edges share at most one
// vertex. Vertex ids live in [0, id_bound()); the vertex set may be a subset of
// that range so that induced subgraphs keep their parent's ids. Immutable once
// built.
class LinearHypergraph {
 public:
  LinearHypergraph() = default;

  // Vertex set defaults to every id in [0, n). Throws BadArity,
  // UnknownVertex, DuplicateEdge or LinearityViolation.
  static LinearHypergraph build(int r, std::size_t n, std::vector<Edge> edges);
  static LinearHypergraph build(int r, std::size_t n, std::vector<Edge> edges,
                                std::vector<Vertex> vertices);

  // Attaches an r-partition; every edge must meet each class exactly once.
  LinearHypergraph with_partition(std::vector<std::vector<Vertex>> classes) const;

  int r() const noexcept { return r_; }
  std::size_t id_bound() const noexcept { return n_; }
  std::size_t v() const noexcept { return vertices_.size(); }
  std::size_t e() const noexcept { return edges_.size(); }

  std::span<const Vertex> vertices() const noexcept { return vertices_; }
  bool has_vertex(Vertex x) const noexcept {
    return x < n_ && present_[x] != 0;
  }

  const Edge& edge(EdgeId id) const { return edges_.at(id); }
  std::span<const Edge> edges() const noexcept { return edges_; }
  std::span<const EdgeId> incident(Vertex x) const { return incidence_.at(x); }
  std::size_t degree(Vertex x) const { return incidence_.at(x).size(); }

  // The unique edge containing both u and v, if any.
  std::optional<EdgeId> edge_of_pair(Vertex u, Vertex v) const;
  std::optional<EdgeId> find_edge(const Edge& sorted_edge) const;

  // Every vertex that shares an edge with x, ascending.
  std::vector<Vertex> neighbours(Vertex x) const;

  bool has_partition() const noexcept { return !partition_.empty(); }
  const std::vector<std::vector<Vertex>>& partition() const noexcept {
    return partition_;
  }
  // Class index of x, or -1 when there is no partition.
  int class_of(Vertex x) const;

 private:
  static std::uint64_t pair_key(Vertex u, Vertex v) noexcept {
    if (u > v) std::swap(u, v);
    return (static_cast<std::uint64_t>(u) << 32) | v;
  }

  int r_ = 2;
  std::size_t n_ = 0;
  std::vector<Vertex> vertices_;
  std::vector<std::uint8_t> present_;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> incidence_;
  std::unordered_map<std::uint64_t, EdgeId> pair_to_edge_;
  std::vector<std::vector<Vertex>> partition_;
  std::vector<int> class_of_;
};

struct Link {
  Vertex center = kNoVertex;
  std::vector<Edge> sets;  // (r-1)-sets, pairwise disjoint
};

Link link(const LinearHypergraph& g, Vertex v);
// Only the link sets lying entirely inside restrict_to.
Link link(const LinearHypergraph& g, Vertex v, std::span<const Vertex> restrict_to);

// Traces of the edges on two partition classes. Edge k of `graph` is the
// trace of source edge back_map[k].
struct Projection {
  int i = 0;
  int j = 1;
  LinearHypergraph graph;
  std::vector<EdgeId> back_map;
};

Projection project(const LinearHypergraph& g, int i, int j);

// Subgraph induced on `keep` (ids preserved, vertex set = keep).
LinearHypergraph induced(const LinearHypergraph& g, std::span<const Vertex> keep);
// Spanning subgraph with the chosen edges, in ascending id order.
LinearHypergraph subgraph_by_edges(const LinearHypergraph& g,
                                   std::span<const EdgeId> ids);

struct DegreeProfile {
  std::size_t min_degree = 0;
  std::size_t max_degree = 0;
  double avg_degree = 0.0;

  bool is_q_almost_regular(double q) const {
    return static_cast<double>(max_degree) <= q * static_cast<double>(min_degree);
  }
};

DegreeProfile degree_profile(const LinearHypergraph& g);

// e(G)^s / v(G)^t.
double f_value(const LinearHypergraph& g, int s, int t);

// Membership mask over [0, bound) for a vertex list.
std::vector<std::uint8_t> make_mask(std::size_t bound, std::span<const Vertex> xs);

}  // namespace hypersat
