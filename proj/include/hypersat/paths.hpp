#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "hypersat/hypergraph.hpp"

namespace hypersat {

// Number of (2p+1)-edge paths in a bipartite 2-graph (partition = the two
// sides), each undirected path counted once.
std::uint64_t count_paths(const LinearHypergraph& h, int p);

struct ColouredEdge {
  Vertex a = kNoVertex;  // side A
  Vertex b = kNoVertex;  // side B
  Edge colour;           // sorted colour set
};

// Bipartite 2-graph with one vertex set per edge as its colour.
class ColouredBipartiteGraph {
 public:
  ColouredBipartiteGraph() = default;
  // Throws PreconditionViolated on endpoints outside their side or repeated
  // pairs. Colours are sorted on entry.
  ColouredBipartiteGraph(std::size_t id_bound, std::vector<Vertex> side_a,
                         std::vector<Vertex> side_b, std::vector<ColouredEdge> edges);

  // Natural colouring of a 2-projection: each trace coloured by the rest of
  // its hyperedge.
  static ColouredBipartiteGraph from_projection(const LinearHypergraph& g, int i, int j);

  std::size_t id_bound() const noexcept { return bound_; }
  std::span<const Vertex> side_a() const noexcept { return side_a_; }
  std::span<const Vertex> side_b() const noexcept { return side_b_; }
  bool in_a(Vertex x) const { return x < bound_ && side_[x] == 1; }
  bool in_b(Vertex x) const { return x < bound_ && side_[x] == 2; }

  std::size_t e() const noexcept { return edges_.size(); }
  const ColouredEdge& edge(std::size_t id) const { return edges_.at(id); }
  std::span<const ColouredEdge> edges() const noexcept { return edges_; }
  std::span<const std::size_t> incident(Vertex x) const { return incidence_.at(x); }
  std::size_t degree(Vertex x) const { return incidence_.at(x).size(); }
  Vertex other_end(std::size_t id, Vertex x) const {
    return edges_[id].a == x ? edges_[id].b : edges_[id].a;
  }
  std::size_t colour_size() const noexcept { return colour_size_; }

  // Throws NotStronglyProper with the first offending pair.
  void check_strongly_proper() const;
  bool is_strongly_proper() const;

  // Plain bipartite 2-graph with the same vertex ids and sides.
  LinearHypergraph skeleton() const;

 private:
  std::size_t bound_ = 0;
  std::vector<Vertex> side_a_;
  std::vector<Vertex> side_b_;
  std::vector<std::uint8_t> side_;
  std::vector<ColouredEdge> edges_;
  std::vector<std::vector<std::size_t>> incidence_;
  std::size_t colour_size_ = 0;
};

// v_1 ∈ A, ..., v_{2p+2} ∈ B with pairwise disjoint edge colours and colour
// union disjoint from the vertices.
struct RainbowPath {
  std::vector<Vertex> vertices;
  std::vector<Edge> colours;  // colours[i] on vertices[i] -- vertices[i+1]

  Edge colour_union() const;
};

using RainbowPathVisitor = std::function<bool(const RainbowPath&)>;

// Every rainbow (2p+1)-edge path once, started from its A endpoint, whose
// vertices avoid forbidden_vertices and whose colours avoid
// forbidden_colours. Throws NotStronglyProper first if the colouring is not
// strongly proper. Returns the number emitted; the visitor may stop early.
std::uint64_t enumerate_rainbow_paths(const ColouredBipartiteGraph& h, int p,
                                      std::span<const Vertex> forbidden_vertices,
                                      std::span<const Vertex> forbidden_colours,
                                      const RainbowPathVisitor& visit);
std::uint64_t count_rainbow_paths(const ColouredBipartiteGraph& h, int p);

}  // namespace hypersat
