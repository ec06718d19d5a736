#include "hypersat/constructions.hpp"

#include "hypersat/error.hpp"

namespace hypersat::constructions {

LinearHypergraph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) edges.push_back({a, b});
  }
  return LinearHypergraph::build(2, n, std::move(edges));
}

LinearHypergraph complete_bipartite(std::size_t a, std::size_t b) {
  std::vector<Edge> edges;
  std::vector<Vertex> left;
  std::vector<Vertex> right;
  for (Vertex x = 0; x < a; ++x) left.push_back(x);
  for (Vertex y = 0; y < b; ++y) right.push_back(static_cast<Vertex>(a + y));
  for (Vertex x : left) {
    for (Vertex y : right) edges.push_back({x, y});
  }
  return LinearHypergraph::build(2, a + b, std::move(edges))
      .with_partition({std::move(left), std::move(right)});
}

LinearHypergraph cycle_graph(std::size_t n) {
  if (n < 3) throw Error(ErrorCode::PreconditionViolated, "cycle needs n >= 3");
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) edges.push_back({i, static_cast<Vertex>((i + 1) % n)});
  return LinearHypergraph::build(2, n, std::move(edges));
}

LinearHypergraph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return LinearHypergraph::build(2, n, std::move(edges));
}

LinearHypergraph fano_plane() {
  return LinearHypergraph::build(3, 7,
                                 {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5},
                                  {1, 4, 6}, {2, 3, 6}, {2, 4, 5}});
}

LinearHypergraph linear_cycle(int r, std::size_t m) {
  if (r < 2 || m < 3) {
    throw Error(ErrorCode::PreconditionViolated, "linear cycle needs r >= 2, m >= 3");
  }
  // Junctions 0..m-1, then r-2 fresh vertices per edge.
  std::vector<Edge> edges;
  Vertex fresh = static_cast<Vertex>(m);
  for (Vertex i = 0; i < m; ++i) {
    Edge e{i, static_cast<Vertex>((i + 1) % m)};
    for (int j = 0; j < r - 2; ++j) e.push_back(fresh++);
    edges.push_back(std::move(e));
  }
  return LinearHypergraph::build(r, fresh, std::move(edges));
}

LinearHypergraph linear_path(int r, std::size_t m) {
  if (r < 2) throw Error(ErrorCode::PreconditionViolated, "linear path needs r >= 2");
  std::vector<Edge> edges;
  Vertex fresh = static_cast<Vertex>(m + 1);
  for (Vertex i = 0; i < m; ++i) {
    Edge e{i, i + 1};
    for (int j = 0; j < r - 2; ++j) e.push_back(fresh++);
    edges.push_back(std::move(e));
  }
  return LinearHypergraph::build(r, fresh, std::move(edges));
}

LinearHypergraph circulant(std::size_t n, std::span<const std::size_t> offsets) {
  std::vector<Edge> edges;
  for (std::size_t o : offsets) {
    if (o == 0 || 2 * o > n) {
      throw Error(ErrorCode::PreconditionViolated, "circulant offsets lie in [1, n/2]");
    }
    const std::size_t count = (2 * o == n) ? n / 2 : n;
    for (Vertex i = 0; i < count; ++i) {
      edges.push_back({i, static_cast<Vertex>((i + o) % n)});
    }
  }
  return LinearHypergraph::build(2, n, std::move(edges));
}

LinearHypergraph transversal_design(int r, std::size_t q) {
  if (r < 2 || q < static_cast<std::size_t>(r)) {
    throw Error(ErrorCode::PreconditionViolated, "transversal design needs q >= r >= 2");
  }
  for (std::size_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) throw Error(ErrorCode::PreconditionViolated, "q must be prime");
  }
  std::vector<Edge> edges;
  std::vector<std::vector<Vertex>> classes(r);
  for (int c = 0; c < r; ++c) {
    for (std::size_t i = 0; i < q; ++i) classes[c].push_back(static_cast<Vertex>(c * q + i));
  }
  for (std::size_t x = 0; x < q; ++x) {
    for (std::size_t y = 0; y < q; ++y) {
      Edge e;
      for (int c = 0; c < r; ++c) e.push_back(static_cast<Vertex>(c * q + (x + c * y) % q));
      edges.push_back(std::move(e));
    }
  }
  return LinearHypergraph::build(r, r * q, std::move(edges)).with_partition(std::move(classes));
}

}  // namespace hypersat::constructions
