#include "hypersat/hypergraph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "hypersat/error.hpp"

namespace hypersat {

LinearHypergraph LinearHypergraph::build(int r, std::size_t n,
                                         std::vector<Edge> edges) {
  std::vector<Vertex> all(n);
  std::iota(all.begin(), all.end(), Vertex{0});
  return build(r, n, std::move(edges), std::move(all));
}

LinearHypergraph LinearHypergraph::build(int r, std::size_t n,
                                         std::vector<Edge> edges,
                                         std::vector<Vertex> vertices) {
  if (r < 2) {
    throw Error(ErrorCode::BadArity, "uniformity must be at least 2");
  }
  LinearHypergraph g;
  g.r_ = r;
  g.n_ = n;
  g.present_.assign(n, 0);
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  for (Vertex x : vertices) {
    if (x >= n) {
      throw Error(ErrorCode::UnknownVertex,
                  "vertex " + std::to_string(x) + " outside [0," +
                      std::to_string(n) + ")");
    }
    g.present_[x] = 1;
  }
  g.vertices_ = std::move(vertices);
  g.incidence_.assign(n, {});
  g.edges_.reserve(edges.size());
  g.pair_to_edge_.reserve(edges.size() * static_cast<std::size_t>(r * (r - 1) / 2));

  for (std::size_t idx = 0; idx < edges.size(); ++idx) {
    Edge e = std::move(edges[idx]);
    if (e.size() != static_cast<std::size_t>(r)) {
      throw Error(ErrorCode::BadArity,
                  "edge " + std::to_string(idx) + " has " +
                      std::to_string(e.size()) + " vertices, expected " +
                      std::to_string(r),
                  idx);
    }
    std::sort(e.begin(), e.end());
    if (std::adjacent_find(e.begin(), e.end()) != e.end()) {
      throw Error(ErrorCode::BadArity,
                  "edge " + std::to_string(idx) + " repeats a vertex", idx);
    }
    for (Vertex x : e) {
      if (!g.has_vertex(x)) {
        throw Error(ErrorCode::UnknownVertex,
                    "edge " + std::to_string(idx) + " uses unknown vertex " +
                        std::to_string(x),
                    idx);
      }
    }
    const auto id = static_cast<EdgeId>(g.edges_.size());
    for (std::size_t a = 0; a < e.size(); ++a) {
      for (std::size_t b = a + 1; b < e.size(); ++b) {
        auto it = g.pair_to_edge_.find(pair_key(e[a], e[b]));
        if (it == g.pair_to_edge_.end()) continue;
        if (g.edges_[it->second] == e) {
          throw Error(ErrorCode::DuplicateEdge,
                      "edge " + std::to_string(idx) + " duplicates edge " +
                          std::to_string(it->second),
                      idx);
        }
        throw LinearityViolation(e[a], e[b], it->second, idx);
      }
    }
    for (std::size_t a = 0; a < e.size(); ++a) {
      for (std::size_t b = a + 1; b < e.size(); ++b) {
        g.pair_to_edge_.emplace(pair_key(e[a], e[b]), id);
      }
      g.incidence_[e[a]].push_back(id);
    }
    g.edges_.push_back(std::move(e));
  }
  return g;
}

LinearHypergraph LinearHypergraph::with_partition(
    std::vector<std::vector<Vertex>> classes) const {
  if (classes.size() != static_cast<std::size_t>(r_)) {
    throw Error(ErrorCode::PartitionViolation,
                "expected " + std::to_string(r_) + " classes, got " +
                    std::to_string(classes.size()));
  }
  std::vector<int> owner(n_, -1);
  std::size_t covered = 0;
  for (std::size_t c = 0; c < classes.size(); ++c) {
    auto& cls = classes[c];
    std::sort(cls.begin(), cls.end());
    for (Vertex x : cls) {
      if (!has_vertex(x)) {
        throw Error(ErrorCode::PartitionViolation,
                    "class member " + std::to_string(x) + " is not a vertex");
      }
      if (owner[x] != -1) {
        throw Error(ErrorCode::PartitionViolation,
                    "vertex " + std::to_string(x) + " is in two classes");
      }
      owner[x] = static_cast<int>(c);
      ++covered;
    }
  }
  if (covered != vertices_.size()) {
    throw Error(ErrorCode::PartitionViolation,
                "classes do not cover the vertex set");
  }
  for (std::size_t id = 0; id < edges_.size(); ++id) {
    std::vector<int> hits(classes.size(), 0);
    for (Vertex x : edges_[id]) ++hits[owner[x]];
    if (std::any_of(hits.begin(), hits.end(), [](int h) { return h != 1; })) {
      throw Error(ErrorCode::PartitionViolation,
                  "edge " + std::to_string(id) +
                      " does not meet every class exactly once",
                  id);
    }
  }
  LinearHypergraph out = *this;
  out.partition_ = std::move(classes);
  out.class_of_ = std::move(owner);
  return out;
}

std::optional<EdgeId> LinearHypergraph::edge_of_pair(Vertex u, Vertex v) const {
  if (u == v) return std::nullopt;
  auto it = pair_to_edge_.find(pair_key(u, v));
  if (it == pair_to_edge_.end()) return std::nullopt;
  return it->second;
}

std::optional<EdgeId> LinearHypergraph::find_edge(const Edge& sorted_edge) const {
  if (sorted_edge.size() != static_cast<std::size_t>(r_)) return std::nullopt;
  auto id = edge_of_pair(sorted_edge[0], sorted_edge[1]);
  if (id && edges_[*id] == sorted_edge) return id;
  return std::nullopt;
}

std::vector<Vertex> LinearHypergraph::neighbours(Vertex x) const {
  std::vector<Vertex> out;
  for (EdgeId id : incidence_.at(x)) {
    for (Vertex y : edges_[id]) {
      if (y != x) out.push_back(y);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

int LinearHypergraph::class_of(Vertex x) const {
  if (class_of_.empty() || x >= n_) return -1;
  return class_of_[x];
}

std::vector<std::uint8_t> make_mask(std::size_t bound, std::span<const Vertex> xs) {
  std::vector<std::uint8_t> mask(bound, 0);
  for (Vertex x : xs) {
    if (x < bound) mask[x] = 1;
  }
  return mask;
}

namespace {

void require_vertex(const LinearHypergraph& g, Vertex v) {
  if (!g.has_vertex(v)) {
    throw Error(ErrorCode::UnknownVertex,
                "vertex " + std::to_string(v) + " is not in the graph");
  }
}

}  // namespace

Link link(const LinearHypergraph& g, Vertex v) {
  require_vertex(g, v);
  Link out{v, {}};
  for (EdgeId id : g.incident(v)) {
    Edge rest;
    for (Vertex y : g.edge(id)) {
      if (y != v) rest.push_back(y);
    }
    out.sets.push_back(std::move(rest));
  }
  return out;
}

Link link(const LinearHypergraph& g, Vertex v, std::span<const Vertex> restrict_to) {
  Link full = link(g, v);
  const auto mask = make_mask(g.id_bound(), restrict_to);
  std::erase_if(full.sets, [&](const Edge& s) {
    return std::any_of(s.begin(), s.end(), [&](Vertex y) { return mask[y] == 0; });
  });
  return full;
}

Projection project(const LinearHypergraph& g, int i, int j) {
  if (!g.has_partition()) {
    throw Error(ErrorCode::NoPartition, "projection needs an r-partition");
  }
  if (i < 0 || j <= i || j >= g.r()) {
    throw Error(ErrorCode::PreconditionViolated,
                "projection classes must satisfy 0 <= i < j < r");
  }
  const auto& parts = g.partition();
  std::vector<Vertex> verts = parts[i];
  verts.insert(verts.end(), parts[j].begin(), parts[j].end());
  std::vector<Edge> traces;
  std::vector<EdgeId> back;
  traces.reserve(g.e());
  for (EdgeId id = 0; id < g.e(); ++id) {
    Edge t;
    for (Vertex x : g.edge(id)) {
      const int c = g.class_of(x);
      if (c == i || c == j) t.push_back(x);
    }
    traces.push_back(std::move(t));
    back.push_back(id);
  }
  Projection out;
  out.i = i;
  out.j = j;
  out.graph = LinearHypergraph::build(2, g.id_bound(), std::move(traces), std::move(verts))
                  .with_partition({parts[i], parts[j]});
  out.back_map = std::move(back);
  return out;
}

LinearHypergraph induced(const LinearHypergraph& g, std::span<const Vertex> keep) {
  for (Vertex x : keep) require_vertex(g, x);
  const auto mask = make_mask(g.id_bound(), keep);
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (std::all_of(e.begin(), e.end(), [&](Vertex x) { return mask[x] != 0; })) {
      edges.push_back(e);
    }
  }
  auto out = LinearHypergraph::build(g.r(), g.id_bound(), std::move(edges),
                                     std::vector<Vertex>(keep.begin(), keep.end()));
  if (g.has_partition()) {
    std::vector<std::vector<Vertex>> classes(g.partition().size());
    for (Vertex x : out.vertices()) classes[g.class_of(x)].push_back(x);
    out = out.with_partition(std::move(classes));
  }
  return out;
}

LinearHypergraph subgraph_by_edges(const LinearHypergraph& g,
                                   std::span<const EdgeId> ids) {
  std::vector<EdgeId> sorted(ids.begin(), ids.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<Edge> edges;
  edges.reserve(sorted.size());
  for (EdgeId id : sorted) {
    if (id >= g.e()) {
      throw Error(ErrorCode::PreconditionViolated,
                  "edge id " + std::to_string(id) + " not in graph");
    }
    edges.push_back(g.edge(id));
  }
  auto verts = std::vector<Vertex>(g.vertices().begin(), g.vertices().end());
  auto out = LinearHypergraph::build(g.r(), g.id_bound(), std::move(edges), std::move(verts));
  if (g.has_partition()) out = out.with_partition(g.partition());
  return out;
}

DegreeProfile degree_profile(const LinearHypergraph& g) {
  DegreeProfile p;
  if (g.v() == 0) return p;
  p.min_degree = static_cast<std::size_t>(-1);
  std::size_t total = 0;
  for (Vertex x : g.vertices()) {
    const std::size_t d = g.degree(x);
    p.min_degree = std::min(p.min_degree, d);
    p.max_degree = std::max(p.max_degree, d);
    total += d;
  }
  p.avg_degree = static_cast<double>(total) / static_cast<double>(g.v());
  return p;
}

double f_value(const LinearHypergraph& g, int s, int t) {
  if (s < 1 || t < 1) {
    throw Error(ErrorCode::PreconditionViolated, "f_value needs s, t >= 1");
  }
  if (g.v() == 0) throw Error(ErrorCode::EmptyGraph, "f_value on a graph with no vertices");
  // e^s exactly while it fits in 128 bits.
  unsigned __int128 power = 1;
  bool exact = true;
  const unsigned __int128 limit = ~static_cast<unsigned __int128>(0);
  for (int i = 0; i < s && exact; ++i) {
    if (g.e() != 0 && power > limit / g.e()) {
      exact = false;
    } else {
      power *= g.e();
    }
  }
  const long double numerator =
      exact ? static_cast<long double>(power)
            : std::pow(static_cast<long double>(g.e()), static_cast<long double>(s));
  const long double denominator =
      std::pow(static_cast<long double>(g.v()), static_cast<long double>(t));
  return static_cast<double>(numerator / denominator);
}

}  // namespace hypersat
