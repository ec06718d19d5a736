#include "hypersat/paths.hpp"

#include <algorithm>
#include <string>

#include "hypersat/error.hpp"

namespace hypersat {

namespace {

bool disjoint_sorted(const Edge& a, const Edge& b) {
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return false;
    if (a[i] < b[j]) ++i; else ++j;
  }
  return true;
}

void require_bipartite(const LinearHypergraph& h) {
  if (h.r() != 2 || !h.has_partition()) {
    throw Error(ErrorCode::NoPartition, "expected a 2-graph with its bipartition");
  }
}

std::uint64_t paths_from(const LinearHypergraph& h, Vertex v, std::size_t remaining,
                         std::vector<std::uint8_t>& on_path) {
  if (remaining == 0) return 1;
  std::uint64_t total = 0;
  for (EdgeId id : h.incident(v)) {
    const Edge& e = h.edge(id);
    const Vertex w = e[0] == v ? e[1] : e[0];
    if (on_path[w]) continue;
    on_path[w] = 1;
    total += paths_from(h, w, remaining - 1, on_path);
    on_path[w] = 0;
  }
  return total;
}

}  // namespace

std::uint64_t count_paths(const LinearHypergraph& h, int p) {
  require_bipartite(h);
  if (p < 0) throw Error(ErrorCode::PreconditionViolated, "p must be >= 0");
  // Odd paths have exactly one endpoint in each class, so starting at class 0
  // counts each undirected path once.
  std::vector<std::uint8_t> on_path(h.id_bound(), 0);
  std::uint64_t total = 0;
  for (Vertex a : h.partition()[0]) {
    on_path[a] = 1;
    total += paths_from(h, a, 2 * static_cast<std::size_t>(p) + 1, on_path);
    on_path[a] = 0;
  }
  return total;
}

ColouredBipartiteGraph::ColouredBipartiteGraph(std::size_t id_bound,
                                               std::vector<Vertex> side_a,
                                               std::vector<Vertex> side_b,
                                               std::vector<ColouredEdge> edges)
    : bound_(id_bound),
      side_a_(std::move(side_a)),
      side_b_(std::move(side_b)),
      side_(id_bound, 0),
      edges_(std::move(edges)),
      incidence_(id_bound) {
  std::sort(side_a_.begin(), side_a_.end());
  std::sort(side_b_.begin(), side_b_.end());
  for (Vertex x : side_a_) {
    if (x >= bound_) throw Error(ErrorCode::UnknownVertex, "side A vertex out of range");
    side_[x] = 1;
  }
  for (Vertex x : side_b_) {
    if (x >= bound_) throw Error(ErrorCode::UnknownVertex, "side B vertex out of range");
    if (side_[x] != 0) {
      throw Error(ErrorCode::PreconditionViolated, "sides must be disjoint");
    }
    side_[x] = 2;
  }
  for (std::size_t id = 0; id < edges_.size(); ++id) {
    auto& e = edges_[id];
    if (!in_a(e.a) || !in_b(e.b)) {
      throw Error(ErrorCode::PreconditionViolated,
                  "edge " + std::to_string(id) + " does not join side A to side B", id);
    }
    std::sort(e.colour.begin(), e.colour.end());
    for (std::size_t other : incidence_[e.a]) {
      if (edges_[other].b == e.b) {
        throw Error(ErrorCode::DuplicateEdge, "repeated pair in coloured graph", id);
      }
    }
    incidence_[e.a].push_back(id);
    incidence_[e.b].push_back(id);
    colour_size_ = std::max(colour_size_, e.colour.size());
  }
}

ColouredBipartiteGraph ColouredBipartiteGraph::from_projection(const LinearHypergraph& g,
                                                               int i, int j) {
  if (!g.has_partition()) throw Error(ErrorCode::NoPartition, "projection needs a partition");
  std::vector<ColouredEdge> edges;
  for (const Edge& e : g.edges()) {
    ColouredEdge ce;
    for (Vertex x : e) {
      const int c = g.class_of(x);
      if (c == i) ce.a = x;
      else if (c == j) ce.b = x;
      else ce.colour.push_back(x);
    }
    edges.push_back(std::move(ce));
  }
  return ColouredBipartiteGraph(g.id_bound(), g.partition().at(i), g.partition().at(j),
                                std::move(edges));
}

void ColouredBipartiteGraph::check_strongly_proper() const {
  for (Vertex x = 0; x < bound_; ++x) {
    const auto& inc = incidence_[x];
    for (std::size_t s = 0; s < inc.size(); ++s) {
      for (std::size_t t = s + 1; t < inc.size(); ++t) {
        if (!disjoint_sorted(edges_[inc[s]].colour, edges_[inc[t]].colour)) {
          throw NotStronglyProper(std::min(inc[s], inc[t]), std::max(inc[s], inc[t]), x);
        }
      }
    }
  }
}

bool ColouredBipartiteGraph::is_strongly_proper() const {
  try {
    check_strongly_proper();
    return true;
  } catch (const NotStronglyProper&) {
    return false;
  }
}

LinearHypergraph ColouredBipartiteGraph::skeleton() const {
  std::vector<Edge> edges;
  for (const auto& e : edges_) edges.push_back({e.a, e.b});
  std::vector<Vertex> verts = side_a_;
  verts.insert(verts.end(), side_b_.begin(), side_b_.end());
  return LinearHypergraph::build(2, bound_, std::move(edges), std::move(verts))
      .with_partition({side_a_, side_b_});
}

Edge RainbowPath::colour_union() const {
  Edge out;
  for (const Edge& c : colours) out.insert(out.end(), c.begin(), c.end());
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

class RainbowSearch {
 public:
  RainbowSearch(const ColouredBipartiteGraph& h, std::size_t edges_wanted,
                std::span<const Vertex> forbidden_vertices,
                std::span<const Vertex> forbidden_colours, const RainbowPathVisitor& visit)
      : h_(h),
        wanted_(edges_wanted),
        visit_(visit),
        used_(h.id_bound(), 0),
        vertex_block_(h.id_bound(), 0),
        colour_block_(h.id_bound(), 0) {
    for (Vertex x : forbidden_vertices) {
      if (x < h.id_bound()) vertex_block_[x] = 1;
    }
    for (Vertex x : forbidden_colours) {
      if (x < h.id_bound()) colour_block_[x] = 1;
    }
  }

  void run() {
    for (Vertex a : h_.side_a()) {
      if (vertex_block_[a]) continue;
      mark(a, +1);
      path_.vertices = {a};
      path_.colours.clear();
      const bool go = grow(a);
      mark(a, -1);
      if (!go) return;
    }
  }

  std::uint64_t emitted() const noexcept { return emitted_; }

 private:
  bool grow(Vertex tip) {
    if (path_.colours.size() == wanted_) {
      ++emitted_;
      return visit_ ? visit_(path_) : true;
    }
    for (std::size_t id : h_.incident(tip)) {
      const Vertex next = h_.other_end(id, tip);
      const Edge& colour = h_.edge(id).colour;
      if (used_[next] || vertex_block_[next]) continue;
      bool clear = true;
      for (Vertex c : colour) {
        if (c == next || used_[c] || colour_block_[c]) {
          clear = false;
          break;
        }
      }
      if (!clear) continue;
      mark(next, +1);
      for (Vertex c : colour) mark(c, +1);
      path_.vertices.push_back(next);
      path_.colours.push_back(colour);
      const bool go = grow(next);
      path_.vertices.pop_back();
      path_.colours.pop_back();
      for (Vertex c : colour) mark(c, -1);
      mark(next, -1);
      if (!go) return false;
    }
    return true;
  }

  void mark(Vertex x, int delta) { used_[x] = static_cast<std::uint8_t>(used_[x] + delta); }

  const ColouredBipartiteGraph& h_;
  std::size_t wanted_;
  const RainbowPathVisitor& visit_;
  std::vector<std::uint8_t> used_;  // vertices and colours on the path
  std::vector<std::uint8_t> vertex_block_;
  std::vector<std::uint8_t> colour_block_;
  RainbowPath path_;
  std::uint64_t emitted_ = 0;
};

}  // namespace

std::uint64_t enumerate_rainbow_paths(const ColouredBipartiteGraph& h, int p,
                                      std::span<const Vertex> forbidden_vertices,
                                      std::span<const Vertex> forbidden_colours,
                                      const RainbowPathVisitor& visit) {
  if (p < 0) throw Error(ErrorCode::PreconditionViolated, "p must be >= 0");
  h.check_strongly_proper();
  RainbowSearch search(h, 2 * static_cast<std::size_t>(p) + 1, forbidden_vertices,
                       forbidden_colours, visit);
  search.run();
  return search.emitted();
}

std::uint64_t count_rainbow_paths(const ColouredBipartiteGraph& h, int p) {
  return enumerate_rainbow_paths(h, p, {}, {}, RainbowPathVisitor{});
}

}  // namespace hypersat
