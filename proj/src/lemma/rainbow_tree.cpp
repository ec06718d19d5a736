#include "hypersat/rainbow_tree.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "hypersat/error.hpp"

namespace hypersat {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

bool disjoint_sorted(const Edge& a, const Edge& b) {
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return false;
    if (a[i] < b[j]) ++i; else ++j;
  }
  return true;
}

void finish(RainbowRootedTree& tree, std::size_t bound) {
  tree.edge_index_.assign(bound, kNone);
  std::vector<std::pair<Vertex, Vertex>> links;
  for (std::size_t i = 0; i < tree.edges.size(); ++i) {
    tree.edge_index_[tree.edges[i].child] = i;
    links.emplace_back(tree.edges[i].child, tree.edges[i].parent);
  }
  tree.shape = RootedTree::from_parents(bound, tree.root, links);
}

}  // namespace

const TreeEdge* RainbowRootedTree::edge_to(Vertex v) const {
  if (v >= edge_index_.size() || edge_index_[v] == kNone) return nullptr;
  return &edges[edge_index_[v]];
}

std::vector<Vertex> RainbowRootedTree::vertices() const {
  std::vector<Vertex> out;
  for (const auto& level : levels) out.insert(out.end(), level.begin(), level.end());
  std::sort(out.begin(), out.end());
  return out;
}

RainbowRootedTree build_rainbow_tree(const LinearHypergraph& g, Vertex x, int other_class,
                                     const SplitPartition& split, int t,
                                     const RainbowTreeOptions& options) {
  if (!g.has_partition()) throw Error(ErrorCode::NoPartition, "rainbow tree needs a partition");
  if (!g.has_vertex(x)) throw Error(ErrorCode::UnknownVertex, "root is not a vertex");
  const int own_class = g.class_of(x);
  if (other_class < 0 || other_class >= g.r() || other_class == own_class) {
    throw Error(ErrorCode::PreconditionViolated, "other_class must be a different class");
  }
  if (t < 0 || static_cast<std::size_t>(t) > split.k()) {
    throw Error(ErrorCode::PreconditionViolated, "height exceeds the number of parts");
  }
  if (split.part_of.size() != g.id_bound()) {
    throw Error(ErrorCode::PreconditionViolated, "split was built for another graph");
  }

  RainbowRootedTree tree;
  tree.root = x;
  tree.levels.push_back({x});
  std::vector<std::uint8_t> in_tree(g.id_bound(), 0);
  in_tree[x] = 1;
  std::vector<std::uint8_t> matched(g.id_bound(), 0);

  for (int i = 0; i < t; ++i) {
    const auto& level = tree.levels.back();
    const int target = (i % 2 == 0) ? other_class : own_class;
    const int part = i;  // S_{i+1}
    std::vector<TreeEdge> next_edges;
    std::vector<Edge> matching;
    for (Vertex v : level) {
      bool any = false;
      for (EdgeId id : g.incident(v)) {
        const Edge& e = g.edge(id);
        Edge rest;
        bool usable = true;
        for (Vertex y : e) {
          if (y == v) continue;
          if (split.part_of[y] != part || in_tree[y]) {
            usable = false;
            break;
          }
          rest.push_back(y);
        }
        if (!usable) continue;
        any = true;
        if (std::any_of(rest.begin(), rest.end(), [&](Vertex y) { return matched[y] != 0; })) {
          continue;
        }
        for (Vertex y : rest) matched[y] = 1;
        TreeEdge te;
        te.parent = v;
        te.host = id;
        for (Vertex y : rest) {
          if (g.class_of(y) == target) te.child = y;
          else te.colour.push_back(y);
        }
        matching.push_back(rest);
        next_edges.push_back(std::move(te));
      }
      if (!any && options.strict) {
        throw Error(ErrorCode::EmptyLevel,
                    "vertex " + std::to_string(v) + " on level " + std::to_string(i) +
                        " has no usable link set in part " + std::to_string(i + 1),
                    static_cast<std::size_t>(i));
      }
    }
    if (matching.empty()) {
      if (options.strict) {
        throw Error(ErrorCode::EmptyLevel, "level " + std::to_string(i + 1) + " is empty",
                    static_cast<std::size_t>(i + 1));
      }
      break;
    }
    std::vector<Vertex> next;
    for (const auto& te : next_edges) {
      next.push_back(te.child);
      in_tree[te.child] = 1;
    }
    std::sort(next.begin(), next.end());
    tree.levels.push_back(std::move(next));
    tree.matchings.push_back(std::move(matching));
    for (auto& te : next_edges) tree.edges.push_back(std::move(te));
  }
  finish(tree, g.id_bound());
  return tree;
}

RainbowRootedTree bfs_rainbow_tree(const LinearHypergraph& g, Vertex x, int depth) {
  if (g.r() != 2) throw Error(ErrorCode::BadArity, "BFS tree needs a 2-graph");
  const RootedTree shape = bfs_tree(g, x, depth);
  RainbowRootedTree tree;
  tree.root = x;
  tree.levels.assign(static_cast<std::size_t>(shape.height()) + 1, {});
  for (Vertex v : shape.nodes()) {
    tree.levels[static_cast<std::size_t>(shape.depth(v))].push_back(v);
    if (v == x) continue;
    TreeEdge te;
    te.parent = shape.parent(v);
    te.child = v;
    te.host = *g.edge_of_pair(te.parent, v);
    tree.edges.push_back(std::move(te));
  }
  for (auto& level : tree.levels) std::sort(level.begin(), level.end());
  finish(tree, g.id_bound());
  return tree;
}

RainbowRootedTree truncated_tree(const RainbowRootedTree& tree, int height) {
  RainbowRootedTree out;
  out.root = tree.root;
  const auto keep = static_cast<std::size_t>(std::max(0, std::min(height, tree.height())));
  out.levels.assign(tree.levels.begin(), tree.levels.begin() + static_cast<long>(keep) + 1);
  out.matchings.assign(tree.matchings.begin(), tree.matchings.begin() + static_cast<long>(keep));
  for (const auto& te : tree.edges) {
    if (static_cast<std::size_t>(tree.shape.depth(te.child)) <= keep) out.edges.push_back(te);
  }
  finish(out, tree.shape.bound());
  return out;
}

std::vector<EdgeId> lifted_path(const RainbowRootedTree& tree, Vertex v) {
  std::vector<EdgeId> out;
  for (const TreeEdge* te = tree.edge_to(v); te != nullptr; te = tree.edge_to(te->parent)) {
    out.push_back(te->host);
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::vector<Check> audit_rainbow_tree(const LinearHypergraph& g, const RainbowRootedTree& tree,
                                      int other_class, const SplitPartition* split) {
  Check alternate{"levels alternate between the two classes", true, {}};
  if (g.has_partition()) {
    const int own = g.class_of(tree.root);
    for (std::size_t i = 0; i < tree.levels.size() && alternate.passed; ++i) {
      const int want = i % 2 == 0 ? own : other_class;
      for (Vertex v : tree.levels[i]) {
        if (g.class_of(v) != want) {
          alternate.passed = false;
          alternate.witness = "vertex " + std::to_string(v) + " on level " + std::to_string(i);
          break;
        }
      }
    }
  }

  Check in_parts{"level-i colours lie in S_i", true, {}};
  if (split != nullptr) {
    for (const auto& te : tree.edges) {
      const int level = tree.shape.depth(te.child);
      for (Vertex y : te.colour) {
        if (split->part_of[y] != level - 1 && in_parts.passed) {
          in_parts.passed = false;
          in_parts.witness = "edge " + std::to_string(te.parent) + "-" + std::to_string(te.child);
        }
      }
    }
  }

  Check matchings{"each M_i is a matching", true, {}};
  for (std::size_t i = 0; i < tree.matchings.size() && matchings.passed; ++i) {
    std::vector<Vertex> all;
    for (const Edge& m : tree.matchings[i]) all.insert(all.end(), m.begin(), m.end());
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
      matchings.passed = false;
      matchings.witness = "M_" + std::to_string(i + 1);
    }
  }

  Check rainbow{"colours pairwise distinct and disjoint from V(T)", true, {}};
  const auto tree_vertices = tree.vertices();
  const auto in_tree = make_mask(g.id_bound(), tree_vertices);
  for (std::size_t a = 0; a < tree.edges.size() && rainbow.passed; ++a) {
    for (Vertex y : tree.edges[a].colour) {
      if (in_tree[y]) {
        rainbow.passed = false;
        rainbow.witness = "colour vertex " + std::to_string(y) + " is a tree vertex";
      }
    }
    for (std::size_t b = a + 1; b < tree.edges.size() && rainbow.passed; ++b) {
      if (!tree.edges[a].colour.empty() && tree.edges[a].colour == tree.edges[b].colour) {
        rainbow.passed = false;
        rainbow.witness = "edges " + std::to_string(a) + " and " + std::to_string(b);
      }
    }
  }

  Check proper{"colouring strongly proper", true, {}};
  for (std::size_t a = 0; a < tree.edges.size() && proper.passed; ++a) {
    for (std::size_t b = a + 1; b < tree.edges.size(); ++b) {
      const auto& ea = tree.edges[a];
      const auto& eb = tree.edges[b];
      const bool touch = ea.parent == eb.parent || ea.parent == eb.child ||
                         ea.child == eb.parent || ea.child == eb.child;
      if (touch && !disjoint_sorted(ea.colour, eb.colour)) {
        proper.passed = false;
        proper.witness = "edges " + std::to_string(a) + " and " + std::to_string(b);
        break;
      }
    }
  }

  Check lift{"root paths lift to linear paths", true, {}};
  for (const auto& te : tree.edges) {
    Edge host = te.colour;
    host.push_back(te.parent);
    host.push_back(te.child);
    std::sort(host.begin(), host.end());
    if (g.find_edge(host) != std::optional<EdgeId>(te.host)) {
      lift.passed = false;
      lift.witness = "edge " + std::to_string(te.parent) + "-" + std::to_string(te.child) +
                     " is not a host edge";
      break;
    }
  }
  for (std::size_t n = 0; n < tree_vertices.size() && lift.passed; ++n) {
    const auto path = lifted_path(tree, tree_vertices[n]);
    for (std::size_t a = 0; a < path.size() && lift.passed; ++a) {
      for (std::size_t b = a + 1; b < path.size(); ++b) {
        const Edge& ea = g.edge(path[a]);
        const Edge& eb = g.edge(path[b]);
        std::size_t common = 0;
        for (Vertex y : ea) common += std::binary_search(eb.begin(), eb.end(), y) ? 1 : 0;
        if (common != (b == a + 1 ? 1u : 0u)) {
          lift.passed = false;
          lift.witness = "path to " + std::to_string(tree_vertices[n]);
          break;
        }
      }
    }
  }
  return {alternate, in_parts, matchings, rainbow, proper, lift};
}

}  // namespace hypersat
