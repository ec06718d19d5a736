#include "hypersat/tree.hpp"

#include <algorithm>
#include <string>

#include "hypersat/error.hpp"

namespace hypersat {

RootedTree RootedTree::from_parents(std::size_t bound, Vertex root,
                                    std::span<const std::pair<Vertex, Vertex>> child_parent) {
  if (root >= bound) throw Error(ErrorCode::PreconditionViolated, "root out of range");
  RootedTree t;
  t.root_ = root;
  t.parent_.assign(bound, kNoVertex);
  t.depth_.assign(bound, -1);
  t.children_.assign(bound, {});
  t.depth_[root] = 0;
  for (std::size_t i = 0; i < child_parent.size(); ++i) {
    const auto [c, p] = child_parent[i];
    if (c >= bound || p >= bound || t.depth_[p] < 0 || t.depth_[c] >= 0) {
      throw Error(ErrorCode::PreconditionViolated,
                  "bad tree link " + std::to_string(c) + " -> " + std::to_string(p), i);
    }
    t.parent_[c] = p;
    t.depth_[c] = t.depth_[p] + 1;
    t.children_[p].push_back(c);
    t.height_ = std::max(t.height_, t.depth_[c]);
  }
  for (auto& ch : t.children_) std::sort(ch.begin(), ch.end());
  t.order_.push_back(root);
  for (std::size_t head = 0; head < t.order_.size(); ++head) {
    for (Vertex c : t.children_[t.order_[head]]) t.order_.push_back(c);
  }
  return t;
}

bool RootedTree::is_ancestor(Vertex a, Vertex d) const {
  if (!contains(a) || !contains(d)) return false;
  while (depth_[d] > depth_[a]) d = parent_[d];
  return d == a;
}

Vertex RootedTree::child_toward(Vertex a, Vertex d) const {
  if (a == d || !is_ancestor(a, d)) return kNoVertex;
  while (parent_[d] != a) d = parent_[d];
  return d;
}

std::vector<Vertex> RootedTree::path_up(Vertex v, Vertex top) const {
  std::vector<Vertex> out{v};
  while (v != top) {
    v = parent_.at(v);
    if (v == kNoVertex) throw Error(ErrorCode::PreconditionViolated, "top is not an ancestor");
    out.push_back(v);
  }
  return out;
}

std::vector<std::size_t> RootedTree::subtree_counts(std::span<const std::uint8_t> in_s) const {
  std::vector<std::size_t> count(bound(), 0);
  for (auto it = order_.rbegin(); it != order_.rend(); ++it) {
    const Vertex v = *it;
    if (v < in_s.size() && in_s[v]) ++count[v];
    if (v != root_) count[parent_[v]] += count[v];
  }
  return count;
}

RootedTree bfs_tree(const LinearHypergraph& g, Vertex root, int max_depth) {
  if (!g.has_vertex(root)) throw Error(ErrorCode::UnknownVertex, "root is not a vertex");
  std::vector<int> depth(g.id_bound(), -1);
  std::vector<std::pair<Vertex, Vertex>> links;
  std::vector<Vertex> frontier{root};
  depth[root] = 0;
  for (int d = 0; d < max_depth && !frontier.empty(); ++d) {
    std::vector<Vertex> next;
    // Frontier is ascending, so the first discoverer is the smallest parent.
    for (Vertex v : frontier) {
      for (Vertex u : g.neighbours(v)) {
        if (depth[u] >= 0) continue;
        depth[u] = d + 1;
        links.emplace_back(u, v);
        next.push_back(u);
      }
    }
    std::sort(next.begin(), next.end());
    frontier = std::move(next);
  }
  std::stable_sort(links.begin(), links.end(), [&](const auto& a, const auto& b) {
    return depth[a.first] < depth[b.first];
  });
  return RootedTree::from_parents(g.id_bound(), root, links);
}

BalancedRoot balanced_root(const RootedTree& tree, std::span<const Vertex> s, std::size_t b) {
  if (b == 0) throw Error(ErrorCode::PreconditionViolated, "b must be positive");
  std::vector<std::uint8_t> in_s(tree.bound(), 0);
  for (Vertex v : s) {
    if (!tree.contains(v)) {
      throw Error(ErrorCode::PreconditionViolated,
                  "S member " + std::to_string(v) + " is not a tree vertex");
    }
    if (in_s[v]) throw Error(ErrorCode::PreconditionViolated, "S has repeated vertices");
    in_s[v] = 1;
  }
  const std::size_t need = b * static_cast<std::size_t>(tree.height()) + 1;
  if (s.size() < need) {
    throw Error(ErrorCode::PreconditionViolated,
                "|S| = " + std::to_string(s.size()) + " is below b*h+1 = " + std::to_string(need));
  }
  const auto count = tree.subtree_counts(in_s);
  Vertex y = tree.root();
  while (true) {
    Vertex best = kNoVertex;
    for (Vertex c : tree.children(y)) {
      if (best == kNoVertex || count[c] > count[best]) best = c;
    }
    if (best == kNoVertex || count[best] + b <= count[y]) {
      return BalancedRoot{y, tree.depth(y), count[y]};
    }
    y = best;
  }
}

std::vector<Check> audit_balanced_root(const RootedTree& tree, std::span<const Vertex> s,
                                       std::size_t b, const BalancedRoot& result) {
  std::vector<std::uint8_t> in_s(tree.bound(), 0);
  for (Vertex v : s) in_s[v] = 1;
  const auto count = tree.subtree_counts(in_s);
  const std::size_t hits = count.at(result.vertex);

  Check keep{"hits >= |S| - depth*b", true, {}};
  const auto drop = static_cast<std::size_t>(result.depth) * b;
  if (hits + drop < s.size() || tree.depth(result.vertex) != result.depth) {
    keep.passed = false;
    keep.witness = "vertex " + std::to_string(result.vertex) + " holds " + std::to_string(hits);
  }
  Check split{"every child holds <= hits - b", true, {}};
  for (Vertex c : tree.children(result.vertex)) {
    if (count[c] + b > hits) {
      split.passed = false;
      split.witness = "child " + std::to_string(c) + " holds " + std::to_string(count[c]);
      break;
    }
  }
  Check range{"depth <= height - 1", true, {}};
  if (tree.height() > 0 && result.depth > tree.height() - 1) {
    range.passed = false;
    range.witness = "depth " + std::to_string(result.depth);
  }
  return {keep, split, range};
}

}  // namespace hypersat
