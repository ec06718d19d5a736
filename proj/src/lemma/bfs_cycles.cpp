#include "hypersat/bfs_cycles.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "hypersat/cross_cut.hpp"
#include "hypersat/error.hpp"
#include "hypersat/extend.hpp"
#include "hypersat/paths.hpp"
#include "hypersat/peel.hpp"
#include "hypersat/rainbow_tree.hpp"
#include "hypersat/split.hpp"
#include "hypersat/tree.hpp"

namespace hypersat {

namespace {

constexpr const char* kNoDenseF = "no stopping level produced dense F";

template <typename... Parts>
std::string cat(const Parts&... parts) {
  std::ostringstream out;
  (out << ... << parts);
  return out.str();
}

struct HEdge {
  Vertex a = kNoVertex;  // tree level side
  Vertex w = kNoVertex;  // outside vertex
  Edge colour;
};

ColouredBipartiteGraph coloured(std::size_t bound, const std::vector<HEdge>& all,
                                const std::vector<std::size_t>& pick) {
  std::vector<Vertex> side_a;
  std::vector<Vertex> side_b;
  std::vector<ColouredEdge> edges;
  for (std::size_t i : pick) {
    side_a.push_back(all[i].a);
    side_b.push_back(all[i].w);
    edges.push_back(ColouredEdge{all[i].a, all[i].w, all[i].colour});
  }
  for (auto* side : {&side_a, &side_b}) {
    std::sort(side->begin(), side->end());
    side->erase(std::unique(side->begin(), side->end()), side->end());
  }
  return ColouredBipartiteGraph(bound, std::move(side_a), std::move(side_b), std::move(edges));
}

// Runs rainbow paths of length 2p+1 in `paths_in` and closes each through
// the apex using the edges of `closing`.
void close_paths(const LinearHypergraph& g, const RainbowRootedTree& tree,
                 const ColouredBipartiteGraph& paths_in, const ColouredBipartiteGraph& closing,
                 Vertex apex_or_none, const std::vector<Vertex>* apex_of, int p,
                 const BfsCycleOptions& options, BfsCycleResult& out) {
  ExtensionContext ctx{&g, &tree, &closing, apex_or_none};
  bool capped = false;
  enumerate_rainbow_paths(paths_in, p, {}, {}, [&](const RainbowPath& path) {
    if (out.paths_tried >= options.max_paths) {
      capped = true;
      return false;
    }
    ++out.paths_tried;
    if (apex_of != nullptr) ctx.apex = (*apex_of)[path.vertices.back()];
    try {
      out.cycles.insert(extend_path_to_cycle(path, ctx).copy);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NoExtension) throw;
      ++out.extension_failures;
    }
    return true;
  });
  if (capped) out.diagnostics.push_back(cat("path cap of ", options.max_paths, " reached"));
}

BfsCycleResult find_graph_cycles(const LinearHypergraph& g, Vertex x, int k,
                                 const BfsCycleOptions& options) {
  BfsCycleResult out;
  const BfsLevels lv = bfs_levels(g, x, k);
  const int h = lv.stopping_level;
  out.stopping_level = h;
  if (h < 0) {
    out.diagnostics.push_back(cat("every level up to ", k - 1, " expands by at least n^(1/k) = ",
                                  lv.expansion));
    out.diagnostics.push_back(kNoDenseF);
    return out;
  }
  if (h == 0) {
    out.diagnostics.push_back(cat("stopping level is 0: |L_1| = ", lv.levels.size() > 1
                                      ? lv.levels[1].size() : 0, " < n^(1/k) = ", lv.expansion));
    out.diagnostics.push_back(kNoDenseF);
    return out;
  }
  const RainbowRootedTree tree = bfs_rainbow_tree(g, x, h);
  const auto& shape = tree.shape;
  const auto& lh = lv.levels[static_cast<std::size_t>(h)];
  const auto in_lh = make_mask(g.id_bound(), lh);
  const std::vector<Vertex> empty;
  const auto& w_all = static_cast<std::size_t>(h) + 1 < lv.levels.size()
                          ? lv.levels[static_cast<std::size_t>(h) + 1] : empty;

  const auto kh = static_cast<std::size_t>(k) * static_cast<std::size_t>(h);
  std::vector<Vertex> apex(g.id_bound(), kNoVertex);
  std::vector<HEdge> f_clean;
  std::vector<std::vector<std::size_t>> by_level(static_cast<std::size_t>(h));
  std::size_t e_f = 0;
  std::size_t dropped = 0;
  for (Vertex w : w_all) {
    std::vector<Vertex> nf;
    for (Vertex v : g.neighbours(w)) {
      if (in_lh[v]) nf.push_back(v);
    }
    e_f += nf.size();
    if (nf.size() <= kh) {
      ++dropped;
      continue;
    }
    const BalancedRoot br = balanced_root(shape, nf, static_cast<std::size_t>(k));
    apex[w] = br.vertex;
    for (Vertex v : nf) {
      if (!shape.is_ancestor(br.vertex, v)) continue;
      by_level[static_cast<std::size_t>(br.depth)].push_back(f_clean.size());
      f_clean.push_back(HEdge{v, w, {}});
    }
  }
  if (f_clean.empty()) {
    out.diagnostics.push_back(cat("e(F) = ", e_f, "; all ", dropped,
                                  " vertices of L_{h+1} have d_F <= kh = ", kh));
    out.diagnostics.push_back(kNoDenseF);
    return out;
  }
  std::size_t j = 0;
  for (std::size_t c = 1; c < by_level.size(); ++c) {
    if (by_level[c].size() > by_level[j].size()) j = c;
  }
  const int m = k - (h - static_cast<int>(j));
  out.level = static_cast<int>(j);
  out.level_vertices = lv.levels[j];
  const auto fj = coloured(g.id_bound(), f_clean, by_level[j]);
  close_paths(g, tree, fj, fj, kNoVertex, &apex, m - 1, options, out);
  if (out.cycles.empty()) out.diagnostics.push_back(cat("no path in F_", j, " extended"));
  return out;
}

class SectorSearch {
 public:
  SectorSearch(const LinearHypergraph& g, const RainbowRootedTree& tree,
               const std::vector<HEdge>& h, int k, int m, const BfsCycleOptions& options,
               BfsCycleResult& out)
      : g_(g), tree_(tree), h_(h), k_(k), m_(m), options_(options), out_(out) {}

  struct Found {
    CycleSet cycles;
    int level = -1;
  };

  Found solve(Vertex z, int height, const std::vector<std::size_t>& edges, double b, double d) {
    Found found;
    const auto& shape = tree_.shape;
    if (height == 0 || edges.empty()) {
      out_.diagnostics.push_back(cat("subtree at ", z, " has height ", height, " and ",
                                     edges.size(), " edges"));
      return found;
    }
    const double need = std::pow(16.0, height) * (2.0 * m_ + 2.0) * k_;
    if (b < need || d < need) {
      out_.diagnostics.push_back(cat("depth ", shape.depth(z), ": b = ", b, ", d = ", d,
                                     " below 16^i(2m+2)k = ", need));
    }
    std::map<Vertex, std::vector<std::size_t>> by_w;
    for (std::size_t i : edges) by_w[h_[i].w].push_back(i);

    const auto slack = 2 * static_cast<std::size_t>(k_) * static_cast<std::size_t>(m_);
    std::vector<std::size_t> strong;
    std::map<Vertex, std::vector<std::size_t>> sector_edges;  // by child of z
    std::map<Vertex, std::size_t> sector_w;
    for (const auto& [w, inc] : by_w) {
      std::map<Vertex, std::size_t> count;
      for (std::size_t i : inc) ++count[shape.child_toward(z, h_[i].a)];
      Vertex dominant = kNoVertex;
      const std::size_t deg = inc.size();
      for (const auto& [sector, c] : count) {
        if (c + slack > deg && 2 * c > deg) {
          dominant = sector;
          break;
        }
      }
      if (dominant == kNoVertex) {
        strong.insert(strong.end(), inc.begin(), inc.end());
        continue;
      }
      ++sector_w[dominant];
      for (std::size_t i : inc) {
        if (shape.child_toward(z, h_[i].a) == dominant) sector_edges[dominant].push_back(i);
      }
    }

    if (2 * strong.size() >= edges.size()) {
      case_one(z, height, edges, strong, found);
      return found;
    }

    std::map<int, std::pair<std::size_t, CycleSet>> by_level;
    for (const auto& [child, sub_edges] : sector_edges) {
      std::size_t level_size = 0;
      for (Vertex v : tree_.levels[static_cast<std::size_t>(shape.depth(z) + height)]) {
        if (shape.is_ancestor(child, v)) ++level_size;
      }
      const auto e = static_cast<double>(sub_edges.size());
      if (e <= d / 16.0 * static_cast<double>(level_size) ||
          e <= b / 16.0 * static_cast<double>(sector_w[child])) {
        continue;
      }
      Found sub = solve(child, height - 1, sub_edges, b / 16.0, d / 16.0);
      if (sub.level < 0) continue;
      auto& slot = by_level[sub.level];
      slot.first += sub_edges.size();
      for (const auto& c : sub.cycles) slot.second.insert(c);
    }
    if (by_level.empty()) {
      out_.diagnostics.push_back(cat("case 2 at ", z, ": no sector subgraph stayed dense"));
      return found;
    }
    auto best = by_level.begin();
    for (auto it = by_level.begin(); it != by_level.end(); ++it) {
      if (it->second.first > best->second.first) best = it;
    }
    found.level = best->first;
    found.cycles = std::move(best->second.second);
    return found;
  }

 private:
  void case_one(Vertex z, int height, const std::vector<std::size_t>& edges,
                const std::vector<std::size_t>& strong, Found& found) {
    const auto& shape = tree_.shape;
    // H_s keeps the whole level under z on side A so average degrees match.
    std::vector<Vertex> side_a;
    for (Vertex v : tree_.levels[static_cast<std::size_t>(shape.depth(z) + height)]) {
      if (shape.is_ancestor(z, v)) side_a.push_back(v);
    }
    std::vector<Vertex> side_b;
    std::vector<Edge> pairs;
    for (std::size_t i : strong) {
      side_b.push_back(h_[i].w);
      pairs.push_back(Edge{std::min(h_[i].a, h_[i].w), std::max(h_[i].a, h_[i].w)});
    }
    std::sort(side_b.begin(), side_b.end());
    side_b.erase(std::unique(side_b.begin(), side_b.end()), side_b.end());
    std::vector<Vertex> all = side_a;
    all.insert(all.end(), side_b.begin(), side_b.end());
    const auto hs = LinearHypergraph::build(2, g_.id_bound(), pairs, all)
                        .with_partition({side_a, side_b});
    const auto peeled = peel_bipartite(hs);
    std::vector<std::size_t> kept;
    for (std::size_t i : strong) {
      if (peeled.graph.edge_of_pair(h_[i].a, h_[i].w)) kept.push_back(i);
    }
    if (kept.empty()) {
      out_.diagnostics.push_back(cat("case 1 at ", z, ": peeling left no edges"));
      return;
    }
    const auto paths_in = coloured(g_.id_bound(), h_, kept);
    const auto closing = coloured(g_.id_bound(), h_, edges);
    BfsCycleResult local;
    close_paths(g_, tree_, paths_in, closing, z, nullptr, k_ - height - 1, options_, local);
    out_.paths_tried += local.paths_tried;
    out_.extension_failures += local.extension_failures;
    for (auto& d : local.diagnostics) out_.diagnostics.push_back(std::move(d));
    found.cycles = std::move(local.cycles);
    found.level = shape.depth(z);
    if (found.cycles.empty()) {
      out_.diagnostics.push_back(cat("case 1 at ", z, ": no rainbow path extended"));
      found.level = -1;
    }
  }

  const LinearHypergraph& g_;
  const RainbowRootedTree& tree_;
  const std::vector<HEdge>& h_;
  int k_;
  int m_;
  const BfsCycleOptions& options_;
  BfsCycleResult& out_;
};

BfsCycleResult find_hyper_cycles(const LinearHypergraph& g, Vertex x, int k,
                                 const BfsCycleOptions& options) {
  BfsCycleResult out;
  if (!g.has_partition()) {
    out.diagnostics.push_back("input has no r-partition");
    return out;
  }
  const int own = g.class_of(x);
  const int other = options.other_class >= 0 ? options.other_class : (own == 0 ? 1 : 0);
  if (other == own || other >= g.r()) {
    out.diagnostics.push_back(cat("class ", other, " cannot pair with the root's class ", own));
    return out;
  }
  std::vector<Vertex> audited = g.partition()[static_cast<std::size_t>(own)];
  const auto& b_side = g.partition()[static_cast<std::size_t>(other)];
  audited.insert(audited.end(), b_side.begin(), b_side.end());
  const double n = static_cast<double>(audited.size());

  SplitPartition split;
  try {
    split = split_vertices(g, audited, k, options.split_floor, options.seed.child(0),
                           options.split_retries);
  } catch (const RetriesExhausted& e) {
    out.diagnostics.push_back(cat("split failed: ", e.what()));
    return out;
  }
  RainbowTreeOptions tree_opt;
  tree_opt.strict = false;
  const RainbowRootedTree tree = build_rainbow_tree(g, x, other, split, k, tree_opt);
  const int height = tree.height();

  int i = -1;
  for (int c = 1; c <= k - 1 && c <= height; ++c) {
    const double next = c + 1 <= height
        ? static_cast<double>(tree.levels[static_cast<std::size_t>(c) + 1].size()) : 0.0;
    if (next <= std::pow(n, static_cast<double>(c + 1) / k)) {
      i = c;
      break;
    }
  }
  out.stopping_level = i;
  if (i < 0) {
    out.diagnostics.push_back(cat("no level i in [1, ", k - 1, "] with |L_{i+1}| <= n^((i+1)/k);",
                                  " tree height ", height));
    return out;
  }
  for (int c = 1; c <= i; ++c) {
    const auto size = static_cast<double>(tree.levels[static_cast<std::size_t>(c)].size());
    if (size <= std::pow(n, static_cast<double>(c) / k)) {
      out.diagnostics.push_back(cat("growth: |L_", c, "| = ", size, " <= n^(", c, "/k)"));
    }
  }

  // F: restricted links of L_i into S_{i+1}, avoiding T'.
  std::vector<std::uint8_t> in_t(g.id_bound(), 0);
  for (int c = 0; c <= i; ++c) {
    for (Vertex v : tree.levels[static_cast<std::size_t>(c)]) in_t[v] = 1;
  }
  std::vector<Edge> f;
  std::vector<Vertex> owner;
  for (Vertex v : tree.levels[static_cast<std::size_t>(i)]) {
    for (EdgeId id : g.incident(v)) {
      Edge rest;
      bool usable = true;
      for (Vertex y : g.edge(id)) {
        if (y == v) continue;
        if (split.part_of[y] != i || in_t[y]) usable = false;
        rest.push_back(y);
      }
      if (!usable) continue;
      f.push_back(std::move(rest));
      owner.push_back(v);
    }
  }
  if (f.empty() || static_cast<std::size_t>(i) >= tree.matchings.size()) {
    out.diagnostics.push_back(cat("F is empty at level ", i));
    return out;
  }
  std::vector<Vertex> cover;
  for (const Edge& e : tree.matchings[static_cast<std::size_t>(i)]) {
    cover.insert(cover.end(), e.begin(), e.end());
  }
  const CrossCutResult cut = cross_cut(f, cover, options.seed.child(1));
  if (cut.derandomized) out.diagnostics.push_back("cross-cut used conditional expectations");
  const auto kept = make_mask(g.id_bound(), cut.kept);

  std::vector<HEdge> hx;
  std::vector<std::size_t> all_edges;
  for (std::size_t idx : cut.edges) {
    HEdge he;
    he.a = owner[idx];
    for (Vertex y : f[idx]) {
      if (kept[y]) he.w = y;
      else he.colour.push_back(y);
    }
    all_edges.push_back(hx.size());
    hx.push_back(std::move(he));
  }
  std::vector<Vertex> w_side;
  for (const auto& he : hx) w_side.push_back(he.w);
  std::sort(w_side.begin(), w_side.end());
  w_side.erase(std::unique(w_side.begin(), w_side.end()), w_side.end());
  if (hx.empty()) {
    out.diagnostics.push_back("H_x is empty");
    return out;
  }
  const auto e_h = static_cast<double>(hx.size());
  const double d = e_h / static_cast<double>(tree.levels[static_cast<std::size_t>(i)].size());
  const double b = e_h / static_cast<double>(w_side.size());

  const RainbowRootedTree t_prime = truncated_tree(tree, i);
  SectorSearch search(g, t_prime, hx, k, g.r() - 2, options, out);
  auto found = search.solve(x, i, all_edges, b, d);
  if (found.level < 0) return out;
  out.level = found.level;
  out.level_vertices = t_prime.levels[static_cast<std::size_t>(found.level)];
  out.cycles = std::move(found.cycles);
  return out;
}

}  // namespace

BfsLevels bfs_levels(const LinearHypergraph& g, Vertex x, int k) {
  if (!g.has_vertex(x)) throw Error(ErrorCode::UnknownVertex, "root is not a vertex");
  if (k < 1) throw Error(ErrorCode::PreconditionViolated, "k must be positive");
  BfsLevels out;
  out.root = x;
  out.expansion = std::pow(static_cast<double>(g.v()), 1.0 / k);
  std::vector<std::uint8_t> seen(g.id_bound(), 0);
  seen[x] = 1;
  out.levels.push_back({x});
  for (int d = 0; d < k; ++d) {
    std::vector<Vertex> next;
    for (Vertex v : out.levels.back()) {
      for (Vertex u : g.neighbours(v)) {
        if (!seen[u]) {
          seen[u] = 1;
          next.push_back(u);
        }
      }
    }
    if (next.empty()) break;
    std::sort(next.begin(), next.end());
    out.levels.push_back(std::move(next));
  }
  for (int i = 0; i <= k - 1 && static_cast<std::size_t>(i) < out.levels.size(); ++i) {
    const double cur = static_cast<double>(out.levels[static_cast<std::size_t>(i)].size());
    const double nxt = static_cast<std::size_t>(i) + 1 < out.levels.size()
        ? static_cast<double>(out.levels[static_cast<std::size_t>(i) + 1].size()) : 0.0;
    if (nxt < out.expansion * cur) {
      out.stopping_level = i;
      break;
    }
  }
  return out;
}

BfsCycleResult bfs_find_cycles(const LinearHypergraph& g, Vertex x, int k,
                               const BfsCycleOptions& options) {
  if (k < 2) {
    BfsCycleResult out;
    out.diagnostics.push_back("k must be at least 2");
    return out;
  }
  if (!g.has_vertex(x)) {
    BfsCycleResult out;
    out.diagnostics.push_back(cat("root ", x, " is not a vertex"));
    return out;
  }
  return g.r() == 2 ? find_graph_cycles(g, x, k, options) : find_hyper_cycles(g, x, k, options);
}

bool verify_bfs_result(const LinearHypergraph& g, const BfsCycleResult& result) {
  for (const auto& copy : result.cycles) {
    if (!is_linear_cycle(g, copy.edge_ids)) return false;
    const bool meets = std::any_of(copy.skeleton.begin(), copy.skeleton.end(), [&](Vertex v) {
      return std::find(result.level_vertices.begin(), result.level_vertices.end(), v) !=
             result.level_vertices.end();
    });
    if (!meets) return false;
  }
  return true;
}

}  // namespace hypersat
