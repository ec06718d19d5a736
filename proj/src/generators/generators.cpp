#include "hypersat/generators.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <string>

#include "hypersat/error.hpp"

namespace hypersat {

namespace {

void require_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw Error(ErrorCode::PreconditionViolated, "probability must lie in [0,1]");
  }
}

std::vector<Vertex> vertex_list(const LinearHypergraph& g) {
  return {g.vertices().begin(), g.vertices().end()};
}

LinearHypergraph same_frame(const LinearHypergraph& g, std::vector<Edge> edges) {
  auto out = LinearHypergraph::build(g.r(), g.id_bound(), std::move(edges), vertex_list(g));
  if (g.has_partition()) out = out.with_partition(g.partition());
  return out;
}

// Upper-triangular pair flags.
class PairTable {
 public:
  explicit PairTable(std::size_t n) : n_(n), used_(n * n, 0) {}
  bool used(Vertex a, Vertex b) const { return used_[a * n_ + b] != 0; }
  void mark(Vertex a, Vertex b) {
    used_[a * n_ + b] = 1;
    used_[b * n_ + a] = 1;
  }

 private:
  std::size_t n_;
  std::vector<std::uint8_t> used_;
};

bool fits(const PairTable& pairs, const Edge& e) {
  for (std::size_t a = 0; a < e.size(); ++a) {
    for (std::size_t b = a + 1; b < e.size(); ++b) {
      if (pairs.used(e[a], e[b])) return false;
    }
  }
  return true;
}

void mark_all(PairTable& pairs, const Edge& e) {
  for (std::size_t a = 0; a < e.size(); ++a) {
    for (std::size_t b = a + 1; b < e.size(); ++b) pairs.mark(e[a], e[b]);
  }
}

}  // namespace

LinearHypergraph gnp(std::size_t n, double p, Seed seed) {
  require_probability(p);
  Rng rng(seed);
  std::vector<Edge> edges;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      if (rng.bernoulli(p)) edges.push_back({a, b});
    }
  }
  return LinearHypergraph::build(2, n, std::move(edges));
}

LinearHypergraph partial_steiner(std::size_t n, int r, Seed seed) {
  if (r < 2 || n < static_cast<std::size_t>(r)) {
    throw Error(ErrorCode::PreconditionViolated, "partial_steiner needs n >= r >= 2");
  }
  // Number of r-subsets, with a cap so the candidate list stays in memory.
  constexpr double kMaxCandidates = 5e7;
  double count = 1.0;
  for (int i = 0; i < r; ++i) count = count * static_cast<double>(n - i) / (i + 1);
  if (count > kMaxCandidates) {
    throw Error(ErrorCode::SizeGuard, "too many r-subsets for the greedy generator");
  }

  std::vector<Edge> candidates;
  candidates.reserve(static_cast<std::size_t>(count));
  Edge combo(r);
  std::iota(combo.begin(), combo.end(), Vertex{0});
  while (true) {
    candidates.push_back(combo);
    int i = r - 1;
    while (i >= 0 && combo[i] == n - r + i) --i;
    if (i < 0) break;
    ++combo[i];
    for (int j = i + 1; j < r; ++j) combo[j] = combo[j - 1] + 1;
  }

  Rng rng(seed);
  rng.shuffle(candidates);
  PairTable pairs(n);
  std::vector<Edge> accepted;
  for (Edge& e : candidates) {
    if (!fits(pairs, e)) continue;
    mark_all(pairs, e);
    accepted.push_back(std::move(e));
  }
  return LinearHypergraph::build(r, n, std::move(accepted));
}

LinearHypergraph densify_packing(const LinearHypergraph& g, Seed seed,
                                 std::size_t max_steps) {
  if (g.r() != 3) {
    throw Error(ErrorCode::PreconditionViolated, "densify_packing works on 3-graphs");
  }
  const std::size_t n = g.id_bound();
  constexpr std::int32_t kFree = -1;
  std::vector<std::array<Vertex, 3>> triples;
  std::vector<std::int32_t> cover(n * n, kFree);
  std::vector<std::size_t> uncovered(n, 0);
  const auto present = make_mask(n, g.vertices());
  for (Vertex x : g.vertices()) uncovered[x] = g.v() - 1;

  auto set_cover = [&](Vertex a, Vertex b, std::int32_t value) {
    cover[a * n + b] = value;
    cover[b * n + a] = value;
  };
  auto insert = [&](std::array<Vertex, 3> t) {
    const auto id = static_cast<std::int32_t>(triples.size());
    triples.push_back(t);
    for (int i = 0; i < 3; ++i) {
      for (int j = i + 1; j < 3; ++j) set_cover(t[i], t[j], id);
      uncovered[t[i]] -= 2;
    }
  };
  auto erase = [&](std::int32_t id) {
    const auto t = triples[id];
    for (int i = 0; i < 3; ++i) {
      for (int j = i + 1; j < 3; ++j) set_cover(t[i], t[j], kFree);
      uncovered[t[i]] += 2;
    }
    const auto last = static_cast<std::int32_t>(triples.size() - 1);
    if (id != last) {
      triples[id] = triples[last];
      const auto& moved = triples[id];
      for (int i = 0; i < 3; ++i) {
        for (int j = i + 1; j < 3; ++j) set_cover(moved[i], moved[j], id);
      }
    }
    triples.pop_back();
  };
  for (const Edge& e : g.edges()) insert({e[0], e[1], e[2]});

  Rng rng(seed);
  std::vector<Vertex> live;
  std::vector<Vertex> partners;
  for (std::size_t step = 0; step < max_steps; ++step) {
    live.clear();
    for (Vertex x : g.vertices()) {
      if (uncovered[x] >= 2) live.push_back(x);
    }
    if (live.empty()) break;
    const Vertex x = live[rng.below(live.size())];
    partners.clear();
    for (Vertex y : g.vertices()) {
      if (y != x && present[y] && cover[x * n + y] == kFree) partners.push_back(y);
    }
    const auto i = rng.below(partners.size());
    auto j = rng.below(partners.size() - 1);
    if (j >= i) ++j;
    const Vertex y = partners[i];
    const Vertex z = partners[j];
    if (const auto blocker = cover[y * n + z]; blocker != kFree) erase(blocker);
    std::array<Vertex, 3> t{x, y, z};
    std::sort(t.begin(), t.end());
    insert(t);
  }

  std::vector<Edge> edges;
  edges.reserve(triples.size());
  for (const auto& t : triples) edges.push_back({t[0], t[1], t[2]});
  std::sort(edges.begin(), edges.end());
  return same_frame(g, std::move(edges));
}

LinearHypergraph subsample_edges(const LinearHypergraph& g, double p, Seed seed) {
  require_probability(p);
  Rng rng(seed);
  std::vector<Edge> kept;
  for (const Edge& e : g.edges()) {
    if (rng.bernoulli(p)) kept.push_back(e);
  }
  return same_frame(g, std::move(kept));
}

LinearHypergraph sample_edges_exact(const LinearHypergraph& g, std::size_t m, Seed seed) {
  if (m > g.e()) {
    throw Error(ErrorCode::BudgetInfeasible,
                "cannot sample " + std::to_string(m) + " edges from " +
                    std::to_string(g.e()));
  }
  std::vector<EdgeId> ids(g.e());
  std::iota(ids.begin(), ids.end(), EdgeId{0});
  Rng rng(seed);
  // Partial Fisher-Yates: the first m slots form a uniform m-subset.
  for (std::size_t i = 0; i < m; ++i) {
    const auto j = i + static_cast<std::size_t>(rng.below(ids.size() - i));
    std::swap(ids[i], ids[j]);
  }
  ids.resize(m);
  return subgraph_by_edges(g, ids);
}

LinearHypergraph random_r_partite(std::span<const std::size_t> class_sizes,
                                  std::size_t budget, Seed seed) {
  const auto r = static_cast<int>(class_sizes.size());
  if (r < 2) throw Error(ErrorCode::PreconditionViolated, "need at least two classes");
  std::vector<std::vector<Vertex>> classes(r);
  std::vector<Vertex> offset(r, 0);
  Vertex next = 0;
  for (int c = 0; c < r; ++c) {
    if (class_sizes[c] == 0) {
      throw Error(ErrorCode::PreconditionViolated, "partition classes must be nonempty");
    }
    offset[c] = next;
    for (std::size_t i = 0; i < class_sizes[c]; ++i) classes[c].push_back(next++);
  }
  const std::size_t n = next;

  std::size_t pair_cap = budget;
  for (int a = 0; a < r; ++a) {
    for (int b = a + 1; b < r; ++b) pair_cap = std::min(pair_cap, class_sizes[a] * class_sizes[b]);
  }
  if (pair_cap < budget) {
    throw Error(ErrorCode::BudgetInfeasible,
                "budget " + std::to_string(budget) + " exceeds the " + std::to_string(pair_cap) +
                    " pairs between the two smallest classes");
  }

  std::vector<Edge> edges;
  std::size_t best = 0;
  Edge e(r);
  for (std::size_t attempt = 0; attempt < kPartiteRestarts; ++attempt) {
    Rng rng(attempt == 0 ? seed : seed.child(attempt));
    PairTable pairs(n);
    edges.clear();
    std::size_t rejections = 0;
    while (edges.size() < budget && rejections < kPartiteRejectionCap) {
      for (int c = 0; c < r; ++c) {
        e[c] = offset[c] + static_cast<Vertex>(rng.below(class_sizes[c]));
      }
      if (!fits(pairs, e)) {
        ++rejections;
        continue;
      }
      rejections = 0;
      mark_all(pairs, e);
      edges.push_back(e);
    }
    best = std::max(best, edges.size());
    if (edges.size() == budget) break;
  }
  if (edges.size() < budget) {
    throw Error(ErrorCode::BudgetInfeasible,
                "best run reached " + std::to_string(best) + " of " + std::to_string(budget) +
                    " edges; " + std::to_string(kPartiteRestarts) + " runs each stalled after " +
                    std::to_string(kPartiteRejectionCap) + " consecutive rejections");
  }
  return LinearHypergraph::build(r, n, std::move(edges)).with_partition(std::move(classes));
}

}  // namespace hypersat
