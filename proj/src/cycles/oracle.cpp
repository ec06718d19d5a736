#include "hypersat/oracle.hpp"

#include <algorithm>
#include <string>

#include "hypersat/error.hpp"

namespace hypersat::oracle {

namespace {

// Calls f(subset) for every size-m subset of items, in lexicographic order.
template <typename T, typename F>
void for_each_subset(const std::vector<T>& items, std::size_t m, F&& f) {
  if (m > items.size()) return;
  std::vector<std::size_t> idx(m);
  for (std::size_t i = 0; i < m; ++i) idx[i] = i;
  std::vector<T> chosen(m);
  while (true) {
    for (std::size_t i = 0; i < m; ++i) chosen[i] = items[idx[i]];
    f(chosen);
    std::size_t i = m;
    while (i > 0 && idx[i - 1] == items.size() - m + (i - 1)) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < m; ++j) idx[j] = idx[j - 1] + 1;
  }
}

double binomial(std::size_t n, std::size_t m) {
  if (m > n) return 0.0;
  double out = 1.0;
  for (std::size_t i = 0; i < m; ++i) out = out * static_cast<double>(n - i) / (i + 1);
  return out;
}

}  // namespace

CycleSet count_cycles_oracle(const LinearHypergraph& g, int k, std::size_t vertex_cap) {
  if (g.r() != 2) throw Error(ErrorCode::PreconditionViolated, "oracle counts 2-graph cycles");
  if (k < 2) throw Error(ErrorCode::PreconditionViolated, "k must be >= 2");
  if (g.v() > vertex_cap) {
    throw Error(ErrorCode::SizeGuard, "oracle limited to " + std::to_string(vertex_cap) +
                                          " vertices, graph has " + std::to_string(g.v()));
  }
  const std::size_t len = 2 * static_cast<std::size_t>(k);
  std::vector<Vertex> verts(g.vertices().begin(), g.vertices().end());
  CycleSet out;
  for_each_subset(verts, len, [&](const std::vector<Vertex>& subset) {
    // subset is ascending: fix subset[0] first, permute the rest.
    std::vector<Vertex> rest(subset.begin() + 1, subset.end());
    std::vector<Vertex> order(len);
    std::vector<EdgeId> ids(len);
    do {
      if (rest.front() > rest.back()) continue;
      order[0] = subset[0];
      std::copy(rest.begin(), rest.end(), order.begin() + 1);
      bool ok = true;
      for (std::size_t i = 0; i < len && ok; ++i) {
        const auto id = g.edge_of_pair(order[i], order[(i + 1) % len]);
        ok = id.has_value();
        if (ok) ids[i] = *id;
      }
      if (!ok) continue;
      LinearCycleCopy copy;
      copy.edge_ids = ids;
      std::sort(copy.edge_ids.begin(), copy.edge_ids.end());
      copy.skeleton = canonical_cycle(order);
      out.insert(std::move(copy));
    } while (std::next_permutation(rest.begin(), rest.end()));
  });
  return out;
}

CycleSet linear_cycles_by_edge_subsets(const LinearHypergraph& g, int k,
                                       std::size_t subset_cap) {
  if (k < 2) throw Error(ErrorCode::PreconditionViolated, "k must be >= 2");
  const std::size_t len = 2 * static_cast<std::size_t>(k);
  if (binomial(g.e(), len) > static_cast<double>(subset_cap)) {
    throw Error(ErrorCode::SizeGuard, "too many edge subsets for the brute-force oracle");
  }
  std::vector<EdgeId> ids(g.e());
  for (EdgeId i = 0; i < g.e(); ++i) ids[i] = i;
  CycleSet out;
  for_each_subset(ids, len, [&](const std::vector<EdgeId>& subset) {
    if (!is_linear_cycle(g, subset)) return;
    // Recover the cyclic order by walking the intersection graph.
    std::vector<EdgeId> order{subset[0]};
    std::vector<bool> used(len, false);
    used[0] = true;
    while (order.size() < len) {
      const Edge& last = g.edge(order.back());
      for (std::size_t i = 0; i < len; ++i) {
        if (used[i]) continue;
        const Edge& cand = g.edge(subset[i]);
        const bool meets = std::any_of(last.begin(), last.end(), [&](Vertex x) {
          return std::binary_search(cand.begin(), cand.end(), x);
        });
        if (meets) {
          used[i] = true;
          order.push_back(subset[i]);
          break;
        }
      }
    }
    out.insert(make_cycle_copy(g, order));
  });
  return out;
}

}  // namespace hypersat::oracle
