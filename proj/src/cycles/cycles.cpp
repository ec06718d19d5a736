#include "hypersat/cycles.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <string>

#include <omp.h>

#include "hypersat/error.hpp"

namespace hypersat {

std::uint64_t default_work_cap() {
  if (const char* env = std::getenv("HYPERSAT_WORKCAP")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return kDefaultWorkCap;
}

std::vector<Vertex> canonical_cycle(std::span<const Vertex> cyclic) {
  const std::size_t m = cyclic.size();
  std::vector<Vertex> best(cyclic.begin(), cyclic.end());
  std::vector<Vertex> cand(m);
  for (std::size_t start = 0; start < m; ++start) {
    for (int dir : {1, -1}) {
      for (std::size_t i = 0; i < m; ++i) {
        const std::size_t idx =
            dir == 1 ? (start + i) % m : (start + m - i) % m;
        cand[i] = cyclic[idx];
      }
      if (cand < best) best = cand;
    }
  }
  return best;
}

namespace {

std::size_t shared_count(const Edge& a, const Edge& b, Vertex* witness = nullptr) {
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t hits = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) {
      ++i;
    } else if (b[j] < a[i]) {
      ++j;
    } else {
      if (witness) *witness = a[i];
      ++hits;
      ++i;
      ++j;
    }
  }
  return hits;
}

// Depth-first search state for one thread. `covered` counts how many chosen
// edges contain each vertex.
class CycleSearch {
 public:
  CycleSearch(const LinearHypergraph& g, int k, std::uint64_t work_cap,
              std::atomic<std::uint64_t>* shared_nodes)
      : g_(g),
        length_(2 * static_cast<std::size_t>(k)),
        work_cap_(work_cap),
        shared_nodes_(shared_nodes),
        covered_(g.id_bound(), 0),
        seq_(length_),
        junction_(length_) {}

  template <typename Emit>
  bool run_from(EdgeId first, Emit&& emit) {
    push(first);
    seq_[0] = first;
    bool keep_going = true;
    for (Vertex j1 : g_.edge(first)) {
      for (EdgeId f : g_.incident(j1)) {
        if (f <= first) continue;
        if (!only_shared_at(f, j1)) continue;
        junction_[0] = j1;
        seq_[1] = f;
        push(f);
        keep_going = extend(2, emit);
        pop(f);
        if (!keep_going) break;
      }
      if (!keep_going) break;
    }
    pop(first);
    return keep_going;
  }

  std::uint64_t nodes() const noexcept { return nodes_; }
  std::function<void(std::uint64_t)> progress;

 private:
  // seq_[0..depth) chosen; picks seq_[depth].
  template <typename Emit>
  bool extend(std::size_t depth, Emit& emit) {
    const EdgeId first = seq_[0];
    const EdgeId last = seq_[depth - 1];
    const Vertex previous = junction_[depth - 2];
    const bool closing = depth + 1 == length_;
    for (Vertex u : g_.edge(last)) {
      if (u == previous) continue;
      for (EdgeId f : g_.incident(u)) {
        if (f <= first || f == last) continue;
        if (closing) {
          if (f <= seq_[1]) continue;
          const Vertex w = closing_vertex(f, u);
          if (w == kNoVertex) continue;
          seq_[depth] = f;
          junction_[depth - 1] = u;
          junction_[depth] = w;
          count_node();
          if (!emit(std::span<const EdgeId>(seq_), std::span<const Vertex>(junction_))) {
            return false;
          }
          continue;
        }
        if (!only_shared_at(f, u)) continue;
        seq_[depth] = f;
        junction_[depth - 1] = u;
        push(f);
        const bool go = extend(depth + 1, emit);
        pop(f);
        if (!go) return false;
      }
    }
    return true;
  }

  // f ∩ covered == {u}.
  bool only_shared_at(EdgeId f, Vertex u) const {
    for (Vertex y : g_.edge(f)) {
      if (y != u && covered_[y] != 0) return false;
    }
    return true;
  }

  // For the closing edge: f ∩ covered == {u, w} with w ∈ e_1 \ {j_1}.
  Vertex closing_vertex(EdgeId f, Vertex u) const {
    Vertex w = kNoVertex;
    for (Vertex y : g_.edge(f)) {
      if (y == u || covered_[y] == 0) continue;
      if (w != kNoVertex) return kNoVertex;
      w = y;
    }
    if (w == kNoVertex || w == junction_[0]) return kNoVertex;
    const Edge& e1 = g_.edge(seq_[0]);
    return std::binary_search(e1.begin(), e1.end(), w) ? w : kNoVertex;
  }

  void push(EdgeId f) {
    for (Vertex y : g_.edge(f)) ++covered_[y];
    count_node();
  }
  void pop(EdgeId f) {
    for (Vertex y : g_.edge(f)) --covered_[y];
  }

  void count_node() {
    ++nodes_;
    if ((nodes_ & 0xFFFFF) == 0 && progress) progress(nodes_);
    if (work_cap_ == 0) return;
    if (shared_nodes_ != nullptr) {
      // Flush in batches to keep contention low.
      if ((nodes_ & 0x3FF) == 0 &&
          shared_nodes_->fetch_add(0x400, std::memory_order_relaxed) + 0x400 > work_cap_) {
        throw_cap();
      }
    } else if (nodes_ > work_cap_) {
      throw_cap();
    }
  }

  [[noreturn]] void throw_cap() const {
    throw Error(ErrorCode::WorkCapExceeded,
                "enumeration exceeded " + std::to_string(work_cap_) + " node expansions");
  }

  const LinearHypergraph& g_;
  std::size_t length_;
  std::uint64_t work_cap_;
  std::atomic<std::uint64_t>* shared_nodes_;
  std::uint64_t nodes_ = 0;
  std::vector<std::uint32_t> covered_;
  std::vector<EdgeId> seq_;
  std::vector<Vertex> junction_;  // junction_[i] = seq_[i] ∩ seq_[i+1]
};

void require_k(int k) {
  if (k < 2) throw Error(ErrorCode::PreconditionViolated, "cycle half-length k must be >= 2");
}

LinearCycleCopy copy_from(std::span<const EdgeId> seq, std::span<const Vertex> junctions) {
  LinearCycleCopy c;
  c.edge_ids.assign(seq.begin(), seq.end());
  std::sort(c.edge_ids.begin(), c.edge_ids.end());
  c.skeleton = canonical_cycle(junctions);
  return c;
}

}  // namespace

EnumerationStats enumerate_linear_cycles(const LinearHypergraph& g, int k,
                                         const CycleVisitor& visit,
                                         const EnumerationOptions& options) {
  require_k(k);
  EnumerationStats stats;
  CycleSearch search(g, k, options.work_cap, nullptr);
  search.progress = options.progress;
  auto emit = [&](std::span<const EdgeId> seq, std::span<const Vertex> junctions) {
    ++stats.copies;
    return visit(copy_from(seq, junctions));
  };
  for (EdgeId first = 0; first < g.e(); ++first) {
    if (!search.run_from(first, emit)) {
      stats.stopped = true;
      break;
    }
  }
  stats.nodes = search.nodes();
  return stats;
}

CycleSet enumerate_linear_cycles(const LinearHypergraph& g, int k,
                                 const EnumerationOptions& options) {
  CycleSet out;
  enumerate_linear_cycles(
      g, k, [&](const LinearCycleCopy& c) { out.insert(c); return true; }, options);
  return out;
}

std::uint64_t count_linear_cycles(const LinearHypergraph& g, int k,
                                  const EnumerationOptions& options) {
  require_k(k);
  std::uint64_t total = 0;
  CycleSearch search(g, k, options.work_cap, nullptr);
  search.progress = options.progress;
  auto emit = [&](std::span<const EdgeId>, std::span<const Vertex>) {
    ++total;
    return true;
  };
  for (EdgeId first = 0; first < g.e(); ++first) search.run_from(first, emit);
  return total;
}

namespace {

// Runs `body(search, first)` over all start edges on the OpenMP team and
// rethrows the first exception on the calling thread.
template <typename Body>
void parallel_over_starts(const LinearHypergraph& g, int k,
                          const EnumerationOptions& options, Body&& body) {
  require_k(k);
  std::atomic<std::uint64_t> shared_nodes{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  const auto edges = static_cast<std::int64_t>(g.e());
#pragma omp parallel
  {
    CycleSearch search(g, k, options.work_cap, &shared_nodes);
#pragma omp for schedule(dynamic, 8)
    for (std::int64_t first = 0; first < edges; ++first) {
      if (failed.load(std::memory_order_relaxed)) continue;
      try {
        body(search, static_cast<EdgeId>(first));
      } catch (...) {
#pragma omp critical(hypersat_cycle_failure)
        {
          if (!failure) failure = std::current_exception();
        }
        failed.store(true, std::memory_order_relaxed);
      }
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace

std::uint64_t count_linear_cycles_parallel(const LinearHypergraph& g, int k,
                                           const EnumerationOptions& options) {
  std::atomic<std::uint64_t> total{0};
  parallel_over_starts(g, k, options, [&](CycleSearch& search, EdgeId first) {
    std::uint64_t local = 0;
    search.run_from(first, [&](std::span<const EdgeId>, std::span<const Vertex>) {
      ++local;
      return true;
    });
    total.fetch_add(local, std::memory_order_relaxed);
  });
  return total.load();
}

CycleSet enumerate_linear_cycles_parallel(const LinearHypergraph& g, int k,
                                          const EnumerationOptions& options) {
  std::vector<std::vector<LinearCycleCopy>> per_start(g.e());
  parallel_over_starts(g, k, options, [&](CycleSearch& search, EdgeId first) {
    auto& bucket = per_start[first];
    search.run_from(first, [&](std::span<const EdgeId> seq, std::span<const Vertex> j) {
      bucket.push_back(copy_from(seq, j));
      return true;
    });
  });
  CycleSet out;
  for (auto& bucket : per_start) {
    for (auto& c : bucket) out.insert(std::move(c));
  }
  return out;
}

bool is_linear_cycle_sequence(const LinearHypergraph& g, std::span<const EdgeId> ordered) {
  const std::size_t m = ordered.size();
  if (m < 3) return false;
  for (EdgeId id : ordered) {
    if (id >= g.e()) return false;
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      const bool consecutive = (j == i + 1) || (i == 0 && j == m - 1);
      const std::size_t shared = shared_count(g.edge(ordered[i]), g.edge(ordered[j]));
      if (ordered[i] == ordered[j]) return false;
      if (consecutive ? shared != 1 : shared != 0) return false;
    }
  }
  // Distinct junctions; only m = 3 can fail here.
  std::vector<Vertex> junctions(m);
  for (std::size_t i = 0; i < m; ++i) {
    shared_count(g.edge(ordered[i]), g.edge(ordered[(i + 1) % m]), &junctions[i]);
  }
  std::sort(junctions.begin(), junctions.end());
  return std::adjacent_find(junctions.begin(), junctions.end()) == junctions.end();
}

bool is_linear_cycle(const LinearHypergraph& g, std::span<const EdgeId> edges) {
  const std::size_t m = edges.size();
  if (m < 3) return false;
  // Intersection graph must be 2-regular and connected, with singleton
  // intersections only.
  std::vector<std::vector<std::size_t>> adj(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (edges[i] >= g.e()) return false;
    for (std::size_t j = i + 1; j < m; ++j) {
      if (edges[i] == edges[j]) return false;
      const std::size_t shared = shared_count(g.edge(edges[i]), g.edge(edges[j]));
      if (shared > 1) return false;
      if (shared == 1) {
        adj[i].push_back(j);
        adj[j].push_back(i);
      }
    }
  }
  for (const auto& a : adj) {
    if (a.size() != 2) return false;
  }
  std::size_t prev = m;
  std::size_t cur = 0;
  std::size_t steps = 0;
  do {
    const std::size_t next = adj[cur][0] != prev ? adj[cur][0] : adj[cur][1];
    prev = cur;
    cur = next;
    ++steps;
  } while (cur != 0 && steps <= m);
  if (steps != m) return false;
  if (m == 3) {
    // Three edges through one vertex also meet pairwise.
    std::vector<EdgeId> order(edges.begin(), edges.end());
    return is_linear_cycle_sequence(g, order);
  }
  return true;
}

LinearCycleCopy make_cycle_copy(const LinearHypergraph& g, std::span<const EdgeId> ordered) {
  if (!is_linear_cycle_sequence(g, ordered)) {
    throw Error(ErrorCode::PreconditionViolated, "edge sequence is not a linear cycle");
  }
  const std::size_t m = ordered.size();
  std::vector<Vertex> junctions(m);
  for (std::size_t i = 0; i < m; ++i) {
    Vertex w = kNoVertex;
    shared_count(g.edge(ordered[i]), g.edge(ordered[(i + 1) % m]), &w);
    junctions[i] = w;
  }
  return copy_from(ordered, junctions);
}

}  // namespace hypersat
