#pragma once

#include <cstdint>
#include <functional>
#include <set>
#include <span>
#include <vector>

#include "hypersat/hypergraph.hpp"

namespace hypersat {

// One copy of C^(r)_{2k}. edge_ids is sorted and identifies the copy;
// skeleton lists the junction vertices e_i ∩ e_{i+1} in cyclic order, reduced
// to its lexicographically least rotation/reflection.
struct LinearCycleCopy {
  std::vector<EdgeId> edge_ids;
  std::vector<Vertex> skeleton;

  friend bool operator==(const LinearCycleCopy&, const LinearCycleCopy&) = default;
};

struct ByEdgeSet {
  bool operator()(const LinearCycleCopy& a, const LinearCycleCopy& b) const {
    return a.edge_ids < b.edge_ids;
  }
};

// Copies deduplicated by edge set, iterated in edge-set order.
class CycleSet {
 public:
  bool insert(LinearCycleCopy copy) { return copies_.insert(std::move(copy)).second; }
  bool contains(const std::vector<EdgeId>& sorted_edges) const {
    return copies_.contains(LinearCycleCopy{sorted_edges, {}});
  }
  std::size_t count() const noexcept { return copies_.size(); }
  bool empty() const noexcept { return copies_.empty(); }
  auto begin() const { return copies_.begin(); }
  auto end() const { return copies_.end(); }

  friend bool operator==(const CycleSet& a, const CycleSet& b) {
    return a.copies_ == b.copies_;
  }

 private:
  std::set<LinearCycleCopy, ByEdgeSet> copies_;
};

inline constexpr std::uint64_t kDefaultWorkCap = 100'000'000;

// kDefaultWorkCap unless HYPERSAT_WORKCAP holds a positive integer.
std::uint64_t default_work_cap();

struct EnumerationOptions {
  // Node expansions (edges pushed on the search stack); 0 = unlimited.
  // Exceeding it throws WorkCapExceeded.
  std::uint64_t work_cap = 0;
  // Called every 2^20 expansions with the running total (serial paths only).
  std::function<void(std::uint64_t)> progress;
};

struct EnumerationStats {
  std::uint64_t copies = 0;
  std::uint64_t nodes = 0;
  bool stopped = false;  // the visitor asked to stop
};

// Return false to stop the enumeration.
using CycleVisitor = std::function<bool(const LinearCycleCopy&)>;

// Serial reference enumerator. DFS over edge sequences e_1..e_{2k} where e_1
// is the smallest edge id of the copy and e_2 < e_{2k}, so every copy is
// reached exactly once.
EnumerationStats enumerate_linear_cycles(const LinearHypergraph& g, int k,
                                         const CycleVisitor& visit,
                                         const EnumerationOptions& options = {});
CycleSet enumerate_linear_cycles(const LinearHypergraph& g, int k,
                                 const EnumerationOptions& options = {});
std::uint64_t count_linear_cycles(const LinearHypergraph& g, int k,
                                  const EnumerationOptions& options = {});

// OpenMP kernels: start edges are split across threads. Start-minimality
// partitions the copies, so no cross-thread dedup is needed.
CycleSet enumerate_linear_cycles_parallel(const LinearHypergraph& g, int k,
                                          const EnumerationOptions& options = {});
std::uint64_t count_linear_cycles_parallel(const LinearHypergraph& g, int k,
                                           const EnumerationOptions& options = {});

// Least rotation/reflection of a cyclic sequence.
std::vector<Vertex> canonical_cycle(std::span<const Vertex> cyclic);

// Order-free predicate: the edges form one C^(r)_{m}, m = edges.size() >= 3.
bool is_linear_cycle(const LinearHypergraph& g, std::span<const EdgeId> edges);
// Ordered predicate: |e_i ∩ e_{i+1}| = 1 cyclically, all other pairs disjoint.
bool is_linear_cycle_sequence(const LinearHypergraph& g, std::span<const EdgeId> ordered);
// Builds the canonical copy from a valid ordered sequence.
LinearCycleCopy make_cycle_copy(const LinearHypergraph& g, std::span<const EdgeId> ordered);

}  // namespace hypersat
