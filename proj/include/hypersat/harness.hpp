#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hypersat/hypergraph.hpp"
#include "hypersat/report.hpp"
#include "hypersat/seed.hpp"

namespace hypersat {

// Families: "gnp" (r = 2, value = p), "steiner" (value = edge budget, drawn
// from a densified greedy partial Steiner system) and "empty".
struct SweepSpec {
  std::string family = "gnp";
  std::size_t n = 0;
  int r = 2;
  int k = 2;
  std::vector<double> grid;
  std::size_t trials = 1;
  Seed seed{0};
  std::uint64_t work_cap = 0;  // 0: default_work_cap()
};

// Host graph of one sweep trial. Throws BudgetInfeasible when a Steiner
// budget cannot be met.
LinearHypergraph sweep_instance(std::string_view family, std::size_t n, int r, double value,
                                Seed seed);

// Trial t of point i uses seed.child(i).child(t). WorkCapExceeded and
// infeasible budgets are recorded per trial and the sweep continues.
ExperimentReport supersat_sweep(const SweepSpec& spec);

// n(n−1)⋯(n−2k+1)·p^(2k) / (4k): expected number of 2k-cycles in G(n, p).
double expected_cycle_count(std::size_t n, double p, int k);

ExperimentReport expectation_check(std::size_t n, double p, int k, std::size_t trials, Seed seed,
                                   std::uint64_t work_cap = 0);

std::span<const std::string_view> audit_suites();

// Instance i uses seed.child(i). Throws PreconditionViolated for an unknown
// suite.
ExperimentReport lemma_audit(std::string_view suite, std::size_t instances, Seed seed);

}  // namespace hypersat
