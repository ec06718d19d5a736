#pragma once

#include <string>
#include <vector>

#include "hypersat/hypergraph.hpp"

namespace hypersat {

struct BenchRow {
  std::string instance;
  int k = 2;
  std::uint64_t copies = 0;
  double serial_ms = 0.0;    // best of the repetitions
  double parallel_ms = 0.0;
  int threads = 1;
  bool agree = true;         // serial and parallel counts match
};

struct BenchCase {
  std::string name;
  LinearHypergraph graph;
  int k = 2;
};

// Fixed instances: G(n, p) graphs and transversal designs.
std::vector<BenchCase> default_bench_cases(bool quick);

// Times the serial counter against the OpenMP one on every case.
std::vector<BenchRow> run_bench(const std::vector<BenchCase>& cases, int repetitions);

std::string format_bench_table(const std::vector<BenchRow>& rows);

}  // namespace hypersat
