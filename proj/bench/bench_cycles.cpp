// Serial reference against the OpenMP counter on fixed instances.
#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <iostream>

#include <omp.h>

#include "hypersat/bench.hpp"

int main(int argc, char** argv) {
  bool quick = false;
  int reps = 3;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--quick") == 0) {
      quick = true;
    } else if (std::strcmp(argv[i], "--reps") == 0 && i + 1 < argc) {
      reps = std::max(1, std::atoi(argv[++i]));
    } else {
      std::cerr << "usage: bench_cycles [--quick] [--reps N]\n";
      return 2;
    }
  }
  std::cout << "threads: " << omp_get_max_threads() << "\n";
  const auto rows = hypersat::run_bench(hypersat::default_bench_cases(quick), reps);
  std::cout << hypersat::format_bench_table(rows);
  for (const auto& r : rows) {
    if (!r.agree) return 1;
  }
  return 0;
}
