#include "hypersat/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <limits>

#include <omp.h>

#include "hypersat/constructions.hpp"
#include "hypersat/cycles.hpp"
#include "hypersat/generators.hpp"

namespace hypersat {

namespace {

template <class F>
double best_ms(int repetitions, F&& f) {
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i < repetitions; ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    const auto t1 = std::chrono::steady_clock::now();
    best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
  }
  return best;
}

}  // namespace

std::vector<BenchCase> default_bench_cases(bool quick) {
  std::vector<BenchCase> out;
  out.push_back({"gnp(60,0.15)", gnp(60, 0.15, Seed(1)), 2});
  out.push_back({"gnp(40,0.2)", gnp(40, 0.2, Seed(2)), 3});
  out.push_back({"TD(3,11)", constructions::transversal_design(3, 11), 2});
  if (!quick) {
    out.push_back({"gnp(120,0.1)", gnp(120, 0.1, Seed(3)), 2});
    out.push_back({"gnp(60,0.15)", gnp(60, 0.15, Seed(4)), 3});
    out.push_back({"TD(3,17)", constructions::transversal_design(3, 17), 2});
    out.push_back({"TD(4,11)", constructions::transversal_design(4, 11), 3});
  }
  return out;
}

std::vector<BenchRow> run_bench(const std::vector<BenchCase>& cases, int repetitions) {
  std::vector<BenchRow> rows;
  for (const auto& c : cases) {
    BenchRow row;
    row.instance = c.name;
    row.k = c.k;
    row.threads = omp_get_max_threads();
    std::uint64_t serial = 0;
    std::uint64_t parallel = 0;
    row.serial_ms = best_ms(repetitions, [&] { serial = count_linear_cycles(c.graph, c.k); });
    row.parallel_ms =
        best_ms(repetitions, [&] { parallel = count_linear_cycles_parallel(c.graph, c.k); });
    row.copies = serial;
    row.agree = serial == parallel;
    rows.push_back(row);
  }
  return rows;
}

std::string format_bench_table(const std::vector<BenchRow>& rows) {
  std::string out = "instance          k       copies   serial_ms  parallel_ms  threads  speedup  agree\n";
  char buf[256];
  for (const auto& r : rows) {
    const double speedup = r.parallel_ms > 0.0 ? r.serial_ms / r.parallel_ms : 0.0;
    std::snprintf(buf, sizeof buf, "%-16s %2d %12llu %11.2f %12.2f %8d %8.2f  %s\n",
                  r.instance.c_str(), r.k, static_cast<unsigned long long>(r.copies), r.serial_ms,
                  r.parallel_ms, r.threads, speedup, r.agree ? "yes" : "NO");
    out += buf;
  }
  return out;
}

}  // namespace hypersat
