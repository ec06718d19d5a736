#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>
#include <omp.h>

#include "hypersat/audit.hpp"
#include "hypersat/bench.hpp"
#include "hypersat/bfs_cycles.hpp"
#include "hypersat/constructions.hpp"
#include "hypersat/cross_cut.hpp"
#include "hypersat/cycles.hpp"
#include "hypersat/decompose.hpp"
#include "hypersat/error.hpp"
#include "hypersat/generators.hpp"
#include "hypersat/harness.hpp"
#include "hypersat/lhg_io.hpp"
#include "hypersat/rainbow_tree.hpp"
#include "hypersat/split.hpp"

using namespace hypersat;
using nlohmann::json;

namespace {

struct Common {
  std::uint64_t seed = 0;
  int jobs = 0;
  std::string out;
};

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::ParseError, "cannot write " + path);
  f << text;
}

void emit_json(const json& j, const std::string& path) { emit(j.dump(2) + "\n", path); }

json checks_json(const std::vector<Check>& checks) {
  json out = json::array();
  for (const auto& c : checks) {
    json x = {{"name", c.name}, {"passed", c.passed}};
    if (!c.witness.empty()) x["witness"] = c.witness;
    out.push_back(x);
  }
  return out;
}

std::vector<std::size_t> parse_sizes(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const auto v = std::stoull(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw CLI::ValidationError("--classes", "expected comma-separated sizes, got '" + text + "'");
    }
  }
  return out;
}

std::vector<double> parse_grid(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const double v = std::stod(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw CLI::ValidationError("--grid", "expected comma-separated numbers, got '" + text + "'");
    }
  }
  return out;
}

// Contiguous classes from sizes; without sizes, r equal classes when r >= 3
// and r divides the id range.
LinearHypergraph attach_classes(const LinearHypergraph& g, const std::string& spec) {
  std::vector<std::size_t> sizes;
  if (!spec.empty()) {
    sizes = parse_sizes(spec);
  } else if (g.r() >= 3 && g.id_bound() % static_cast<std::size_t>(g.r()) == 0) {
    sizes.assign(static_cast<std::size_t>(g.r()), g.id_bound() / static_cast<std::size_t>(g.r()));
  } else {
    throw Error(ErrorCode::NoPartition, "pass --classes with the class sizes");
  }
  std::size_t total = 0;
  for (auto s : sizes) total += s;
  if (total != g.id_bound()) {
    throw Error(ErrorCode::PartitionViolation, "class sizes must sum to the id range " +
                                                   std::to_string(g.id_bound()));
  }
  std::vector<std::vector<Vertex>> classes(sizes.size());
  Vertex next = 0;
  for (std::size_t c = 0; c < sizes.size(); ++c) {
    for (std::size_t i = 0; i < sizes[c]; ++i) {
      if (g.has_vertex(next)) classes[c].push_back(next);
      ++next;
    }
  }
  return g.with_partition(std::move(classes));
}

LinearHypergraph generate(const std::string& family, std::size_t n, int r, double p, long budget,
                          const std::string& classes, std::size_t q, std::size_t m, Seed seed) {
  if (family == "gnp") return gnp(n, p, seed);
  if (family == "steiner") {
    if (budget >= 0) return sweep_instance("steiner", n, r, static_cast<double>(budget), seed);
    const auto g = partial_steiner(n, r, seed);
    return p < 1.0 ? subsample_edges(g, p, seed.child(3)) : g;
  }
  if (family == "partite") {
    if (classes.empty()) throw CLI::ValidationError("--classes", "partite family needs --classes");
    if (budget < 0) throw CLI::ValidationError("--budget", "partite family needs --budget");
    const auto sizes = parse_sizes(classes);
    return random_r_partite(sizes, static_cast<std::size_t>(budget), seed);
  }
  if (family == "empty") return LinearHypergraph::build(r, n, {});
  if (family == "complete") return constructions::complete_graph(n);
  if (family == "fano") return constructions::fano_plane();
  if (family == "td") return constructions::transversal_design(r, q);
  if (family == "cycle") return constructions::linear_cycle(r, m);
  if (family == "path") return constructions::linear_path(r, m);
  throw CLI::ValidationError("--family", "unknown family '" + family + "'");
}

json error_json(const Error& e) {
  json j = {{"error", std::string(to_string(e.code()))}, {"message", e.what()}};
  j["item"] = e.item() ? json(*e.item()) : json(nullptr);
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Linear cycles in linear r-uniform hypergraphs: generators, exact counts, "
               "lemma procedures and experiments."};
  app.name("hypersat");
  app.require_subcommand(1);
  app.fallthrough();
  app.footer(
      "Environment:\n  HYPERSAT_WORKCAP  node-expansion cap for the cycle enumerator (default 100000000)\n"
      "Exit codes:\n  0 success, 1 domain error (JSON object on standard error), 2 usage error");

  Common common;
  common.jobs = omp_get_num_procs();
  app.add_option("--seed", common.seed, "Master seed")->default_val(0);
  app.add_option("--jobs", common.jobs, "Worker threads (results do not depend on it)")
      ->check(CLI::PositiveNumber);
  app.add_option("-o,--out", common.out, "Output file (default: standard output)");

  std::function<int()> action;

  // gen
  std::string family = "gnp";
  std::size_t n = 10;
  int r = 3;
  double p = 1.0;
  long budget = -1;
  std::string classes;
  std::size_t q = 5;
  std::size_t m = 4;
  auto* gen = app.add_subcommand("gen", "Generate a hypergraph and write it as .lhg");
  gen->add_option("--family", family,
                  "gnp, steiner, partite, empty, complete, fano, td, cycle or path")
      ->default_val("gnp");
  gen->add_option("--n", n, "Number of vertices")->default_val(10);
  gen->add_option("--r", r, "Uniformity (gnp and complete are 2-uniform)")->default_val(3);
  gen->add_option("--p", p, "Edge probability (gnp) or keep probability (steiner)")
      ->default_val(1.0);
  gen->add_option("--budget", budget, "Exact edge count (steiner, partite)");
  gen->add_option("--classes", classes, "Class sizes for partite, e.g. 10,10,10");
  gen->add_option("--q", q, "Prime order for td")->default_val(5);
  gen->add_option("--m", m, "Edge count for cycle and path")->default_val(4);
  gen->callback([&] {
    action = [&] {
      const int arity = family == "gnp" || family == "complete" ? 2 : r;
      emit(to_lhg_string(generate(family, n, arity, p, budget, classes, q, m, Seed(common.seed))),
           common.out);
      return 0;
    };
  });

  // count
  std::string input;
  int k = 2;
  bool list = false;
  bool timing = false;
  auto* count = app.add_subcommand("count", "Count linear 2k-cycles exactly");
  count->add_option("input", input, ".lhg file")->required();
  count->add_option("--k", k, "Half cycle length")->default_val(2)->check(CLI::Range(2, 64));
  count->add_flag("--list", list, "Also list every copy");
  count->add_flag("--timing", timing, "Add wall-clock time (breaks byte-identical output)");
  count->callback([&] {
    action = [&] {
      const auto g = read_lhg_file(input);
      EnumerationOptions opt;
      opt.work_cap = default_work_cap();
      const auto t0 = std::chrono::steady_clock::now();
      json j = {{"r", g.r()}, {"n", g.id_bound()}, {"v", g.v()}, {"e", g.e()}, {"k", k}};
      if (list) {
        const auto set = common.jobs > 1 ? enumerate_linear_cycles_parallel(g, k, opt)
                                         : enumerate_linear_cycles(g, k, opt);
        j["copies"] = set.count();
        json copies = json::array();
        for (const auto& c : set) copies.push_back({{"edges", c.edge_ids}, {"skeleton", c.skeleton}});
        j["list"] = copies;
      } else {
        j["copies"] = common.jobs > 1 ? count_linear_cycles_parallel(g, k, opt)
                                      : count_linear_cycles(g, k, opt);
      }
      if (timing) {
        j["ms"] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                      .count();
      }
      emit_json(j, common.out);
      return 0;
    };
  });

  // bfs
  Vertex root = 0;
  std::size_t max_paths = 100'000;
  double floor = 1.0;
  std::size_t retries = 200;
  int other_class = -1;
  auto* bfs = app.add_subcommand("bfs", "Find cycles through a BFS or rainbow tree from one root");
  bfs->add_option("input", input, ".lhg file")->required();
  bfs->add_option("--root", root, "Root vertex")->default_val(0);
  bfs->add_option("--k", k, "Half cycle length")->default_val(2)->check(CLI::Range(2, 64));
  bfs->add_option("--classes", classes, "Class sizes (r >= 3)");
  bfs->add_option("--floor", floor, "Split floor (r >= 3)")->default_val(1.0);
  bfs->add_option("--retries", retries, "Split retries (r >= 3)")->default_val(200);
  bfs->add_option("--max-paths", max_paths, "Paths examined")->default_val(100000);
  bfs->callback([&] {
    action = [&] {
      auto g = read_lhg_file(input);
      if (g.r() >= 3) g = attach_classes(g, classes);
      BfsCycleOptions opt;
      opt.seed = Seed(common.seed);
      opt.split_floor = floor;
      opt.split_retries = retries;
      opt.max_paths = max_paths;
      const auto res = bfs_find_cycles(g, root, k, opt);
      json cycles = json::array();
      for (const auto& c : res.cycles) cycles.push_back({{"edges", c.edge_ids}, {"skeleton", c.skeleton}});
      emit_json({{"root", root},
                 {"k", k},
                 {"copies", res.cycles.count()},
                 {"level", res.level},
                 {"level_vertices", res.level_vertices},
                 {"stopping_level", res.stopping_level},
                 {"paths_tried", res.paths_tried},
                 {"extension_failures", res.extension_failures},
                 {"verified", verify_bfs_result(g, res)},
                 {"diagnostics", res.diagnostics},
                 {"cycles", cycles}},
                common.out);
      return 0;
    };
  });

  // tree
  int height = 2;
  int parts = 0;
  bool lenient = false;
  auto* tree = app.add_subcommand("tree", "Build a levelled tree (BFS for r = 2, rainbow for r >= 3)");
  tree->add_option("input", input, ".lhg file")->required();
  tree->add_option("--root", root, "Root vertex")->default_val(0);
  tree->add_option("--height", height, "Tree height")->default_val(2)->check(CLI::PositiveNumber);
  tree->add_option("--parts", parts, "Split parts (default: height)");
  tree->add_option("--floor", floor, "Split floor")->default_val(1.0);
  tree->add_option("--retries", retries, "Split retries")->default_val(200);
  tree->add_option("--other-class", other_class, "Second class (default: 1, or 0 for a root in 1)");
  tree->add_option("--classes", classes, "Class sizes (r >= 3)");
  tree->add_flag("--lenient", lenient, "Stop growing at an empty level instead of failing");
  tree->callback([&] {
    action = [&] {
      auto g = read_lhg_file(input);
      RainbowRootedTree t;
      json j;
      if (g.r() == 2) {
        t = bfs_rainbow_tree(g, root, height);
      } else {
        g = attach_classes(g, classes);
        const int own = g.class_of(root);
        const int other = other_class >= 0 ? other_class : (own == 1 ? 0 : 1);
        std::vector<Vertex> audited(g.partition().at(own));
        audited.insert(audited.end(), g.partition().at(other).begin(), g.partition().at(other).end());
        const int kparts = parts > 0 ? parts : height;
        const auto split = split_vertices(g, audited, kparts, floor, Seed(common.seed), retries);
        RainbowTreeOptions opt;
        opt.strict = !lenient;
        t = build_rainbow_tree(g, root, other, split, height, opt);
        j["split_attempts"] = split.attempts;
        j["audit"] = checks_json(audit_rainbow_tree(g, t, other, &split));
      }
      json edges = json::array();
      for (const auto& e : t.edges) {
        edges.push_back({{"parent", e.parent}, {"child", e.child}, {"colour", e.colour}, {"host", e.host}});
      }
      j["root"] = t.root;
      j["height"] = t.height();
      j["levels"] = t.levels;
      j["edges"] = edges;
      emit_json(j, common.out);
      return 0;
    };
  });

  // decompose
  DecomposeOptions dopt;
  std::size_t override_p = 0;
  bool show_parts = false;
  auto* dec = app.add_subcommand("decompose", "Almost-regular decomposition of a dense 2-graph");
  dec->add_option("input", input, ".lhg file")->required();
  dec->add_option("--alpha", dopt.alpha, "Density exponent in (0,1)")->default_val(0.5);
  dec->add_option("--s", dopt.s, "s >= 1")->default_val(1);
  dec->add_option("--t", dopt.t, "t >= s")->default_val(1);
  dec->add_option("--C", dopt.C, "Density constant")->default_val(1.0);
  dec->add_option("--override-p", override_p, "Use this p instead of the formula (>= 3)");
  dec->add_flag("--parts", show_parts, "List the input edge ids of every part");
  dec->callback([&] {
    action = [&] {
      const auto g = read_lhg_file(input);
      if (override_p) dopt.p_override = override_p;
      const auto res = decompose_almost_regular(g, dopt);
      json partsj = json::array();
      for (std::size_t i = 0; i < res.parts.size(); ++i) {
        const auto& a = res.audits[i];
        json x = {{"branch", a.branch == DecomposeBranch::Base ? "base" : "case1"},
                  {"depth", a.depth},
                  {"v", a.v},
                  {"e", a.e},
                  {"min_degree", a.min_degree},
                  {"max_degree", a.max_degree},
                  {"f", a.f},
                  {"almost_regular", a.almost_regular},
                  {"dense", a.dense}};
        if (a.branch == DecomposeBranch::Case1) {
          x["parent_avg_degree"] = a.parent_avg_degree;
          x["max_degree_bound"] = a.max_degree_bound;
          x["min_degree_bound"] = a.min_degree_bound;
        }
        if (show_parts) x["edges"] = res.source_edges[i];
        partsj.push_back(x);
      }
      emit_json({{"p", res.p},
                 {"q", res.q},
                 {"f_input", res.f_input},
                 {"f_sum", res.f_sum},
                 {"f_sum_bound", res.f_sum_bound},
                 {"edge_disjoint", res.edge_disjoint},
                 {"parts", partsj},
                 {"audit", checks_json(audit_decomposition(g, res))}},
                common.out);
      return 0;
    };
  });

  // split
  std::vector<int> audited_classes{0, 1};
  auto* split = app.add_subcommand("split", "Random vertex split with a restricted-link floor");
  split->add_option("input", input, ".lhg file")->required();
  split->add_option("--k", k, "Number of parts")->default_val(2)->check(CLI::PositiveNumber);
  split->add_option("--floor", floor, "Required restricted links per part")->default_val(1.0);
  split->add_option("--retries", retries, "Attempts before giving up")->default_val(200);
  split->add_option("--audited", audited_classes, "Audited classes")->default_str("0 1");
  split->add_option("--classes", classes, "Class sizes");
  split->callback([&] {
    action = [&] {
      const auto g = attach_classes(read_lhg_file(input), classes);
      std::vector<Vertex> audited;
      for (int c : audited_classes) {
        const auto& cls = g.partition().at(static_cast<std::size_t>(c));
        audited.insert(audited.end(), cls.begin(), cls.end());
      }
      const auto s = split_vertices(g, audited, k, floor, Seed(common.seed), retries);
      emit_json({{"k", s.k()},
                 {"floor", s.floor},
                 {"attempts", s.attempts},
                 {"min_restricted", s.min_restricted()},
                 {"parts", s.parts},
                 {"audit", checks_json(audit_split(g, s))}},
                common.out);
      return 0;
    };
  });

  // crosscut
  std::vector<Vertex> cover;
  auto* cross = app.add_subcommand("crosscut", "Cover subset meeting many edges exactly once");
  cross->add_option("input", input, ".lhg file holding the set system F")->required();
  cross->add_option("--cover", cover, "Vertex cover of F (default: every vertex)");
  cross->callback([&] {
    action = [&] {
      const auto g = read_lhg_file(input);
      if (cover.empty()) cover.assign(g.vertices().begin(), g.vertices().end());
      const std::vector<Edge> f(g.edges().begin(), g.edges().end());
      const auto res = cross_cut(f, cover, Seed(common.seed));
      emit_json({{"kept", res.kept},
                 {"edges", res.edges},
                 {"threshold", res.threshold},
                 {"attempts", res.attempts},
                 {"derandomized", res.derandomized},
                 {"audit", checks_json(audit_cross_cut(f, cover, res))}},
                common.out);
      return 0;
    };
  });

  // verify
  std::string suite = "all";
  std::size_t instances = 100;
  auto* verify = app.add_subcommand("verify", "Run lemma audit suites on seeded instances");
  verify->add_option("--suite", suite, "Suite name or 'all'")->default_val("all");
  verify->add_option("--instances", instances, "Instances per suite")->default_val(100);
  verify->callback([&] {
    action = [&] {
      std::vector<std::string> names;
      if (suite == "all") {
        for (auto s : audit_suites()) names.emplace_back(s);
      } else {
        names.push_back(suite);
      }
      json reports = json::array();
      bool ok = true;
      for (const auto& name : names) {
        const auto rep = lemma_audit(name, instances, Seed(common.seed));
        ok = ok && rep.audit->passed == rep.audit->instances;
        std::cerr << name << ": " << rep.audit->passed << "/" << rep.audit->instances << "\n";
        reports.push_back(to_json(rep));
      }
      emit_json(names.size() == 1 ? reports[0] : reports, common.out);
      if (!ok) {
        std::cerr << json{{"error", "AuditFailed"}, {"message", "some instances failed"}, {"item", nullptr}}.dump()
                  << "\n";
        return 1;
      }
      return 0;
    };
  });

  // sweep
  SweepSpec spec;
  std::string grid;
  std::string csv;
  auto* sweep = app.add_subcommand("sweep", "Supersaturation sweep over a density grid");
  sweep->add_option("--family", spec.family, "gnp, steiner or empty")->default_val("gnp");
  sweep->add_option("--n", spec.n, "Number of vertices")->required();
  sweep->add_option("--r", spec.r, "Uniformity")->default_val(2);
  sweep->add_option("--k", spec.k, "Half cycle length")->default_val(2)->check(CLI::Range(2, 64));
  sweep->add_option("--grid", grid, "Comma-separated p values or edge budgets")->required();
  sweep->add_option("--trials", spec.trials, "Trials per grid point")->default_val(10);
  sweep->add_option("--csv", csv, "Also write one CSV row per trial here");
  sweep->callback([&] {
    action = [&] {
      spec.grid = parse_grid(grid);
      spec.seed = Seed(common.seed);
      const auto rep = supersat_sweep(spec);
      if (!csv.empty()) emit(trials_to_csv(rep), csv);
      emit_json(to_json(rep), common.out);
      return 0;
    };
  });

  // expect
  std::size_t trials = 200;
  auto* expect = app.add_subcommand("expect", "Monte Carlo 2k-cycle count in G(n,p) against the closed form");
  expect->add_option("--n", n, "Number of vertices")->required();
  expect->add_option("--p", p, "Edge probability")->required();
  expect->add_option("--k", k, "Half cycle length")->default_val(2)->check(CLI::Range(2, 64));
  expect->add_option("--trials", trials, "Trials")->default_val(200);
  expect->add_option("--csv", csv, "Also write one CSV row per trial here");
  expect->callback([&] {
    action = [&] {
      const auto rep = expectation_check(n, p, k, trials, Seed(common.seed));
      if (!csv.empty()) emit(trials_to_csv(rep), csv);
      emit_json(to_json(rep), common.out);
      return 0;
    };
  });

  // bench
  bool quick = false;
  int reps = 3;
  auto* bench = app.add_subcommand("bench", "Time the serial and OpenMP cycle counters");
  bench->add_flag("--quick", quick, "Small instances only");
  bench->add_option("--reps", reps, "Repetitions (best time is kept)")->default_val(3)->check(CLI::PositiveNumber);
  bench->callback([&] {
    action = [&] {
      const auto rows = run_bench(default_bench_cases(quick), reps);
      emit(format_bench_table(rows), common.out);
      for (const auto& row : rows) {
        if (!row.agree) return 1;
      }
      return 0;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  omp_set_num_threads(common.jobs);
  try {
    return action();
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << error_json(e).dump() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << json{{"error", "Internal"}, {"message", e.what()}, {"item", nullptr}}.dump() << "\n";
    return 1;
  }
}
