#include "hypersat/harness.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>

#include "hypersat/audit.hpp"
#include "hypersat/constructions.hpp"
#include "hypersat/cross_cut.hpp"
#include "hypersat/cycles.hpp"
#include "hypersat/decompose.hpp"
#include "hypersat/error.hpp"
#include "hypersat/generators.hpp"
#include "hypersat/lhg_io.hpp"
#include "hypersat/oracle.hpp"
#include "hypersat/paths.hpp"
#include "hypersat/peel.hpp"
#include "hypersat/rainbow_tree.hpp"
#include "hypersat/split.hpp"
#include "hypersat/tree.hpp"

namespace hypersat {

using nlohmann::json;

namespace {

constexpr std::size_t kSpotEvery = 100;
constexpr std::size_t kDensifySteps = 200'000;

struct Moments {
  double mean = 0.0;
  double variance = 0.0;
};

Moments moments(std::span<const double> xs) {
  Moments m;
  if (xs.empty()) return m;
  for (double x : xs) m.mean += x;
  m.mean /= static_cast<double>(xs.size());
  if (xs.size() > 1) {
    for (double x : xs) m.variance += (x - m.mean) * (x - m.mean);
    m.variance /= static_cast<double>(xs.size() - 1);
  }
  return m;
}

double cycle_ratio(double copies, double edges, std::size_t n, int k) {
  if (edges <= 0.0 || n == 0) return 0.0;
  return copies / std::pow(edges / static_cast<double>(n), 2 * k);
}

struct TrialOutcome {
  TrialRecord record;
  std::size_t spot_checked = 0;
  std::size_t spot_failed = 0;
};

TrialOutcome run_trial(const LinearHypergraph& g, int k, std::uint64_t work_cap) {
  TrialOutcome out;
  out.record.edges = g.e();
  EnumerationOptions opt;
  opt.work_cap = work_cap;
  std::uint64_t seen = 0;
  enumerate_linear_cycles(
      g, k,
      [&](const LinearCycleCopy& c) {
        if (seen++ % kSpotEvery == 0) {
          ++out.spot_checked;
          if (!is_linear_cycle(g, c.edge_ids)) ++out.spot_failed;
        }
        return true;
      },
      opt);
  out.record.copies = seen;
  return out;
}

void summarise(ExperimentReport& report, std::span<const double> grid,
               const std::function<std::optional<double>(double)>& reference) {
  const std::size_t n = report.parameters.n;
  const int k = report.parameters.k;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    PointSummary p;
    p.value = grid[i];
    std::vector<double> copies;
    std::vector<double> edges;
    for (const auto& t : report.trials) {
      if (t.point != i) continue;
      if (t.status == "work_cap") ++p.capped;
      if (t.status != "ok") continue;
      copies.push_back(static_cast<double>(t.copies));
      edges.push_back(static_cast<double>(t.edges));
    }
    p.completed = copies.size();
    const auto c = moments(copies);
    p.mean = c.mean;
    p.variance = c.variance;
    p.mean_edges = moments(edges).mean;
    p.reference = reference(grid[i]);
    p.ratio = cycle_ratio(p.mean, p.mean_edges, n, k);
    p.below_threshold = p.mean_edges < static_cast<double>(n);
    report.points.push_back(p);
  }
}

}  // namespace

LinearHypergraph sweep_instance(std::string_view family, std::size_t n, int r, double value,
                                Seed seed) {
  if (family == "gnp") {
    if (r != 2) throw Error(ErrorCode::PreconditionViolated, "gnp family is 2-uniform");
    return gnp(n, value, seed);
  }
  if (family == "empty") return LinearHypergraph::build(r, n, {});
  if (family == "steiner") {
    if (value < 0.0) throw Error(ErrorCode::PreconditionViolated, "budget must be non-negative");
    const auto budget = static_cast<std::size_t>(std::llround(value));
    auto g = partial_steiner(n, r, seed.child(0));
    if (g.e() < budget) g = densify_packing(g, seed.child(1), kDensifySteps);
    if (g.e() < budget) {
      throw Error(ErrorCode::BudgetInfeasible,
                  "densified system has " + std::to_string(g.e()) + " edges, budget " +
                      std::to_string(budget));
    }
    return sample_edges_exact(g, budget, seed.child(2));
  }
  throw Error(ErrorCode::PreconditionViolated, "unknown family '" + std::string(family) + "'");
}

ExperimentReport supersat_sweep(const SweepSpec& spec) {
  if (spec.trials == 0) throw Error(ErrorCode::PreconditionViolated, "trials must be positive");
  if (spec.k < 2) throw Error(ErrorCode::PreconditionViolated, "k must be at least 2");
  ExperimentReport report;
  report.kind = "sweep";
  auto& par = report.parameters;
  par.family = spec.family;
  par.n = spec.n;
  par.r = spec.r;
  par.k = spec.k;
  par.grid_kind = spec.family == "gnp" ? "p" : spec.family == "steiner" ? "budget" : "value";
  par.grid = spec.grid;
  par.trials = spec.trials;
  par.seed = spec.seed.master();
  par.work_cap = spec.work_cap ? spec.work_cap : default_work_cap();
  if (spec.family != "gnp" && spec.family != "steiner" && spec.family != "empty") {
    throw Error(ErrorCode::PreconditionViolated, "unknown family '" + spec.family + "'");
  }
  if (spec.family == "gnp" && spec.r != 2) {
    throw Error(ErrorCode::PreconditionViolated, "gnp family is 2-uniform");
  }

  const std::size_t points = spec.grid.size();
  const std::size_t total = points * spec.trials;
  std::vector<TrialOutcome> outcomes(total);
#pragma omp parallel for schedule(dynamic)
  for (std::size_t idx = 0; idx < total; ++idx) {
    const std::size_t i = idx / spec.trials;
    const std::size_t t = idx % spec.trials;
    const Seed seed = spec.seed.child(i).child(t);
    TrialOutcome o;
    try {
      const auto g = sweep_instance(spec.family, spec.n, spec.r, spec.grid[i], seed);
      try {
        o = run_trial(g, spec.k, par.work_cap);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::WorkCapExceeded) throw;
        o.record.edges = g.e();
        o.record.status = "work_cap";
      }
    } catch (const Error& e) {
      o.record.status = e.code() == ErrorCode::BudgetInfeasible ? "infeasible" : "fail";
    }
    o.record.point = i;
    o.record.trial = t;
    o.record.seed = seed.master();
    if (o.record.status == "ok") {
      o.record.ratio = cycle_ratio(static_cast<double>(o.record.copies),
                                   static_cast<double>(o.record.edges), spec.n, spec.k);
    }
    outcomes[idx] = std::move(o);
  }
  for (auto& o : outcomes) {
    report.spot_checked += o.spot_checked;
    report.spot_failed += o.spot_failed;
    report.trials.push_back(std::move(o.record));
  }

  summarise(report, spec.grid, [&](double value) -> std::optional<double> {
    if (spec.family == "gnp") return expected_cycle_count(spec.n, value, spec.k);
    if (spec.family == "empty") return 0.0;
    return std::nullopt;
  });

  report.monotone = true;
  double last = -1.0;
  for (const auto& p : report.points) {
    if (p.completed == 0) continue;
    if (p.mean < last) report.monotone = false;
    last = p.mean;
  }
  for (const auto& p : report.points) {
    if (p.below_threshold || p.completed == 0) continue;
    report.c_hat = report.c_hat ? std::min(*report.c_hat, p.ratio) : p.ratio;
  }
  report.c_hat_positive = report.c_hat && *report.c_hat > 0.0;
  return report;
}

double expected_cycle_count(std::size_t n, double p, int k) {
  if (k < 2) throw Error(ErrorCode::PreconditionViolated, "k must be at least 2");
  const auto len = static_cast<std::size_t>(2 * k);
  if (n < len) return 0.0;
  double falling = 1.0;
  for (std::size_t i = 0; i < len; ++i) falling *= static_cast<double>(n - i);
  return falling * std::pow(p, static_cast<double>(len)) / (4.0 * k);
}

ExperimentReport expectation_check(std::size_t n, double p, int k, std::size_t trials, Seed seed,
                                   std::uint64_t work_cap) {
  SweepSpec spec;
  spec.family = "gnp";
  spec.n = n;
  spec.r = 2;
  spec.k = k;
  spec.grid = {p};
  spec.trials = trials;
  spec.seed = seed;
  spec.work_cap = work_cap;
  auto report = supersat_sweep(spec);
  report.kind = "expectation";
  report.c_hat.reset();
  report.c_hat_positive = false;
  report.monotone = false;
  const auto& point = report.points.front();
  report.reference = point.reference;
  const double ref = *point.reference;
  if (point.completed > 0 && point.variance > 0.0) {
    report.z_score = (point.mean - ref) / std::sqrt(point.variance / static_cast<double>(point.completed));
  } else if (point.completed > 0 && point.mean == ref) {
    report.z_score = 0.0;
  }
  return report;
}

// ---------------------------------------------------------------------------
// Audit suites

namespace {

struct InstanceResult {
  bool passed = true;
  json witness;  // filled on failure
};

std::vector<std::string> failed_names(std::span<const Check> checks) {
  std::vector<std::string> out;
  for (const auto& c : checks) {
    if (!c.passed) out.push_back(c.name + (c.witness.empty() ? "" : ": " + c.witness));
  }
  return out;
}

InstanceResult from_checks(std::span<const Check> checks, json instance) {
  InstanceResult r;
  r.passed = all_passed(checks);
  if (!r.passed) {
    r.witness = std::move(instance);
    r.witness["failed"] = failed_names(checks);
  }
  return r;
}

InstanceResult failure(json instance, std::string why) {
  InstanceResult r;
  r.passed = false;
  r.witness = std::move(instance);
  r.witness["failed"] = {std::move(why)};
  return r;
}

double uniform(Rng& rng, double lo, double hi) { return lo + (hi - lo) * rng.uniform01(); }

std::size_t between(Rng& rng, std::size_t lo, std::size_t hi) {
  return lo + static_cast<std::size_t>(rng.below(hi - lo + 1));
}

LinearHypergraph random_bipartite(Rng& rng, std::size_t a, std::size_t b, double p) {
  std::vector<Edge> edges;
  for (Vertex x = 0; x < a; ++x) {
    for (Vertex y = 0; y < b; ++y) {
      if (rng.bernoulli(p)) edges.push_back({x, static_cast<Vertex>(a + y)});
    }
  }
  if (edges.empty()) edges.push_back({0, static_cast<Vertex>(a)});
  std::vector<Vertex> left(a), right(b);
  for (std::size_t i = 0; i < a; ++i) left[i] = static_cast<Vertex>(i);
  for (std::size_t i = 0; i < b; ++i) right[i] = static_cast<Vertex>(a + i);
  return LinearHypergraph::build(2, a + b, std::move(edges)).with_partition({left, right});
}

LinearHypergraph random_partite(Seed seed, std::size_t m, double fill) {
  const std::vector<std::size_t> sizes{m, m, m};
  const auto budget = static_cast<std::size_t>(fill * static_cast<double>(m * m));
  return random_r_partite(sizes, budget, seed);
}

std::vector<Vertex> two_classes(const LinearHypergraph& g) {
  std::vector<Vertex> out(g.partition()[0]);
  out.insert(out.end(), g.partition()[1].begin(), g.partition()[1].end());
  std::sort(out.begin(), out.end());
  return out;
}

InstanceResult audit_balanced_root_instance(Seed seed) {
  Rng rng(seed);
  const std::size_t n = between(rng, 2, 80);
  std::vector<std::pair<Vertex, Vertex>> parents;
  for (Vertex v = 1; v < n; ++v) {
    // Bias towards recent nodes so some trees are deep.
    const auto lo = v > 4 && rng.bernoulli(0.5) ? v - 4 : 0;
    parents.push_back({v, static_cast<Vertex>(lo + rng.below(v - lo))});
  }
  const auto tree = RootedTree::from_parents(n, 0, parents);
  std::vector<Vertex> s;
  for (Vertex v = 0; v < n; ++v) {
    if (rng.bernoulli(0.6)) s.push_back(v);
  }
  const auto h = static_cast<std::size_t>(std::max(tree.height(), 1));
  std::size_t b = between(rng, 1, 3);
  if (s.size() < b * h + 1) b = std::max<std::size_t>(1, s.empty() ? 1 : (s.size() - 1) / h);
  if (s.size() < b * h + 1) {
    s.assign(tree.nodes().begin(), tree.nodes().end());
    std::sort(s.begin(), s.end());
    b = 1;
  }
  json inst = {{"n", n}, {"parents", parents}, {"S", s}, {"b", b}};
  try {
    const auto y = balanced_root(tree, s, b);
    return from_checks(audit_balanced_root(tree, s, b, y), inst);
  } catch (const Error& e) {
    return failure(inst, e.what());
  }
}

InstanceResult audit_peel_instance(Seed seed) {
  Rng rng(seed);
  const auto h = random_bipartite(rng, between(rng, 1, 25), between(rng, 1, 25), uniform(rng, 0.02, 0.7));
  json inst = {{"graph", to_lhg_string(h)}};
  try {
    return from_checks(audit_peel(h, peel_bipartite(h)), inst);
  } catch (const Error& e) {
    return failure(inst, e.what());
  }
}

InstanceResult audit_cross_cut_instance(Seed seed) {
  Rng rng(seed);
  const int u = static_cast<int>(between(rng, 2, 4));
  const std::size_t n = between(rng, static_cast<std::size_t>(u), 18);
  const auto g = subsample_edges(partial_steiner(n, u, seed.child(0)), uniform(rng, 0.0, 1.0),
                                 seed.child(1));
  std::vector<Edge> f(g.edges().begin(), g.edges().end());
  std::vector<std::uint8_t> in_cover(n, 0);
  for (Vertex v = 0; v < n; ++v) in_cover[v] = rng.bernoulli(0.5);
  for (const Edge& e : f) {
    if (std::none_of(e.begin(), e.end(), [&](Vertex x) { return in_cover[x] != 0; })) {
      in_cover[e[rng.below(e.size())]] = 1;
    }
  }
  std::vector<Vertex> cover;
  for (Vertex v = 0; v < n; ++v) {
    if (in_cover[v]) cover.push_back(v);
  }
  json inst = {{"F", f}, {"cover", cover}, {"seed", seed.child(2).master()}};
  try {
    const auto r = cross_cut(f, cover, seed.child(2));
    return from_checks(audit_cross_cut(f, cover, r), inst);
  } catch (const Error& e) {
    return failure(inst, e.what());
  }
}

InstanceResult audit_decompose_instance(Seed seed) {
  Rng rng(seed);
  LinearHypergraph g;
  if (rng.bernoulli(0.5)) {
    g = gnp(between(rng, 30, 70), uniform(rng, 0.15, 0.6), seed.child(0));
  } else {
    // Lopsided: a few hubs carry most edges.
    const std::size_t hubs = between(rng, 3, 8);
    const std::size_t leaves = between(rng, 30, 60);
    std::vector<Edge> edges;
    const double p = uniform(rng, 0.5, 1.0);
    for (Vertex a = 0; a < hubs; ++a) {
      for (Vertex b = 0; b < leaves; ++b) {
        if (rng.bernoulli(p)) edges.push_back({a, static_cast<Vertex>(hubs + b)});
      }
    }
    for (Vertex a = 0; a < leaves; ++a) {
      for (Vertex b = a + 1; b < leaves; ++b) {
        if (rng.bernoulli(0.03)) edges.push_back({static_cast<Vertex>(hubs + a), static_cast<Vertex>(hubs + b)});
      }
    }
    g = LinearHypergraph::build(2, hubs + leaves, std::move(edges));
  }
  DecomposeOptions opt;
  opt.alpha = 0.5;
  opt.C = 0.5 * static_cast<double>(g.e()) / std::pow(static_cast<double>(g.v()), 1.5);
  opt.p_override = between(rng, 3, 6);
  json inst = {{"graph", to_lhg_string(g)}, {"C", opt.C}, {"p", *opt.p_override}};
  if (g.e() == 0) return {};
  try {
    const auto r = decompose_almost_regular(g, opt);
    auto checks = audit_decomposition(g, r);
    checks.push_back({"edge-disjoint flag", r.edge_disjoint, {}});
    return from_checks(checks, inst);
  } catch (const Error& e) {
    return failure(inst, e.what());
  }
}

InstanceResult audit_split_instance(Seed seed) {
  Rng rng(seed);
  const auto g = random_partite(seed.child(0), between(rng, 14, 18), 0.85);
  const auto audited = two_classes(g);
  json inst = {{"graph", to_lhg_string(g)}, {"k", 2}, {"floor", 1.0}};
  try {
    const auto split = split_vertices(g, audited, 2, 1.0, seed.child(1), 500);
    return from_checks(audit_split(g, split), inst);
  } catch (const Error& e) {
    return failure(inst, e.what());
  }
}

InstanceResult audit_rainbow_tree_instance(Seed seed) {
  Rng rng(seed);
  const auto g = random_partite(seed.child(0), between(rng, 12, 25), uniform(rng, 0.3, 0.6));
  const auto audited = two_classes(g);
  const int t = static_cast<int>(between(rng, 1, 3));
  const auto& own = g.partition()[0];
  const Vertex x = own[rng.below(own.size())];
  json inst = {{"graph", to_lhg_string(g)}, {"root", x}, {"t", t}};
  try {
    const auto split = split_vertices(g, audited, t, 0.0, seed.child(1), 1);
    RainbowTreeOptions opt;
    opt.strict = false;
    const auto tree = build_rainbow_tree(g, x, 1, split, t, opt);
    return from_checks(audit_rainbow_tree(g, tree, 1, &split), inst);
  } catch (const Error& e) {
    return failure(inst, e.what());
  }
}

// 3-edge paths in a dense bipartite graph, then rainbow 3-edge paths under a
// strongly proper colouring by singletons.
InstanceResult audit_path_bounds_instance(Seed seed) {
  Rng rng(seed);
  json inst;
  std::vector<Check> checks;

  LinearHypergraph h;
  for (std::uint64_t attempt = 0;; ++attempt) {
    Rng local(seed.child(0).child(attempt));
    const std::size_t a = between(local, 12, 30);
    const std::size_t b = between(local, 12, 30);
    const double floor = 10.0 / static_cast<double>(std::min(a, b));
    h = random_bipartite(local, a, b, uniform(local, std::min(1.0, floor), 1.0));
    const double e = static_cast<double>(h.e());
    if (e / static_cast<double>(a) >= 8.0 && e / static_cast<double>(b) >= 8.0) break;
  }
  const double e = static_cast<double>(h.e());
  const double d_a = e / static_cast<double>(h.partition()[0].size());
  const double d_b = e / static_cast<double>(h.partition()[1].size());
  const double bound = e * d_a * d_b / 128.0;
  const auto paths = static_cast<double>(count_paths(h, 1));
  inst["graph"] = to_lhg_string(h);
  inst["paths"] = paths;
  inst["bound"] = bound;
  checks.push_back({"3-edge paths >= e*dA*dB/2^7 (factor-2 slack)", 2.0 * paths >= bound,
                    std::to_string(paths) + " vs " + std::to_string(bound)});

  static constexpr std::array<std::size_t, 4> primes{11, 13, 17, 19};
  const std::size_t q = primes[rng.below(primes.size())];
  const auto td = subsample_edges(constructions::transversal_design(3, q), uniform(rng, 0.75, 1.0),
                                  seed.child(1));
  // Strip vertices of class 0 or 1 until both minimum degrees reach 8.
  std::vector<std::uint8_t> alive(td.id_bound(), 1);
  std::vector<EdgeId> kept;
  for (bool changed = true; changed;) {
    changed = false;
    kept.clear();
    std::vector<std::size_t> deg(td.id_bound(), 0);
    for (EdgeId id = 0; id < td.e(); ++id) {
      const Edge& ed = td.edge(id);
      const Vertex u = ed[0];
      const Vertex v = ed[1];
      if (alive[u] && alive[v]) {
        kept.push_back(id);
        ++deg[u];
        ++deg[v];
      }
    }
    for (int c = 0; c < 2; ++c) {
      for (Vertex x : td.partition()[c]) {
        if (alive[x] && deg[x] < 8) {
          alive[x] = 0;
          changed = true;
        }
      }
    }
  }
  std::vector<Vertex> side_a, side_b;
  for (Vertex x : td.partition()[0]) {
    if (alive[x]) side_a.push_back(x);
  }
  for (Vertex x : td.partition()[1]) {
    if (alive[x]) side_b.push_back(x);
  }
  std::vector<ColouredEdge> coloured;
  for (EdgeId id : kept) {
    const Edge& ed = td.edge(id);
    coloured.push_back({ed[0], ed[1], {ed[2]}});
  }
  inst["td_q"] = q;
  inst["td_edges"] = kept.size();
  if (!coloured.empty()) {
    const ColouredBipartiteGraph cb(td.id_bound(), side_a, side_b, coloured);
    std::size_t delta_a = std::numeric_limits<std::size_t>::max();
    std::size_t delta_b = delta_a;
    for (Vertex x : side_a) delta_a = std::min(delta_a, cb.degree(x));
    for (Vertex x : side_b) delta_b = std::min(delta_b, cb.degree(x));
    const double rb_bound =
        static_cast<double>(cb.e()) * static_cast<double>(delta_a) * static_cast<double>(delta_b) / 4.0;
    const auto rainbow = static_cast<double>(count_rainbow_paths(cb, 1));
    inst["rainbow_paths"] = rainbow;
    inst["rainbow_bound"] = rb_bound;
    checks.push_back({"rainbow 3-edge paths >= e*dA*dB/4", rainbow >= rb_bound,
                      std::to_string(rainbow) + " vs " + std::to_string(rb_bound)});
  }
  return from_checks(checks, inst);
}

InstanceResult audit_oracle_instance(Seed seed) {
  Rng rng(seed);
  const auto g2 = gnp(between(rng, 3, 9), uniform(rng, 0.1, 0.9), seed.child(0));
  json inst = {{"graph", to_lhg_string(g2)}};
  try {
    std::vector<Check> checks;
    for (int k : {2, 3}) {
      checks.push_back({"r=2 k=" + std::to_string(k),
                        enumerate_linear_cycles(g2, k) == oracle::count_cycles_oracle(g2, k), {}});
    }
    const std::size_t n3 = between(rng, 7, 13);
    const auto full = partial_steiner(n3, 3, seed.child(1));
    const std::size_t m = std::min<std::size_t>(full.e(), between(rng, 1, 10));
    const auto g3 = sample_edges_exact(full, m, seed.child(2));
    inst["graph3"] = to_lhg_string(g3);
    for (int k : {2, 3}) {
      checks.push_back({"r=3 k=" + std::to_string(k),
                        enumerate_linear_cycles(g3, k) == oracle::linear_cycles_by_edge_subsets(g3, k),
                        {}});
    }
    return from_checks(checks, inst);
  } catch (const Error& e) {
    return failure(inst, e.what());
  }
}

using InstanceFn = InstanceResult (*)(Seed);

struct Suite {
  std::string_view name;
  InstanceFn run;
};

constexpr std::array<Suite, 8> kSuites{{
    {"balanced_root", audit_balanced_root_instance},
    {"peel", audit_peel_instance},
    {"decompose", audit_decompose_instance},
    {"cross_cut", audit_cross_cut_instance},
    {"split", audit_split_instance},
    {"rainbow_tree", audit_rainbow_tree_instance},
    {"path_bounds", audit_path_bounds_instance},
    {"oracle_equiv", audit_oracle_instance},
}};

constexpr std::array<std::string_view, 8> kSuiteNames{
    kSuites[0].name, kSuites[1].name, kSuites[2].name, kSuites[3].name,
    kSuites[4].name, kSuites[5].name, kSuites[6].name, kSuites[7].name};

}  // namespace

std::span<const std::string_view> audit_suites() { return kSuiteNames; }

ExperimentReport lemma_audit(std::string_view suite, std::size_t instances, Seed seed) {
  const auto it = std::find_if(kSuites.begin(), kSuites.end(),
                               [&](const Suite& s) { return s.name == suite; });
  if (it == kSuites.end()) {
    throw Error(ErrorCode::PreconditionViolated, "unknown audit suite '" + std::string(suite) + "'");
  }
  std::vector<InstanceResult> results(instances);
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < instances; ++i) {
    try {
      results[i] = it->run(seed.child(i));
    } catch (const std::exception& e) {
      results[i] = failure(json::object(), e.what());
    }
  }
  ExperimentReport report;
  report.kind = "audit";
  report.parameters.family = std::string(suite);
  report.parameters.trials = instances;
  report.parameters.seed = seed.master();
  AuditOutcome out;
  out.suite = std::string(suite);
  out.instances = instances;
  for (std::size_t i = 0; i < instances; ++i) {
    TrialRecord t;
    t.trial = i;
    t.seed = seed.child(i).master();
    t.status = results[i].passed ? "ok" : "fail";
    report.trials.push_back(t);
    if (results[i].passed) {
      ++out.passed;
    } else if (!out.witness) {
      auto w = results[i].witness;
      w["instance"] = i;
      w["seed"] = t.seed;
      out.witness = std::move(w);
    }
  }
  report.audit = std::move(out);
  return report;
}

}  // namespace hypersat
