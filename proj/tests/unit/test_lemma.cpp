#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "hypersat/audit.hpp"
#include "hypersat/bfs_cycles.hpp"
#include "hypersat/constructions.hpp"
#include "hypersat/cross_cut.hpp"
#include "hypersat/cycles.hpp"
#include "hypersat/decompose.hpp"
#include "hypersat/error.hpp"
#include "hypersat/extend.hpp"
#include "hypersat/generators.hpp"
#include "hypersat/oracle.hpp"
#include "hypersat/peel.hpp"
#include "hypersat/rainbow_tree.hpp"
#include "hypersat/split.hpp"
#include "hypersat/tree.hpp"

using namespace hypersat;
namespace hc = hypersat::constructions;

namespace {

using Pairs = std::vector<std::pair<Vertex, Vertex>>;

std::string failed(const std::vector<Check>& checks) {
  std::string out;
  for (const auto& c : checks) {
    if (!c.passed) out += c.name + " (" + c.witness + "); ";
  }
  return out;
}

LinearHypergraph bipartite_from(std::size_t a, std::size_t b, const std::vector<Edge>& edges) {
  std::vector<Vertex> left, right;
  for (Vertex v = 0; v < a; ++v) left.push_back(v);
  for (Vertex v = 0; v < b; ++v) right.push_back(static_cast<Vertex>(a) + v);
  return LinearHypergraph::build(2, a + b, edges).with_partition({left, right});
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::PreconditionViolated;
}

}  // namespace

TEST_CASE("rooted tree basics") {
  // 0 - {1, 2}, 1 - {3, 4}
  const Pairs p{{1, 0}, {2, 0}, {3, 1}, {4, 1}};
  const auto t = RootedTree::from_parents(6, 0, p);
  CHECK(t.size() == 5);
  CHECK(t.height() == 2);
  CHECK(t.depth(4) == 2);
  CHECK_FALSE(t.contains(5));
  CHECK(t.is_ancestor(0, 3));
  CHECK(t.is_ancestor(3, 3));
  CHECK_FALSE(t.is_ancestor(2, 3));
  CHECK(t.child_toward(0, 4) == 1);
  CHECK(t.path_up(4, 0) == std::vector<Vertex>{4, 1, 0});
  const Pairs bad{{3, 1}};
  CHECK_THROWS_AS(RootedTree::from_parents(6, 0, bad), Error);
}

TEST_CASE("balanced root: three leaves under the root") {
  const Pairs p{{1, 0}, {2, 0}, {3, 0}};
  const auto t = RootedTree::from_parents(4, 0, p);
  const std::vector<Vertex> s{1, 2, 3};
  const auto y = balanced_root(t, s, 1);
  CHECK(y.vertex == 0);
  CHECK(y.depth == 0);
  CHECK(all_passed(audit_balanced_root(t, s, 1, y)));
}

TEST_CASE("balanced root: descends through a single child") {
  const Pairs p{{1, 0}, {2, 1}, {3, 1}, {4, 1}, {5, 1}};
  const auto t = RootedTree::from_parents(6, 0, p);
  const std::vector<Vertex> s{2, 3, 4, 5};
  const auto y = balanced_root(t, s, 1);
  CHECK(y.vertex == 1);
  CHECK(y.depth == 1);
  CHECK(y.hits == 4);
  CHECK(all_passed(audit_balanced_root(t, s, 1, y)));
}

TEST_CASE("balanced root: two heavy children stay at the root") {
  Pairs p{{1, 0}, {2, 0}};
  std::vector<Vertex> s;
  for (Vertex i = 0; i < 10; ++i) {
    p.push_back({3 + i, i < 5 ? 1u : 2u});
    s.push_back(3 + i);
  }
  const auto t = RootedTree::from_parents(13, 0, p);
  const auto y = balanced_root(t, s, 3);
  CHECK(y.vertex == 0);
  CHECK(y.depth == 0);
  CHECK(all_passed(audit_balanced_root(t, s, 3, y)));
}

TEST_CASE("balanced root property on random trees") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Rng rng{Seed(seed)};
    const std::size_t n = 5 + rng.below(60);
    Pairs p;
    for (Vertex v = 1; v < n; ++v) p.push_back({v, static_cast<Vertex>(rng.below(v))});
    const auto t = RootedTree::from_parents(n, 0, p);
    std::vector<Vertex> s;
    for (Vertex v = 0; v < n; ++v) {
      if (rng.bernoulli(0.5)) s.push_back(v);
    }
    const std::size_t b = 1 + rng.below(3);
    if (s.size() < b * static_cast<std::size_t>(t.height()) + 1) {
      CHECK_THROWS_AS(balanced_root(t, s, b), Error);
      continue;
    }
    const auto y = balanced_root(t, s, b);
    const auto checks = audit_balanced_root(t, s, b, y);
    INFO(failed(checks));
    CHECK(all_passed(checks));
    CHECK(s.size() - y.hits <= static_cast<std::size_t>(y.depth) * b);
  }
}

TEST_CASE("bfs tree uses the smallest-id parent") {
  const auto t = bfs_tree(hc::complete_bipartite(2, 3), 2, 5);
  CHECK(t.height() == 2);
  CHECK(t.parent(1) == 2);
  CHECK(t.parent(3) == 0);
  CHECK(t.parent(4) == 0);
}

TEST_CASE("peel leaves K33 unchanged") {
  const auto k = hc::complete_bipartite(3, 3);
  const auto r = peel_bipartite(k);
  CHECK(r.graph.e() == 9);
  CHECK(r.removed.empty());
  CHECK(all_passed(audit_peel(k, r)));
}

TEST_CASE("peel removes the light vertex") {
  // a1 ~ b1..b8, a2 ~ b1
  std::vector<Edge> edges;
  for (Vertex b = 2; b < 10; ++b) edges.push_back({0, b});
  edges.push_back({1, 2});
  const auto h = bipartite_from(2, 8, edges);
  const auto r = peel_bipartite(h);
  CHECK(r.d_a == doctest::Approx(4.5));
  CHECK(r.graph.e() == 8);
  CHECK(r.removed == std::vector<Vertex>{1});
  CHECK(all_passed(audit_peel(h, r)));
}

TEST_CASE("peel keeps a single edge") {
  const auto h = bipartite_from(1, 1, {{0, 1}});
  const auto r = peel_bipartite(h);
  CHECK(r.graph.e() == 1);
  CHECK(all_passed(audit_peel(h, r)));
}

TEST_CASE("peel guarantees on random bipartite graphs") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Rng rng{Seed(seed)};
    const std::size_t a = 2 + rng.below(20);
    const std::size_t b = 2 + rng.below(20);
    const double p = 0.05 + 0.6 * rng.uniform01();
    std::vector<Edge> edges;
    for (Vertex x = 0; x < a; ++x) {
      for (Vertex y = 0; y < b; ++y) {
        if (rng.bernoulli(p)) edges.push_back({x, static_cast<Vertex>(a + y)});
      }
    }
    const auto h = bipartite_from(a, b, edges);
    const auto r = peel_bipartite(h);
    const auto checks = audit_peel(h, r);
    INFO(failed(checks));
    CHECK(all_passed(checks));
  }
}

TEST_CASE("decomposition p and q") {
  CHECK(decomposition_p(0.5, 4, 4) == 4096);
  CHECK(decomposition_p(0.5, 1, 1) == 256);
  CHECK(code_of([] { decomposition_p(0.01, 1, 1); }) == ErrorCode::SizeGuard);
}

TEST_CASE("decomposition base case returns G") {
  const auto g = hc::complete_graph(30);
  DecomposeOptions opt;
  opt.s = 4;
  opt.t = 4;
  const auto r = decompose_almost_regular(g, opt);
  CHECK(r.p == 4096);
  CHECK(r.q == 32768);
  REQUIRE(r.parts.size() == 1);
  CHECK(r.parts[0].e() == g.e());
  CHECK(r.audits[0].branch == DecomposeBranch::Base);
  CHECK(r.edge_disjoint);
  CHECK(r.f_sum_bound);
}

TEST_CASE("decomposition of a regular graph takes case 1") {
  std::vector<std::size_t> offsets{1, 2, 3, 4, 5, 6};
  const auto g = hc::circulant(40, offsets);
  DecomposeOptions opt;
  opt.C = 0.5;
  opt.p_override = 4;
  const auto r = decompose_almost_regular(g, opt);
  REQUIRE(r.parts.size() == 1);
  const auto& a = r.audits[0];
  CHECK(a.branch == DecomposeBranch::Case1);
  CHECK(a.max_degree <= 8 * r.p * a.min_degree);
  CHECK(a.max_degree_bound);
  CHECK(a.min_degree_bound);
  CHECK(all_passed(audit_decomposition(g, r)));
}

TEST_CASE("decomposition of a lopsided graph recurses and stays edge-disjoint") {
  const auto g = hc::complete_bipartite(5, 60);
  DecomposeOptions opt;
  opt.C = 0.5;
  opt.p_override = 3;
  const auto r = decompose_almost_regular(g, opt);
  CHECK(r.parts.size() >= 2);
  CHECK(r.edge_disjoint);
  const auto checks = audit_decomposition(g, r);
  INFO(failed(checks));
  CHECK(all_passed(checks));
  bool deeper = false;
  for (const auto& a : r.audits) deeper = deeper || a.depth > 0;
  CHECK(deeper);
}

TEST_CASE("decomposition on random dense graphs is edge-disjoint") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto g = gnp(60, 0.3 + 0.05 * static_cast<double>(seed % 5), Seed(seed));
    DecomposeOptions opt;
    opt.C = 0.3;
    opt.p_override = 3 + seed % 3;
    const auto r = decompose_almost_regular(g, opt);
    const auto checks = audit_decomposition(g, r);
    INFO(failed(checks));
    CHECK(all_passed(checks));
  }
}

TEST_CASE("decomposition preconditions") {
  DecomposeOptions opt;
  CHECK(code_of([&] { decompose_almost_regular(hc::path_graph(30), opt); }) ==
        ErrorCode::DensityPrecondition);
  CHECK(code_of([&] { decompose_almost_regular(hc::fano_plane(), opt); }) == ErrorCode::BadArity);
  opt.alpha = 1.5;
  CHECK(code_of([&] { decompose_almost_regular(hc::complete_graph(5), opt); }) ==
        ErrorCode::PreconditionViolated);
}

TEST_CASE("split with k = 1 keeps every vertex together") {
  const auto g = hc::fano_plane();
  std::vector<Vertex> audited{0, 1, 2};
  const auto s = split_vertices(g, audited, 1, 3.0, Seed(1), 5);
  CHECK(s.parts.size() == 1);
  CHECK(s.parts[0].size() == 7);
  CHECK(s.min_restricted() == 3);
  CHECK(all_passed(audit_split(g, s)));
  CHECK_THROWS_AS(split_vertices(g, audited, 1, 4.0, Seed(1), 5), RetriesExhausted);
}

TEST_CASE("split with floor 0 passes at once") {
  const auto g = hc::transversal_design(3, 5);
  std::vector<Vertex> audited{0, 1, 2, 5, 6};
  const auto s = split_vertices(g, audited, 4, 0.0, Seed(3), 1);
  CHECK(s.attempts == 1);
  CHECK(all_passed(audit_split(g, s)));
}

TEST_CASE("no two-part split of the Fano plane reaches floor 1") {
  // Exhaustive over all 128 colourings.
  const auto g = hc::fano_plane();
  std::vector<Vertex> audited{0, 1, 2, 3, 4, 5, 6};
  for (int mask = 0; mask < 128; ++mask) {
    std::vector<int> part_of(7);
    for (int v = 0; v < 7; ++v) part_of[v] = (mask >> v) & 1;
    CHECK(make_split(g, audited, 2, part_of).min_restricted() == 0);
  }
  CHECK_THROWS_AS(split_vertices(g, audited, 2, 1.0, Seed(0), 50), RetriesExhausted);
}

TEST_CASE("two-part split of a dense transversal design with floor 1") {
  const auto g = hc::transversal_design(3, 7);
  std::vector<Vertex> audited(g.partition()[0]);
  audited.insert(audited.end(), g.partition()[1].begin(), g.partition()[1].end());
  std::vector<std::size_t> histogram(6, 0);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto s = split_vertices(g, audited, 2, 1.0, Seed(seed), 500);
    CHECK(all_passed(audit_split(g, s)));
    ++histogram[std::min<std::size_t>(s.attempts, 5)];
  }
  MESSAGE("attempt histogram 1..4, 5+: " << histogram[1] << " " << histogram[2] << " "
                                          << histogram[3] << " " << histogram[4] << " "
                                          << histogram[5]);
}

TEST_CASE("split refuses more than two audited classes") {
  const auto g = hc::transversal_design(3, 5);
  std::vector<Vertex> audited{0, 5, 10};
  CHECK(code_of([&] { split_vertices(g, audited, 2, 0.0, Seed(0), 5); }) ==
        ErrorCode::PreconditionViolated);
}

TEST_CASE("cross cut of a single pair") {
  const std::vector<Edge> f{{0, 1}};
  const std::vector<Vertex> s{0, 1};
  const auto r = cross_cut(f, s, Seed(0));
  CHECK(r.kept.size() == 1);
  CHECK(r.edges.size() == 1);
  CHECK(r.threshold == doctest::Approx(0.5));
  CHECK(all_passed(audit_cross_cut(f, s, r)));
}

TEST_CASE("cross cut of a triangle") {
  const std::vector<Edge> f{{0, 1}, {0, 2}, {1, 2}};
  const std::vector<Vertex> s{0, 1, 2};
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto r = cross_cut(f, s, Seed(seed));
    CHECK(r.edges.size() == 2);
    CHECK(r.threshold == doctest::Approx(1.5));
    CHECK(all_passed(audit_cross_cut(f, s, r)));
  }
}

TEST_CASE("cross cut of a single triple") {
  const std::vector<Edge> f{{3, 4, 5}};
  const std::vector<Vertex> s{3, 4, 5};
  const auto r = cross_cut(f, s, Seed(5));
  CHECK(r.threshold == doctest::Approx(0.375));
  CHECK(r.kept.size() == 1);
  CHECK(all_passed(audit_cross_cut(f, s, r)));
}

TEST_CASE("cross cut edge cases") {
  const std::vector<Vertex> s{0, 1};
  const auto empty = cross_cut({}, s, Seed(0));
  CHECK(empty.edges.empty());
  CHECK(empty.threshold == 0.0);
  const std::vector<Edge> f{{2, 3}};
  CHECK(code_of([&] { cross_cut(f, s, Seed(0)); }) == ErrorCode::PreconditionViolated);
}

TEST_CASE("cross cut falls back to conditional expectations") {
  std::vector<Edge> f;
  std::vector<Vertex> s;
  for (Vertex v = 0; v < 12; ++v) s.push_back(v);
  for (Vertex a = 0; a < 12; ++a) {
    for (Vertex b = a + 1; b < 12; ++b) f.push_back({a, b});
  }
  const auto r = cross_cut(f, s, Seed(2), 0);
  CHECK(r.derandomized);
  CHECK(static_cast<double>(r.edges.size()) >= r.threshold);
  CHECK(all_passed(audit_cross_cut(f, s, r)));
}

TEST_CASE("cross cut on random 3-uniform families") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto g = partial_steiner(15, 3, Seed(seed));
    std::vector<Edge> f(g.edges().begin(), g.edges().end());
    std::vector<Vertex> s(g.vertices().begin(), g.vertices().end());
    const auto r = cross_cut(f, s, Seed(seed));
    const auto checks = audit_cross_cut(f, s, r);
    INFO(failed(checks));
    CHECK(all_passed(checks));
  }
}

TEST_CASE("rainbow tree on a single triple") {
  const auto g = LinearHypergraph::build(3, 3, {{0, 1, 2}}).with_partition({{0}, {1}, {2}});
  const std::vector<int> part_of{0, 0, 0};
  const std::vector<Vertex> audited{0};
  const auto split = make_split(g, audited, 1, part_of);
  const auto t = build_rainbow_tree(g, 0, 1, split, 1);
  REQUIRE(t.height() == 1);
  CHECK(t.levels[1] == std::vector<Vertex>{1});
  REQUIRE(t.edges.size() == 1);
  CHECK(t.edges[0].colour == Edge{2});
  CHECK(all_passed(audit_rainbow_tree(g, t, 1, &split)));
}

TEST_CASE("rainbow tree of a 2-graph is a levelled BFS tree") {
  const auto g = hc::complete_bipartite(3, 3);
  const auto t = bfs_rainbow_tree(g, 0, 2);
  CHECK(t.height() == 2);
  CHECK(t.levels[1] == std::vector<Vertex>{3, 4, 5});
  CHECK(t.levels[2] == std::vector<Vertex>{1, 2});
  for (const auto& e : t.edges) CHECK(e.colour.empty());
  CHECK(lifted_path(t, 2).size() == 2);
}

TEST_CASE("rainbow trees on random 3-partite graphs pass the audit") {
  const std::vector<std::size_t> sizes{25, 25, 25};
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto g = random_r_partite(sizes, 350, Seed(seed));
    std::vector<Vertex> audited(g.partition()[0]);
    audited.insert(audited.end(), g.partition()[1].begin(), g.partition()[1].end());
    const auto split = split_vertices(g, audited, 3, 0.0, Seed(seed), 1);
    RainbowTreeOptions opt;
    opt.strict = false;
    const auto t = build_rainbow_tree(g, 0, 1, split, 3, opt);
    CHECK(t.height() >= 1);
    const auto checks = audit_rainbow_tree(g, t, 1, &split);
    INFO(failed(checks));
    CHECK(all_passed(checks));
    for (const Vertex v : t.levels.back()) {
      const auto path = lifted_path(t, v);
      CHECK(path.size() == static_cast<std::size_t>(t.height()));
    }
  }
}

TEST_CASE("strict rainbow tree reports the empty level") {
  const auto g = LinearHypergraph::build(3, 3, {{0, 1, 2}}).with_partition({{0}, {1}, {2}});
  const std::vector<int> part_of{0, 1, 1};
  const std::vector<Vertex> audited{0};
  const auto split = make_split(g, audited, 2, part_of);
  CHECK(code_of([&] { build_rainbow_tree(g, 0, 1, split, 2); }) == ErrorCode::EmptyLevel);
}

namespace {

// x=0 with leaves 1, 2, 3; w=4 adjacent to 1 and 2; 5 hangs off 3.
struct StarInstance {
  LinearHypergraph g = LinearHypergraph::build(
      2, 6, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 5}});
  RainbowRootedTree tree = bfs_rainbow_tree(g, 0, 1);
  ColouredBipartiteGraph h{6, {1, 2, 3}, {4, 5}, {{1, 4, {}}, {2, 4, {}}, {3, 5, {}}}};
};

}  // namespace

TEST_CASE("extension closes a star path into a 4-cycle") {
  const StarInstance s;
  const ExtensionContext ctx{&s.g, &s.tree, &s.h, 0};
  const RainbowPath p{{1, 4}, {Edge{}}};
  const auto ext = extend_path_to_cycle(p, ctx);
  CHECK(ext.closing_vertex == 2);
  CHECK(ext.copy.skeleton == std::vector<Vertex>{0, 1, 4, 2});
  CHECK(is_linear_cycle(s.g, ext.copy.edge_ids));
  CHECK(oracle::count_cycles_oracle(s.g, 2).contains(ext.copy.edge_ids));
}

TEST_CASE("extension refuses paths through tree vertices") {
  const StarInstance s;
  const ExtensionContext ctx{&s.g, &s.tree, &s.h, 0};
  const RainbowPath through{{1, 2}, {Edge{}}};
  CHECK(code_of([&] { extend_path_to_cycle(through, ctx); }) == ErrorCode::NoExtension);
  const RainbowPath stuck{{3, 5}, {Edge{}}};
  CHECK(code_of([&] { extend_path_to_cycle(stuck, ctx); }) == ErrorCode::NoExtension);
}

TEST_CASE("bfs levels") {
  const auto l = bfs_levels(hc::complete_bipartite(3, 3), 0, 2);
  REQUIRE(l.levels.size() >= 3);
  CHECK(l.levels[1].size() == 3);
  CHECK(l.levels[2].size() == 2);
  CHECK(l.stopping_level == 1);
}

TEST_CASE("bfs search on a forest finds nothing") {
  const auto r = bfs_find_cycles(hc::path_graph(10), 0, 2);
  CHECK(r.cycles.count() == 0);
  const bool has = std::any_of(r.diagnostics.begin(), r.diagnostics.end(), [](const auto& d) {
    return d.find("no stopping level produced dense F") != std::string::npos;
  });
  CHECK(has);
}

TEST_CASE("bfs search on K33 returns oracle 4-cycles") {
  const auto g = hc::complete_bipartite(3, 3);
  const auto oracle_set = oracle::count_cycles_oracle(g, 2);
  for (Vertex x = 0; x < 6; ++x) {
    const auto r = bfs_find_cycles(g, x, 2);
    CHECK(r.stopping_level == 1);
    CHECK(r.cycles.count() > 0);
    for (const auto& c : r.cycles) CHECK(oracle_set.contains(c.edge_ids));
    CHECK(verify_bfs_result(g, r));
  }
}

TEST_CASE("bfs search on random 2-graphs only returns real cycles") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto g = gnp(11, 0.45, Seed(seed));
    for (int k : {2, 3}) {
      const auto r = bfs_find_cycles(g, 0, k);
      const auto all = oracle::count_cycles_oracle(g, k);
      for (const auto& c : r.cycles) CHECK(all.contains(c.edge_ids));
      CHECK(verify_bfs_result(g, r));
    }
  }
}

TEST_CASE("bfs search on a linear 3-partite graph") {
  const std::vector<std::size_t> sizes{30, 30, 30};
  std::size_t found = 0;
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    const auto g = random_r_partite(sizes, 800, Seed(seed));
    BfsCycleOptions opt;
    opt.seed = Seed(seed);
    const auto r = bfs_find_cycles(g, 0, 2, opt);
    CHECK(verify_bfs_result(g, r));
    for (const auto& c : r.cycles) CHECK(is_linear_cycle(g, c.edge_ids));
    found += r.cycles.count();
    for (const auto& d : r.diagnostics) MESSAGE(d);
  }
  MESSAGE("cycles found: " << found);
}
