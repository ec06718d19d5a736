#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <sstream>

#include "hypersat/constructions.hpp"
#include "hypersat/error.hpp"
#include "hypersat/generators.hpp"
#include "hypersat/hypergraph.hpp"
#include "hypersat/lhg_io.hpp"

using namespace hypersat;
namespace hc = hypersat::constructions;

TEST_CASE("fano plane builds as a linear 3-graph") {
  const auto g = hc::fano_plane();
  CHECK(g.r() == 3);
  CHECK(g.v() == 7);
  CHECK(g.e() == 7);
  for (Vertex u = 0; u < 7; ++u) {
    for (Vertex v = u + 1; v < 7; ++v) CHECK(g.edge_of_pair(u, v).has_value());
  }
}

TEST_CASE("shared pair raises LinearityViolation naming the pair") {
  try {
    LinearHypergraph::build(3, 5, {{0, 1, 2}, {0, 1, 3}});
    FAIL("expected LinearityViolation");
  } catch (const LinearityViolation& e) {
    CHECK(e.code() == ErrorCode::LinearityViolation);
    CHECK(e.first() == 0);
    CHECK(e.second() == 1);
    CHECK(e.existing_edge() == 0);
    CHECK(e.item() == std::optional<std::size_t>(1));
  }
}

TEST_CASE("build rejects duplicates, bad arity and unknown vertices") {
  auto code_of = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::PreconditionViolated;
  };
  CHECK(code_of([] { LinearHypergraph::build(2, 3, {{0, 1}, {1, 0}}); }) == ErrorCode::DuplicateEdge);
  CHECK(code_of([] { LinearHypergraph::build(3, 4, {{0, 1}}); }) == ErrorCode::BadArity);
  CHECK(code_of([] { LinearHypergraph::build(3, 4, {{0, 1, 1}}); }) == ErrorCode::BadArity);
  CHECK(code_of([] { LinearHypergraph::build(2, 3, {{0, 3}}); }) == ErrorCode::UnknownVertex);
  CHECK(code_of([] { LinearHypergraph::build(1, 3, {}); }) == ErrorCode::BadArity);
}

TEST_CASE("every 2-graph is linear: K4") {
  const auto g = hc::complete_graph(4);
  CHECK(g.e() == 6);
  CHECK(g.v() == 4);
}

TEST_CASE("link of a fano point is three disjoint pairs") {
  const auto g = hc::fano_plane();
  const Link l = link(g, 0);
  CHECK(l.center == 0);
  REQUIRE(l.sets.size() == 3);
  std::set<Vertex> seen;
  for (const auto& s : l.sets) {
    CHECK(s.size() == 2);
    for (Vertex v : s) CHECK(seen.insert(v).second);
  }
}

TEST_CASE("restricted links") {
  const auto k4 = hc::complete_graph(4);
  const std::vector<Vertex> s{1, 2};
  const Link l = link(k4, 0, s);
  CHECK(l.sets == std::vector<Edge>{{1}, {2}});
  CHECK(link(k4, 0, std::span<const Vertex>{}).sets.empty());
  CHECK_THROWS_AS(link(k4, 9), Error);
}

TEST_CASE("link size equals degree and sets are disjoint on random graphs") {
  for (std::uint64_t s = 0; s < 20; ++s) {
    const auto g = partial_steiner(12, 3, Seed(s));
    for (Vertex v : g.vertices()) {
      const Link l = link(g, v);
      CHECK(l.sets.size() == g.degree(v));
      std::vector<Vertex> all;
      for (const auto& set : l.sets) all.insert(all.end(), set.begin(), set.end());
      std::sort(all.begin(), all.end());
      CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
    }
  }
}

TEST_CASE("projection is an edge bijection") {
  const std::vector<std::size_t> sizes{4, 4, 4};
  const auto g = random_r_partite(sizes, 5, Seed(3));
  REQUIRE(g.e() == 5);
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      const Projection p = project(g, i, j);
      CHECK(p.graph.e() == g.e());
      std::vector<EdgeId> back = p.back_map;
      std::sort(back.begin(), back.end());
      CHECK(std::adjacent_find(back.begin(), back.end()) == back.end());
      for (EdgeId id = 0; id < p.graph.e(); ++id) {
        const Edge& src = g.edge(p.back_map[id]);
        for (Vertex v : p.graph.edge(id)) {
          CHECK(std::binary_search(src.begin(), src.end(), v));
        }
      }
      CHECK(p.graph.partition().size() == 2);
    }
  }
}

TEST_CASE("projection of a 2-graph is the graph itself; no partition raises") {
  const auto k = hc::complete_bipartite(2, 3);
  const Projection p = project(k, 0, 1);
  CHECK(p.graph.e() == k.e());
  for (EdgeId id = 0; id < k.e(); ++id) CHECK(p.graph.edge(id) == k.edge(p.back_map[id]));
  CHECK_THROWS_AS(project(hc::complete_graph(4), 0, 1), Error);
  const auto empty = LinearHypergraph::build(3, 3, {}).with_partition({{0}, {1}, {2}});
  CHECK(project(empty, 0, 2).graph.e() == 0);
}

TEST_CASE("projection recomposes the source") {
  const auto g = hc::transversal_design(4, 5);
  const Projection p01 = project(g, 0, 1);
  const Projection p23 = project(g, 2, 3);
  std::vector<Edge> rebuilt(g.e());
  for (EdgeId id = 0; id < p01.graph.e(); ++id) {
    for (Vertex v : p01.graph.edge(id)) rebuilt[p01.back_map[id]].push_back(v);
  }
  for (EdgeId id = 0; id < p23.graph.e(); ++id) {
    for (Vertex v : p23.graph.edge(id)) rebuilt[p23.back_map[id]].push_back(v);
  }
  for (EdgeId id = 0; id < g.e(); ++id) {
    std::sort(rebuilt[id].begin(), rebuilt[id].end());
    CHECK(rebuilt[id] == g.edge(id));
  }
}

TEST_CASE("induced and edge subgraphs") {
  const auto k4 = hc::complete_graph(4);
  const std::vector<Vertex> three{0, 1, 2};
  const auto tri = induced(k4, three);
  CHECK(tri.e() == 3);
  CHECK(tri.v() == 3);
  CHECK(induced(k4, std::span<const Vertex>{}).e() == 0);

  const auto fano = hc::fano_plane();
  const std::vector<Vertex> line{1, 3, 5};
  const auto one = induced(fano, line);
  CHECK(one.e() == 1);
  CHECK(one.edge(0) == Edge{1, 3, 5});

  const std::vector<EdgeId> ids{4, 0, 4};
  const auto sub = subgraph_by_edges(fano, ids);
  CHECK(sub.e() == 2);
  CHECK(sub.v() == 7);
  CHECK(sub.edge(0) == fano.edge(0));
}

TEST_CASE("induced keeps the partition and ids") {
  const auto g = hc::transversal_design(3, 5);
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < 15; v += 2) keep.push_back(v);
  const auto h = induced(g, keep);
  CHECK(h.has_partition());
  CHECK(h.id_bound() == g.id_bound());
  for (const Edge& e : h.edges()) CHECK(g.find_edge(e).has_value());
}

TEST_CASE("degree profile and f") {
  const auto k4 = hc::complete_graph(4);
  CHECK(f_value(k4, 2, 1) == doctest::Approx(9.0));
  CHECK(f_value(k4, 1, 1) == doctest::Approx(1.5));
  const auto c6 = hc::cycle_graph(6);
  const auto p = degree_profile(c6);
  CHECK(p.min_degree == 2);
  CHECK(p.max_degree == 2);
  CHECK(p.avg_degree == doctest::Approx(2.0));
  CHECK(p.is_q_almost_regular(1.0));
  const auto empty = LinearHypergraph::build(2, 0, {});
  CHECK_THROWS_AS(f_value(empty, 1, 1), Error);
}

TEST_CASE("f stays finite when e^s leaves 128 bits") {
  const auto k = hc::complete_graph(60);  // 1770 edges
  const double f = f_value(k, 12, 12);
  CHECK(f == doctest::Approx(std::pow(1770.0 / 60.0, 12)).epsilon(1e-9));
}

TEST_CASE("profile invariant min <= avg <= max on random graphs") {
  for (std::uint64_t s = 0; s < 20; ++s) {
    const auto g = gnp(15, 0.3, Seed(s));
    const auto p = degree_profile(g);
    CHECK(static_cast<double>(p.min_degree) <= p.avg_degree);
    CHECK(p.avg_degree <= static_cast<double>(p.max_degree));
  }
}

TEST_CASE("partition validation") {
  const auto k = hc::complete_graph(3);
  CHECK_THROWS_AS(k.with_partition({{0, 1}, {2}}), Error);
  CHECK_THROWS_AS(k.with_partition({{0}, {1}}), Error);
  const auto path = hc::path_graph(3);
  const auto bip = path.with_partition({{0, 2}, {1}});
  CHECK(bip.class_of(2) == 0);
  CHECK(bip.class_of(1) == 1);
}

TEST_CASE("lhg round trip is bit exact") {
  const auto g = partial_steiner(10, 3, Seed(5));
  const std::string text = to_lhg_string(g);
  std::istringstream in(text);
  const auto back = read_lhg(in);
  CHECK(to_lhg_string(back) == text);
  CHECK(back.e() == g.e());
}

TEST_CASE("lhg reader skips comments and reports line numbers") {
  std::istringstream ok("# header comment\nlhg 2 3\n\n0 1  # edge\n1 2\n");
  CHECK(read_lhg(ok).e() == 2);

  std::istringstream bad("lhg 3 5\n0 1 2\n# x\n0 1 3\n");
  try {
    read_lhg(bad);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::LinearityViolation);
    CHECK(std::string(e.what()).find("line 4") != std::string::npos);
  }
  std::istringstream junk("lhg 2 3\n0 x\n");
  CHECK_THROWS_AS(read_lhg(junk), Error);
  std::istringstream header("graph 2 3\n");
  CHECK_THROWS_AS(read_lhg(header), Error);
}
