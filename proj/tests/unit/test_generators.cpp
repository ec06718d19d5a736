#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "hypersat/constructions.hpp"
#include "hypersat/error.hpp"
#include "hypersat/generators.hpp"
#include "hypersat/lhg_io.hpp"
#include "hypersat/seed.hpp"

using namespace hypersat;
namespace hc = hypersat::constructions;

namespace {

// Independent linearity audit: every vertex pair at most once.
bool pairs_unique(const LinearHypergraph& g) {
  std::set<std::pair<Vertex, Vertex>> seen;
  for (const Edge& e : g.edges()) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (std::size_t j = i + 1; j < e.size(); ++j) {
        if (!seen.insert({e[i], e[j]}).second) return false;
      }
    }
  }
  return true;
}

// No r-subset of the vertex set can be added without sharing a pair.
bool is_maximal(const LinearHypergraph& g) {
  const auto n = static_cast<Vertex>(g.id_bound());
  std::vector<std::vector<std::uint8_t>> covered(n, std::vector<std::uint8_t>(n, 0));
  for (const Edge& e : g.edges()) {
    for (Vertex a : e) {
      for (Vertex b : e) covered[a][b] = 1;
    }
  }
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      for (Vertex c = b + 1; c < n; ++c) {
        if (!covered[a][b] && !covered[a][c] && !covered[b][c]) return false;
      }
    }
  }
  return true;
}

}  // namespace

TEST_CASE("seed streams are stable and distinct") {
  const Seed s(42);
  CHECK(s.child(3) == Seed(42).child(3));
  CHECK(!(s.child(3) == s.child(4)));
  CHECK(mix_seed(42, 0) == s.child(0).master());
  std::set<std::uint64_t> seen;
  for (std::uint64_t i = 0; i < 1000; ++i) seen.insert(s.child(i).master());
  CHECK(seen.size() == 1000);
}

TEST_CASE("rng draws are reproducible and in range") {
  Rng a{Seed(7)};
  Rng b{Seed(7)};
  for (int i = 0; i < 100; ++i) {
    const auto x = a.below(13);
    CHECK(x == b.below(13));
    CHECK(x < 13);
    const double u = a.uniform01();
    CHECK(u == b.uniform01());
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
}

TEST_CASE("gnp extremes") {
  CHECK(gnp(10, 0.0, Seed(7)).e() == 0);
  CHECK(gnp(10, 1.0, Seed(7)).e() == 45);
  CHECK(gnp(10, 0.0, Seed(7)).v() == 10);
}

TEST_CASE("gnp mean edge count at n=60, p=0.15") {
  double total = 0;
  for (std::uint64_t s = 0; s < 100; ++s) total += static_cast<double>(gnp(60, 0.15, Seed(s)).e());
  const double mean = total / 100.0;
  CHECK(std::abs(mean - 265.5) / 265.5 < 0.05);
}

TEST_CASE("generators are deterministic in the seed") {
  CHECK(to_lhg_string(gnp(20, 0.3, Seed(9))) == to_lhg_string(gnp(20, 0.3, Seed(9))));
  CHECK(to_lhg_string(partial_steiner(15, 3, Seed(9))) ==
        to_lhg_string(partial_steiner(15, 3, Seed(9))));
  CHECK(to_lhg_string(partial_steiner(15, 3, Seed(9))) !=
        to_lhg_string(partial_steiner(15, 3, Seed(10))));
}

TEST_CASE("partial steiner on 7 points has 5 to 7 triples") {
  // 5 is the smallest maximal partial triple system on 7 points (exhaustive
  // search); 7 is the Fano plane.
  std::set<std::size_t> sizes;
  for (std::uint64_t s = 0; s < 200; ++s) {
    const auto g = partial_steiner(7, 3, Seed(s));
    CHECK(g.e() >= 5);
    CHECK(g.e() <= 7);
    sizes.insert(g.e());
  }
  CHECK(sizes.count(7) == 1);
}

TEST_CASE("partial steiner with n = r is one edge") {
  CHECK(partial_steiner(4, 4, Seed(1)).e() == 1);
  CHECK(partial_steiner(3, 3, Seed(1)).e() == 1);
}

TEST_CASE("partial steiner is linear and maximal for n <= 20") {
  for (std::uint64_t s = 0; s < 20; ++s) {
    const auto g = partial_steiner(8 + s % 13, 3, Seed(s));
    CHECK(pairs_unique(g));
    CHECK(is_maximal(g));
  }
}

TEST_CASE("partial steiner at n=100 meets the greedy lower bound") {
  const auto g = partial_steiner(100, 3, Seed(1));
  CHECK(g.e() >= 825);
  CHECK(pairs_unique(g));
}

TEST_CASE("densify never loses edges and stays linear") {
  for (std::uint64_t s = 0; s < 10; ++s) {
    const auto g = partial_steiner(40, 3, Seed(s));
    const auto d = densify_packing(g, Seed(s + 100), 20000);
    CHECK(d.e() >= g.e());
    CHECK(d.e() <= 253);
    CHECK(pairs_unique(d));
  }
}

TEST_CASE("densify reaches budget 240 at n=40") {
  for (std::uint64_t s = 0; s < 20; ++s) {
    const auto d = densify_packing(partial_steiner(40, 3, Seed(s)), Seed(s), 200000);
    CHECK(d.e() >= 240);
  }
}

TEST_CASE("subsample extremes and fano mean") {
  const auto fano = hc::fano_plane();
  CHECK(subsample_edges(fano, 1.0, Seed(1)).e() == 7);
  CHECK(subsample_edges(fano, 0.0, Seed(1)).e() == 0);
  double total = 0;
  for (std::uint64_t s = 0; s < 2000; ++s) total += static_cast<double>(subsample_edges(fano, 0.5, Seed(s)).e());
  CHECK(total / 2000.0 == doctest::Approx(3.5).epsilon(0.03));
}

TEST_CASE("exact edge sample") {
  const auto fano = hc::fano_plane();
  const auto g = sample_edges_exact(fano, 4, Seed(2));
  CHECK(g.e() == 4);
  for (const Edge& e : g.edges()) CHECK(fano.find_edge(e).has_value());
  CHECK_THROWS_AS(sample_edges_exact(fano, 8, Seed(2)), Error);
}

TEST_CASE("random r-partite examples") {
  const std::vector<std::size_t> ones{1, 1, 1};
  const auto single = random_r_partite(ones, 1, Seed(0));
  CHECK(single.e() == 1);
  CHECK(single.edge(0) == Edge{0, 1, 2});

  const std::vector<std::size_t> two{2, 2};
  CHECK(random_r_partite(two, 4, Seed(0)).e() == 4);
  CHECK_THROWS_AS(random_r_partite(two, 5, Seed(0)), Error);

  const std::vector<std::size_t> tens{10, 10, 10};
  for (std::uint64_t s = 0; s < 5; ++s) {
    const auto g = random_r_partite(tens, 90, Seed(s));
    CHECK(g.e() == 90);
    CHECK(pairs_unique(g));
    CHECK(g.has_partition());
  }
}

TEST_CASE("infeasible budget reports BudgetInfeasible") {
  const std::vector<std::size_t> tiny{2, 2, 2};
  try {
    random_r_partite(tiny, 5, Seed(0));
    FAIL("expected BudgetInfeasible");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BudgetInfeasible);
  }
}

TEST_CASE("constructions") {
  CHECK(hc::linear_cycle(3, 4).v() == 8);
  CHECK(hc::linear_cycle(3, 4).e() == 4);
  CHECK(hc::linear_path(3, 4).e() == 4);
  CHECK(hc::complete_bipartite(3, 3).e() == 9);
  const auto td = hc::transversal_design(3, 5);
  CHECK(td.e() == 25);
  CHECK(pairs_unique(td));
  CHECK_THROWS_AS(hc::transversal_design(3, 6), Error);
}
