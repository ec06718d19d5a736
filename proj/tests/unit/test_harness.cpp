#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "hypersat/constructions.hpp"
#include "hypersat/error.hpp"
#include "hypersat/harness.hpp"
#include "hypersat/oracle.hpp"

using namespace hypersat;

TEST_CASE("closed-form reference agrees with the oracle on complete graphs") {
  for (std::size_t n = 1; n <= 8; ++n) {
    for (int k : {2, 3}) {
      const auto exact = oracle::count_cycles_oracle(constructions::complete_graph(n), k).count();
      CHECK(expected_cycle_count(n, 1.0, k) == doctest::Approx(static_cast<double>(exact)));
    }
  }
  CHECK(expected_cycle_count(3, 0.5, 2) == 0.0);
  CHECK(expected_cycle_count(60, 0.15, 2) == doctest::Approx(740.6).epsilon(1e-4));
}

TEST_CASE("expectation check at p = 1 is exact") {
  const auto r = expectation_check(7, 1.0, 2, 3, Seed(1));
  REQUIRE(r.reference);
  CHECK(r.points[0].mean == *r.reference);
  REQUIRE(r.z_score);
  CHECK(*r.z_score == 0.0);
}

TEST_CASE("expectation check below 2k vertices") {
  const auto r = expectation_check(3, 0.5, 2, 5, Seed(1));
  CHECK(r.points[0].mean == 0.0);
  CHECK(*r.reference == 0.0);
}

TEST_CASE("expectation check on G(30, 0.2)") {
  const auto r = expectation_check(30, 0.2, 2, 200, Seed(2024));
  const double ref = *r.reference;
  CHECK(ref == doctest::Approx(131.544).epsilon(1e-6));
  CHECK(std::abs(r.points[0].mean - ref) / ref <= 0.1);
}

TEST_CASE("gnp sweep tracks the closed form") {
  SweepSpec spec;
  spec.family = "gnp";
  spec.n = 60;
  spec.grid = {0.10, 0.15, 0.20};
  spec.trials = 30;
  spec.seed = Seed(5);
  const auto r = supersat_sweep(spec);
  REQUIRE(r.points.size() == 3);
  for (const auto& p : r.points) {
    REQUIRE(p.reference);
    CHECK(std::abs(p.mean - *p.reference) / *p.reference <= 0.15);
    CHECK(p.completed == 30);
  }
  CHECK(r.monotone);
  CHECK(r.c_hat_positive);
  CHECK(r.spot_checked > 0);
  CHECK(r.spot_failed == 0);
}

TEST_CASE("empty family is flagged below threshold") {
  SweepSpec spec;
  spec.family = "empty";
  spec.n = 20;
  spec.grid = {0, 1};
  spec.trials = 3;
  const auto r = supersat_sweep(spec);
  for (const auto& t : r.trials) {
    CHECK(t.copies == 0);
    CHECK(t.ratio == 0.0);
  }
  for (const auto& p : r.points) {
    CHECK(p.below_threshold);
    CHECK(p.ratio == 0.0);
  }
  CHECK_FALSE(r.c_hat.has_value());
  CHECK_FALSE(r.c_hat_positive);
}

TEST_CASE("steiner sweep: positive constant and monotone counts") {
  SweepSpec spec;
  spec.family = "steiner";
  spec.n = 40;
  spec.r = 3;
  spec.grid = {120, 180, 240};
  spec.trials = 8;
  spec.seed = Seed(11);
  const auto r = supersat_sweep(spec);
  for (const auto& t : r.trials) CHECK(t.status == "ok");
  CHECK(r.c_hat_positive);
  CHECK(r.monotone);
  CHECK(r.spot_failed == 0);
}

TEST_CASE("infeasible budgets and work caps are recorded per trial") {
  SweepSpec spec;
  spec.family = "steiner";
  spec.n = 10;
  spec.r = 3;
  spec.grid = {5, 1000};
  spec.trials = 2;
  const auto r = supersat_sweep(spec);
  CHECK(r.trials[0].status == "ok");
  CHECK(r.trials[2].status == "infeasible");
  CHECK(r.points[1].completed == 0);

  SweepSpec capped;
  capped.n = 30;
  capped.grid = {0.5};
  capped.trials = 2;
  capped.work_cap = 100;
  const auto c = supersat_sweep(capped);
  CHECK(c.points[0].capped == 2);
  CHECK(c.trials[0].status == "work_cap");
}

TEST_CASE("reports are deterministic and round-trip") {
  SweepSpec spec;
  spec.family = "gnp";
  spec.n = 25;
  spec.grid = {0.2, 0.3};
  spec.trials = 4;
  spec.seed = Seed(3);
  const auto a = supersat_sweep(spec);
  const auto b = supersat_sweep(spec);
  CHECK(a == b);
  CHECK(to_json(a).dump() == to_json(b).dump());

  const auto back = report_from_json(nlohmann::json::parse(to_json(a).dump()));
  CHECK(back == a);
  CHECK(trials_from_csv(trials_to_csv(a)) == a.trials);

  const auto audit = lemma_audit("peel", 5, Seed(1));
  CHECK(report_from_json(to_json(audit)) == audit);
}

TEST_CASE("report parsing rejects bad input") {
  auto j = to_json(expectation_check(6, 0.5, 2, 2, Seed(0)));
  j["schema"] = 2;
  CHECK_THROWS_AS(report_from_json(j), Error);
  CHECK_THROWS_AS(trials_from_csv("nope\n"), Error);
  CHECK_THROWS_AS(trials_from_csv("point,trial,seed,edges,copies,ratio,status\n1,2,x,4,5,6,ok\n"),
                  Error);
}

TEST_CASE("every audit suite passes on a small batch") {
  for (auto suite : audit_suites()) {
    const auto r = lemma_audit(suite, 20, Seed(77));
    REQUIRE(r.audit);
    INFO(suite << ": " << (r.audit->witness ? r.audit->witness->dump() : ""));
    CHECK(r.audit->passed == 20);
  }
  CHECK_THROWS_AS(lemma_audit("nonsense", 1, Seed(0)), Error);
}

TEST_CASE("audit witness is recorded for replay") {
  const auto r = lemma_audit("balanced_root", 3, Seed(9));
  CHECK(r.trials.size() == 3);
  CHECK(r.trials[1].seed == Seed(9).child(1).master());
  CHECK_FALSE(r.audit->witness.has_value());
}
