#include "hypersat/cross_cut.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hypersat/error.hpp"

namespace hypersat {

namespace {

std::size_t hits(const Edge& e, std::span<const std::uint8_t> kept) {
  std::size_t c = 0;
  for (Vertex x : e) c += kept[x];
  return c;
}

// P(exactly one kept) given `decided` kept so far and `open` undecided
// vertices, each still kept with probability 1/2.
double exactly_one(std::size_t decided, std::size_t open) {
  if (decided >= 2) return 0.0;
  const double all_out = std::ldexp(1.0, -static_cast<int>(open));
  return decided == 1 ? all_out : static_cast<double>(open) * all_out;
}

}  // namespace

CrossCutResult cross_cut(std::span<const Edge> f, std::span<const Vertex> cover, Seed seed,
                         std::size_t max_attempts) {
  CrossCutResult out;
  if (f.empty()) return out;
  const std::size_t u = f.front().size();
  Vertex bound = 0;
  for (const Edge& e : f) {
    if (e.size() != u) throw Error(ErrorCode::PreconditionViolated, "F is not uniform");
    for (Vertex x : e) bound = std::max(bound, x + 1);
  }
  for (Vertex x : cover) bound = std::max(bound, x + 1);
  std::vector<Vertex> s(cover.begin(), cover.end());
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  const auto in_s = make_mask(bound, s);
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (hits(f[i], in_s) == 0) {
      throw Error(ErrorCode::PreconditionViolated, "S does not cover edge " + std::to_string(i), i);
    }
  }
  out.threshold = static_cast<double>(u) * std::ldexp(1.0, -static_cast<int>(u)) *
                  static_cast<double>(f.size());

  std::vector<std::uint8_t> kept(bound, 0);
  auto collect = [&]() {
    out.kept.clear();
    out.edges.clear();
    for (Vertex x : s) {
      if (kept[x]) out.kept.push_back(x);
    }
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (hits(f[i], kept) == 1) out.edges.push_back(i);
    }
  };
  for (std::size_t a = 0; a < max_attempts; ++a) {
    Rng rng(seed.child(a));
    for (Vertex x : s) kept[x] = rng.bernoulli(0.5) ? 1 : 0;
    collect();
    out.attempts = a + 1;
    if (static_cast<double>(out.edges.size()) >= out.threshold) return out;
  }

  // Conditional expectations: fix cover vertices in order, never letting the
  // expected number of exactly-once edges drop.
  std::vector<std::size_t> open(f.size(), 0);
  std::vector<std::size_t> decided(f.size(), 0);
  std::vector<std::vector<std::size_t>> touching(bound);
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (Vertex x : f[i]) {
      if (in_s[x]) {
        ++open[i];
        touching[x].push_back(i);
      }
    }
  }
  std::fill(kept.begin(), kept.end(), 0);
  for (Vertex x : s) {
    double gain_keep = 0.0;
    double gain_drop = 0.0;
    for (std::size_t i : touching[x]) {
      gain_keep += exactly_one(decided[i] + 1, open[i] - 1);
      gain_drop += exactly_one(decided[i], open[i] - 1);
    }
    const bool keep = gain_keep > gain_drop;
    kept[x] = keep ? 1 : 0;
    for (std::size_t i : touching[x]) {
      --open[i];
      if (keep) ++decided[i];
    }
  }
  collect();
  out.derandomized = true;
  return out;
}

std::vector<Check> audit_cross_cut(std::span<const Edge> f, std::span<const Vertex> cover,
                                   const CrossCutResult& result) {
  Vertex bound = 0;
  for (const Edge& e : f) {
    for (Vertex x : e) bound = std::max(bound, x + 1);
  }
  for (Vertex x : cover) bound = std::max(bound, x + 1);
  const auto in_s = make_mask(bound, cover);
  std::vector<std::uint8_t> kept(bound, 0);
  Check subset{"S' ⊆ S", true, {}};
  for (Vertex x : result.kept) {
    if (x >= bound || !in_s[x]) {
      subset.passed = false;
      subset.witness = "vertex " + std::to_string(x);
    } else {
      kept[x] = 1;
    }
  }
  Check exact{"every kept edge meets S' once", true, {}};
  for (std::size_t i : result.edges) {
    if (i >= f.size() || hits(f[i], kept) != 1) {
      exact.passed = false;
      exact.witness = "edge " + std::to_string(i);
      break;
    }
  }
  std::size_t maximal = 0;
  for (const Edge& e : f) maximal += hits(e, kept) == 1 ? 1 : 0;
  Check complete{"F' holds every exactly-once edge", maximal == result.edges.size(), {}};
  double threshold = 0.0;
  if (!f.empty()) {
    const auto u = static_cast<int>(f.front().size());
    threshold = u * std::ldexp(1.0, -u) * static_cast<double>(f.size());
  }
  Check bound_check{"e(F') >= (u/2^u) e(F)",
                    static_cast<double>(result.edges.size()) >= threshold, {}};
  if (!bound_check.passed) {
    bound_check.witness = std::to_string(result.edges.size()) + " < " + std::to_string(threshold);
  }
  return {subset, exact, complete, bound_check};
}

}  // namespace hypersat
