#include "hypersat/decompose.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "hypersat/error.hpp"
#include "hypersat/peel.hpp"

namespace hypersat {

std::size_t decomposition_p(double alpha, int s, int t) {
  const double expo = std::max(4.0 / alpha, static_cast<double>(2 * s + t) / (t - s + 1));
  if (expo >= 63.0) throw Error(ErrorCode::SizeGuard, "p does not fit in 64 bits");
  return static_cast<std::size_t>(std::ceil(std::exp2(expo)));
}

namespace {

double density_bound(double C, double alpha, std::size_t v) {
  return C * std::pow(static_cast<double>(v), 1.0 + alpha);
}

class Decomposer {
 public:
  Decomposer(const DecomposeOptions& opt, std::size_t p) : opt_(opt), p_(p), q_(8 * p) {}

  void run(const LinearHypergraph& g, int depth) {
    const std::size_t n = g.v();
    if (n < q_) {
      emit(g, DecomposeBranch::Base, depth, 0.0);
      return;
    }
    std::vector<Vertex> order(g.vertices().begin(), g.vertices().end());
    std::stable_sort(order.begin(), order.end(),
                     [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    std::vector<std::vector<Vertex>> part(p_);
    const std::size_t base = n / p_;
    const std::size_t extra = n % p_;
    std::size_t at = 0;
    for (std::size_t i = 0; i < p_; ++i) {
      const std::size_t len = base + (i < extra ? 1 : 0);
      part[i].assign(order.begin() + at, order.begin() + at + len);
      std::sort(part[i].begin(), part[i].end());
      at += len;
    }
    const auto in_a1 = make_mask(g.id_bound(), part[0]);
    std::size_t touching = 0;
    for (const Edge& e : g.edges()) {
      if (in_a1[e[0]] || in_a1[e[1]]) ++touching;
    }

    if (2 * touching <= g.e()) {
      const double d = 2.0 * static_cast<double>(g.e()) / static_cast<double>(n);
      std::vector<Vertex> rest;
      for (std::size_t i = 1; i < p_; ++i) rest.insert(rest.end(), part[i].begin(), part[i].end());
      std::sort(rest.begin(), rest.end());
      const auto peeled = peel_to_min_degree(induced(g, rest), d / 8.0);
      if (peeled.e() > 0) emit(peeled, DecomposeBranch::Case1, depth, d);
      return;
    }

    bool a1_edges_assigned = false;
    for (std::size_t i = 1; i < p_; ++i) {
      std::vector<Vertex> keep = part[0];
      keep.insert(keep.end(), part[i].begin(), part[i].end());
      std::sort(keep.begin(), keep.end());
      auto gi = induced(g, keep);
      if (static_cast<double>(gi.e()) < density_bound(opt_.C, opt_.alpha, gi.v())) continue;
      if (a1_edges_assigned) {
        std::vector<Edge> edges;
        for (const Edge& e : gi.edges()) {
          if (!(in_a1[e[0]] && in_a1[e[1]])) edges.push_back(e);
        }
        gi = LinearHypergraph::build(2, g.id_bound(), std::move(edges), keep);
      }
      a1_edges_assigned = true;
      run(gi, depth + 1);
    }
  }

  std::vector<LinearHypergraph> parts;
  std::vector<PartAudit> audits;

 private:
  void emit(const LinearHypergraph& g, DecomposeBranch branch, int depth, double parent_d) {
    PartAudit a;
    a.branch = branch;
    a.depth = depth;
    a.v = g.v();
    a.e = g.e();
    if (a.v > 0) {
      const auto prof = degree_profile(g);
      a.min_degree = prof.min_degree;
      a.max_degree = prof.max_degree;
      a.f = f_value(g, opt_.s, opt_.t);
      a.almost_regular = prof.is_q_almost_regular(static_cast<double>(q_));
    }
    a.dense = static_cast<double>(a.e) >= density_bound(opt_.C / 4.0, opt_.alpha, a.v);
    if (branch == DecomposeBranch::Case1) {
      a.parent_avg_degree = parent_d;
      a.max_degree_bound = static_cast<double>(a.max_degree) <= static_cast<double>(p_) * parent_d;
      a.min_degree_bound = static_cast<double>(a.min_degree) >= parent_d / 8.0;
    }
    parts.push_back(g);
    audits.push_back(a);
  }

  const DecomposeOptions& opt_;
  std::size_t p_;
  std::size_t q_;
};

}  // namespace

DecompositionResult decompose_almost_regular(const LinearHypergraph& g,
                                             const DecomposeOptions& options) {
  if (g.r() != 2) throw Error(ErrorCode::BadArity, "decomposition works on 2-graphs");
  if (!(options.alpha > 0.0 && options.alpha < 1.0)) {
    throw Error(ErrorCode::PreconditionViolated, "alpha must lie in (0, 1)");
  }
  if (options.s < 1 || options.t < options.s) {
    throw Error(ErrorCode::PreconditionViolated, "need t >= s >= 1");
  }
  if (options.p_override && *options.p_override < 3) {
    throw Error(ErrorCode::PreconditionViolated, "p override must be at least 3");
  }
  const double need = density_bound(options.C, options.alpha, g.v());
  if (static_cast<double>(g.e()) < need) {
    throw Error(ErrorCode::DensityPrecondition,
                "e(G) = " + std::to_string(g.e()) + " is below C*v^(1+alpha) = " +
                    std::to_string(need));
  }
  DecompositionResult out;
  out.p = options.p_override ? *options.p_override
                             : decomposition_p(options.alpha, options.s, options.t);
  out.q = 8 * out.p;
  Decomposer d(options, out.p);
  d.run(g, 0);
  out.parts = std::move(d.parts);
  out.audits = std::move(d.audits);

  std::vector<std::uint8_t> used(g.e(), 0);
  out.edge_disjoint = true;
  for (const auto& part : out.parts) {
    std::vector<EdgeId> ids;
    for (const Edge& e : part.edges()) {
      const auto id = g.find_edge(e);
      if (!id) throw Error(ErrorCode::PreconditionViolated, "part edge missing from input");
      if (used[*id]) out.edge_disjoint = false;
      used[*id] = 1;
      ids.push_back(*id);
    }
    out.source_edges.push_back(std::move(ids));
  }
  if (g.v() > 0) out.f_input = f_value(g, options.s, options.t);
  for (const auto& a : out.audits) out.f_sum += a.f;
  out.f_sum_bound = out.f_sum >= out.f_input / std::pow(4.0, options.s);
  return out;
}

std::vector<Check> audit_decomposition(const LinearHypergraph& g,
                                       const DecompositionResult& result) {
  Check disjoint{"parts edge-disjoint", true, {}};
  Check subset{"parts are subgraphs of G", true, {}};
  std::vector<std::uint8_t> used(g.e(), 0);
  for (std::size_t i = 0; i < result.parts.size(); ++i) {
    for (const Edge& e : result.parts[i].edges()) {
      const auto id = g.find_edge(e);
      if (!id) {
        if (subset.passed) subset.witness = "part " + std::to_string(i);
        subset.passed = false;
        continue;
      }
      if (used[*id] && disjoint.passed) {
        disjoint.passed = false;
        disjoint.witness = "edge " + std::to_string(*id) + " repeated in part " + std::to_string(i);
      }
      used[*id] = 1;
    }
  }
  Check upper{"case 1: max degree <= p*d", true, {}};
  Check lower{"case 1: min degree >= d/8", true, {}};
  for (std::size_t i = 0; i < result.audits.size(); ++i) {
    const auto& a = result.audits[i];
    if (a.branch != DecomposeBranch::Case1) continue;
    if (!a.max_degree_bound && upper.passed) {
      upper.passed = false;
      upper.witness = "part " + std::to_string(i);
    }
    if (!a.min_degree_bound && lower.passed) {
      lower.passed = false;
      lower.witness = "part " + std::to_string(i);
    }
  }
  return {disjoint, subset, upper, lower};
}

}  // namespace hypersat
