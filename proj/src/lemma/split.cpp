#include "hypersat/split.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "hypersat/error.hpp"

namespace hypersat {

std::size_t SplitPartition::min_restricted() const {
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (const auto& row : restricted) {
    for (std::size_t c : row) best = std::min(best, c);
  }
  return best;
}

double splitting_floor(double D, double n, double gamma, int k, int r) {
  return D * std::pow(n, gamma) / (2.0 * std::pow(static_cast<double>(k), r - 1));
}

SplitPartition make_split(const LinearHypergraph& g, std::span<const Vertex> audited, int k,
                          std::span<const int> part_of) {
  SplitPartition out;
  out.parts.assign(static_cast<std::size_t>(k), {});
  out.part_of.assign(g.id_bound(), -1);
  for (Vertex v : g.vertices()) {
    const int c = part_of[v];
    if (c < 0 || c >= k) throw Error(ErrorCode::PreconditionViolated, "part index out of range", v);
    out.part_of[v] = c;
    out.parts[static_cast<std::size_t>(c)].push_back(v);
  }
  out.audited.assign(audited.begin(), audited.end());
  std::sort(out.audited.begin(), out.audited.end());
  for (Vertex v : out.audited) {
    if (!g.has_vertex(v)) throw Error(ErrorCode::UnknownVertex, "audited vertex not in graph", v);
    std::vector<std::size_t> row(static_cast<std::size_t>(k), 0);
    for (EdgeId id : g.incident(v)) {
      int common = -2;
      for (Vertex x : g.edge(id)) {
        if (x == v) continue;
        if (common == -2) common = out.part_of[x];
        else if (common != out.part_of[x]) common = -1;
      }
      if (common >= 0) ++row[static_cast<std::size_t>(common)];
    }
    out.restricted.push_back(std::move(row));
  }
  return out;
}

SplitPartition split_vertices(const LinearHypergraph& g, std::span<const Vertex> audited, int k,
                              double floor, Seed seed, std::size_t max_retries) {
  if (k < 1) throw Error(ErrorCode::PreconditionViolated, "k must be positive");
  if (max_retries == 0) throw Error(ErrorCode::PreconditionViolated, "max_retries must be positive");
  if (g.has_partition()) {
    std::vector<int> classes;
    for (Vertex v : audited) {
      const int c = g.class_of(v);
      if (std::find(classes.begin(), classes.end(), c) == classes.end()) classes.push_back(c);
    }
    if (classes.size() > 2) {
      throw Error(ErrorCode::PreconditionViolated, "audited vertices span more than two classes");
    }
  }
  std::vector<int> part_of(g.id_bound(), -1);
  SplitPartition last;
  for (std::size_t attempt = 0; attempt < max_retries; ++attempt) {
    Rng rng(seed.child(attempt));
    for (Vertex v : g.vertices()) {
      part_of[v] = static_cast<int>(rng.below(static_cast<std::uint64_t>(k)));
    }
    last = make_split(g, audited, k, part_of);
    last.floor = floor;
    last.attempts = attempt + 1;
    if (last.audited.empty() || static_cast<double>(last.min_restricted()) >= floor) return last;
  }
  std::size_t worst_a = 0;
  std::size_t worst_i = 0;
  for (std::size_t a = 0; a < last.restricted.size(); ++a) {
    for (std::size_t i = 0; i < last.restricted[a].size(); ++i) {
      if (last.restricted[a][i] < last.restricted[worst_a][worst_i]) {
        worst_a = a;
        worst_i = i;
      }
    }
  }
  throw RetriesExhausted(last.audited[worst_a], worst_i, last.restricted[worst_a][worst_i], floor,
                         max_retries);
}

std::vector<Check> audit_split(const LinearHypergraph& g, const SplitPartition& split) {
  Check cover{"parts partition V(G)", true, {}};
  std::size_t total = 0;
  for (const auto& p : split.parts) total += p.size();
  for (Vertex v : g.vertices()) {
    if (split.part_of[v] < 0) {
      cover.passed = false;
      cover.witness = "vertex " + std::to_string(v);
      break;
    }
  }
  if (total != g.v()) cover.passed = false;
  Check floor{"restricted links >= floor", true, {}};
  for (std::size_t a = 0; a < split.restricted.size() && floor.passed; ++a) {
    for (std::size_t i = 0; i < split.restricted[a].size(); ++i) {
      if (static_cast<double>(split.restricted[a][i]) < split.floor) {
        floor.passed = false;
        floor.witness = "vertex " + std::to_string(split.audited[a]) + " part " + std::to_string(i);
        break;
      }
    }
  }
  return {cover, floor};
}

}  // namespace hypersat
