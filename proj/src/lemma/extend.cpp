#include "hypersat/extend.hpp"

#include <algorithm>
#include <string>

#include "hypersat/error.hpp"

namespace hypersat {

namespace {

[[noreturn]] void fail(const std::string& why) {
  throw Error(ErrorCode::NoExtension, why);
}

}  // namespace

Extension extend_path_to_cycle(const RainbowPath& p, const ExtensionContext& ctx) {
  if (ctx.g == nullptr || ctx.tree == nullptr || ctx.h == nullptr) fail("incomplete context");
  const auto& g = *ctx.g;
  const auto& shape = ctx.tree->shape;
  const auto& h = *ctx.h;
  if (p.vertices.size() < 2 || p.colours.size() + 1 != p.vertices.size()) {
    fail("malformed path");
  }
  const Vertex v1 = p.vertices.front();
  const Vertex vt = p.vertices.back();
  if (!shape.contains(ctx.apex)) fail("apex is not a tree vertex");
  if (!shape.is_ancestor(ctx.apex, v1) || v1 == ctx.apex) fail("v_1 is not below the apex");
  for (std::size_t i = 1; i < p.vertices.size(); ++i) {
    const Vertex v = p.vertices[i];
    const bool level_side = i % 2 == 0;
    if (level_side) {
      if (!shape.contains(v) || shape.depth(v) != shape.depth(v1)) {
        fail("path vertex " + std::to_string(v) + " leaves the tree level");
      }
    } else if (shape.contains(v)) {
      fail("path reuses tree vertex " + std::to_string(v));
    }
  }
  const Vertex branch = shape.child_toward(ctx.apex, v1);

  std::vector<Vertex> blocked(p.vertices.begin(), p.vertices.end());
  for (const Edge& c : p.colours) blocked.insert(blocked.end(), c.begin(), c.end());
  std::sort(blocked.begin(), blocked.end());
  auto is_blocked = [&](Vertex y) { return std::binary_search(blocked.begin(), blocked.end(), y); };

  std::vector<std::pair<Vertex, const Edge*>> admissible;
  for (std::size_t id : h.incident(vt)) {
    const Vertex u = h.other_end(id, vt);
    if (!shape.contains(u) || shape.depth(u) != shape.depth(v1)) continue;
    if (!shape.is_ancestor(ctx.apex, u) || shape.is_ancestor(branch, u)) continue;
    if (is_blocked(u)) continue;
    const Edge& colour = h.edge(id).colour;
    if (std::any_of(colour.begin(), colour.end(), is_blocked)) continue;
    admissible.emplace_back(u, &colour);
  }
  std::sort(admissible.begin(), admissible.end());

  for (const auto& [u, colour] : admissible) {
    // Skeleton: P, then u up to the apex, then down to v_1's parent.
    std::vector<Vertex> cyc(p.vertices.begin(), p.vertices.end());
    const auto up = shape.path_up(u, ctx.apex);
    cyc.insert(cyc.end(), up.begin(), up.end());
    auto down = shape.path_up(v1, ctx.apex);
    down.pop_back();  // apex already listed
    for (auto it = down.rbegin(); it != down.rend(); ++it) {
      if (*it != v1) cyc.push_back(*it);
    }
    std::vector<EdgeId> ordered;
    bool ok = true;
    for (std::size_t i = 0; i < cyc.size() && ok; ++i) {
      const auto id = g.edge_of_pair(cyc[i], cyc[(i + 1) % cyc.size()]);
      if (!id) ok = false;
      else ordered.push_back(*id);
    }
    if (!ok || !is_linear_cycle_sequence(g, ordered)) continue;
    Extension out;
    out.copy = make_cycle_copy(g, ordered);
    out.closing_vertex = u;
    out.candidates = admissible.size();
    return out;
  }
  fail("no admissible closing vertex among " + std::to_string(admissible.size()) +
       " candidates for path ending at " + std::to_string(vt));
}

}  // namespace hypersat
