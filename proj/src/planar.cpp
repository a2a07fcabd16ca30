#include "ilab/planar.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <string>

#include "ilab/error.hpp"

namespace ilab {

Vertex family_vertex(std::size_t column, bool top) {
  return static_cast<Vertex>(2 * (column - 1) + (top ? 1 : 0));
}

EdgeColouring extremal_family(const FamilySpec& spec) {
  const std::size_t s = spec.s;
  if (s < 2) throw Error(ErrorCode::InvalidArgument, "extremal family needs s >= 2");
  for (std::size_t j : spec.removed_curved) {
    if (j < 1 || j + 2 > s) {
      throw Error(ErrorCode::InvalidArgument, "curved edge " + std::to_string(j) + " does not exist for s = " +
                                                  std::to_string(s));
    }
  }
  std::map<Edge, Colour> coloured;
  auto add = [&](Vertex a, Vertex b, Colour c) { coloured[{std::min(a, b), std::max(a, b)}] = c; };
  for (std::size_t j = 1; j <= s; ++j) add(family_vertex(j, false), family_vertex(j, true), 3 * Colour(j - 1));
  for (std::size_t j = 1; j < s; ++j) {
    Colour base = 3 * Colour(j - 1);
    Colour straight = j % 2 == 1 ? base + 2 : base + 1;
    Colour cross = j % 2 == 1 ? base + 1 : base + 2;
    add(family_vertex(j, false), family_vertex(j + 1, false), straight);
    add(family_vertex(j, true), family_vertex(j + 1, true), straight);
    add(family_vertex(j, false), family_vertex(j + 1, true), cross);
    add(family_vertex(j, true), family_vertex(j + 1, false), cross);
  }
  for (std::size_t j = 1; j + 2 <= s; ++j) {
    if (std::find(spec.removed_curved.begin(), spec.removed_curved.end(), j) != spec.removed_curved.end()) continue;
    add(family_vertex(j, false), family_vertex(j + 2, false), 3 * Colour(j));
  }
  std::size_t n = 2 * s;
  if (spec.odd_extension) {
    add(family_vertex(s, false), static_cast<Vertex>(n), 3 * Colour(s) - 2);
    ++n;
  }
  std::vector<Edge> edges;
  std::vector<Colour> colours;
  for (const auto& [e, c] : coloured) {
    edges.push_back(e);
    colours.push_back(c);
  }
  // The map is already in canonical order, so colours stay aligned.
  EdgeColouring out(Graph::from_edges(n, std::move(edges)), std::move(colours));
  if (!verify(out).interval) throw Error(ErrorCode::Internal, "extremal family colouring is not interval");
  return out;
}

namespace {

EdgeColouring restrict_colouring(const EdgeColouring& c, const InducedSubgraph& sub) {
  std::vector<Colour> colours;
  for (const auto& e : sub.graph.edges()) {
    colours.push_back(c.colours[*c.graph.find_edge(sub.original[e.u], sub.original[e.v])]);
  }
  return EdgeColouring(sub.graph, std::move(colours));
}

}  // namespace

std::optional<SplitResult> unique_colour_split(const Graph& g, const EdgeColouring& c) {
  if (!(c.graph == g)) throw Error(ErrorCode::InvalidArgument, "colouring is over a different graph");
  if (!is_connected(g)) throw Error(ErrorCode::Precondition, "unique_colour_split requires a connected graph");
  auto report = verify(c);
  if (!report.interval) throw Error(ErrorCode::Precondition, "unique_colour_split requires an interval colouring");
  if (g.edge_count() == 0) return std::nullopt;
  std::map<Colour, std::vector<EdgeId>> by_colour;
  for (EdgeId e = 0; e < g.edge_count(); ++e) by_colour[c.colours[e]].push_back(e);
  std::optional<EdgeId> chosen;
  for (const auto& [colour, ids] : by_colour) {
    if (colour > report.min_colour && colour < report.max_colour && ids.size() == 1) {
      chosen = ids[0];
      break;
    }
  }
  if (!chosen) return std::nullopt;
  SplitResult res;
  res.edge = *chosen;
  res.c0 = c.colours[*chosen];
  res.v = g.edge(*chosen).u;
  res.w = g.edge(*chosen).v;
  std::vector<char> side(g.vertex_count(), 0);  // 1: V1, 2: V2
  for (Vertex x = 0; x < g.vertex_count(); ++x) {
    if (x == res.v || x == res.w) continue;
    bool below = true, above = true;
    for (const auto& inc : g.incident(x)) {
      below = below && c.colours[inc.edge] < res.c0;
      above = above && c.colours[inc.edge] > res.c0;
    }
    if (below == above) throw Error(ErrorCode::Internal, "vertex " + std::to_string(x) + " straddles the split colour");
    side[x] = below ? 1 : 2;
    (below ? res.v1 : res.v2).push_back(x);
  }
  for (const auto& e : g.edges()) {
    if (side[e.u] && side[e.v] && side[e.u] != side[e.v]) {
      throw Error(ErrorCode::Internal, "split halves are joined by an edge");
    }
  }
  auto with_vw = [&](std::vector<Vertex> s) {
    s.push_back(res.v);
    s.push_back(res.w);
    std::sort(s.begin(), s.end());
    return s;
  };
  auto s1 = with_vw(res.v1), s2 = with_vw(res.v2);
  res.g1 = induced_subgraph(g, s1);
  res.g2 = induced_subgraph(g, s2);
  res.c1 = restrict_colouring(c, res.g1);
  res.c2 = restrict_colouring(c, res.g2);
  if (!verify(res.c1).interval || !verify(res.c2).interval) {
    throw Error(ErrorCode::Internal, "split half lost the interval property");
  }
  return res;
}

SparsityReport hereditary_sparsity(const Graph& g, double k) {
  const std::size_t n = g.vertex_count();
  if (n > 20) throw Error(ErrorCode::InvalidArgument, "hereditary_sparsity is exhaustive and limited to 20 vertices");
  std::vector<std::uint32_t> adj(n, 0);
  for (const auto& e : g.edges()) {
    adj[e.u] |= 1U << e.v;
    adj[e.v] |= 1U << e.u;
  }
  SparsityReport rep;
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    int size = std::popcount(mask);
    if (size < 3) continue;
    std::size_t twice = 0;
    for (std::uint32_t rest = mask; rest; rest &= rest - 1) {
      twice += static_cast<std::size_t>(std::popcount(adj[std::countr_zero(rest)] & mask));
    }
    double bound = k * (size - 2);
    if (static_cast<double>(twice / 2) > bound + 1e-9) {
      rep.ok = false;
      rep.edges = twice / 2;
      rep.bound = bound;
      for (Vertex v = 0; v < n; ++v) {
        if ((mask >> v) & 1U) rep.violating.push_back(v);
      }
      return rep;
    }
  }
  return rep;
}

ColourBoundReport verify_colour_bound(const Graph& g, double k, const SearchBudget& budget) {
  auto sparse = hereditary_sparsity(g, k);
  if (!sparse.ok) throw Error(ErrorCode::Precondition, "graph violates hereditary sparsity for the given k");
  ColourBoundReport rep;
  rep.search = max_colours(g, budget);
  if (rep.search.outcome == SearchOutcome::BudgetExhausted) {
    throw Error(ErrorCode::BudgetExhausted, "t(G) search exhausted its budget");
  }
  if (rep.search.outcome == SearchOutcome::None) {
    throw Error(ErrorCode::Precondition, "graph is not interval colourable");
  }
  rep.t = rep.search.t;
  rep.bound = k / 2.0 * static_cast<double>(g.vertex_count()) + 1.0 - k;
  rep.holds = static_cast<double>(rep.t) <= rep.bound + 1e-9;
  return rep;
}

}  // namespace ilab
