#include "ilab/colouring.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "ilab/error.hpp"

namespace ilab {

EdgeColouring::EdgeColouring(Graph g, std::vector<Colour> c) : graph(std::move(g)), colours(std::move(c)) {
  if (colours.size() != graph.edge_count()) {
    throw Error(ErrorCode::InvalidArgument, "colouring has " + std::to_string(colours.size()) +
                                                " colours for " + std::to_string(graph.edge_count()) +
                                                " edges");
  }
}

ColouringReport verify(const EdgeColouring& c) {
  ColouringReport report;
  const Graph& g = c.graph;
  if (c.colours.size() != g.edge_count()) {
    throw Error(ErrorCode::InvalidArgument, "colouring domain does not match the graph's edge set");
  }
  std::vector<Colour> at;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    auto inc = g.incident(v);
    if (inc.empty()) continue;
    at.clear();
    for (const auto& i : inc) at.push_back(c.colours[i.edge]);
    std::sort(at.begin(), at.end());
    bool proper_here = std::adjacent_find(at.begin(), at.end()) == at.end();
    bool interval_here = proper_here && at.back() - at.front() + 1 == static_cast<Colour>(at.size());
    if (!proper_here) {
      report.proper = false;
      report.interval = false;
      if (!report.first_violation) {
        auto dup = *std::adjacent_find(at.begin(), at.end());
        report.first_violation = ColouringViolation{v, "two incident edges share colour " + std::to_string(dup)};
      }
    } else if (!interval_here) {
      report.interval = false;
      if (!report.first_violation) {
        report.first_violation = ColouringViolation{
            v, "colours span [" + std::to_string(at.front()) + ", " + std::to_string(at.back()) +
                   "] but degree is " + std::to_string(at.size())};
      }
    }
  }
  report.distinct_colours = count_colours(c);
  if (!c.colours.empty()) {
    auto [lo, hi] = std::minmax_element(c.colours.begin(), c.colours.end());
    report.min_colour = *lo;
    report.max_colour = *hi;
  }
  return report;
}

std::size_t count_colours(const EdgeColouring& c) {
  std::vector<Colour> sorted(c.colours);
  std::sort(sorted.begin(), sorted.end());
  return static_cast<std::size_t>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
}

bool span_bounded(const EdgeColouring& c, double A) {
  if (!(A >= 1.0)) throw Error(ErrorCode::InvalidArgument, "span factor A must be >= 1");
  if (!verify(c).proper) throw Error(ErrorCode::Precondition, "span_bounded requires a proper colouring");
  const Graph& g = c.graph;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    auto inc = g.incident(v);
    if (inc.empty()) continue;
    Colour lo = c.colours[inc[0].edge], hi = lo;
    for (const auto& i : inc) {
      lo = std::min(lo, c.colours[i.edge]);
      hi = std::max(hi, c.colours[i.edge]);
    }
    if (static_cast<double>(hi - lo) > A * static_cast<double>(inc.size())) return false;
  }
  return true;
}

std::size_t spread_cap(std::size_t diameter, std::size_t delta_cap) {
  if (delta_cap == 0) return 0;
  return (diameter + 1) * (delta_cap - 1);
}

SpreadCheckResult spread_check(const Graph& g, std::span<const Vertex> h_vertices, const EdgeColouring& c,
                               std::size_t delta_cap) {
  if (c.graph.vertex_count() != g.vertex_count()) {
    throw Error(ErrorCode::InvalidArgument, "coloured graph and host graph have different vertex sets");
  }
  auto h = induced_subgraph(g, h_vertices);
  auto d = diameter(h.graph);
  if (!d) throw Error(ErrorCode::Precondition, "spread_check requires a connected subgraph H");
  for (Vertex x : h.original) {
    if (g.degree(x) > delta_cap) {
      throw Error(ErrorCode::Precondition, "delta_cap " + std::to_string(delta_cap) + " is below deg(" +
                                               std::to_string(x) + ") = " + std::to_string(g.degree(x)));
    }
  }
  SpreadCheckResult result;
  result.diameter = *d;
  result.cap = spread_cap(*d, delta_cap);
  std::optional<EdgeId> lo_edge, hi_edge;
  for (const auto& e : h.graph.edges()) {
    Vertex a = h.original[e.u], b = h.original[e.v];
    auto id = c.graph.find_edge(a, b);
    if (!id) {
      throw Error(ErrorCode::Precondition, "edge (" + std::to_string(a) + ", " + std::to_string(b) +
                                               ") of H is not in the coloured graph");
    }
    if (!lo_edge || c.colours[*id] < c.colours[*lo_edge]) lo_edge = *id;
    if (!hi_edge || c.colours[*id] > c.colours[*hi_edge]) hi_edge = *id;
  }
  if (lo_edge) {
    result.observed_spread = c.colours[*hi_edge] - c.colours[*lo_edge];
    if (result.observed_spread > static_cast<Colour>(result.cap)) {
      result.ok = false;
      result.violation = std::make_pair(*lo_edge, *hi_edge);
    }
  }
  return result;
}

WitnessCheck confirm_spread_witness(const EdgePartition& partition, const SpreadWitness& w) {
  WitnessCheck check;
  const Graph& g = partition.graph;
  if (w.part >= partition.part_count) {
    check.reason = "part index out of range";
    return check;
  }
  std::vector<Vertex> hv(w.h_vertices);
  std::sort(hv.begin(), hv.end());
  hv.erase(std::unique(hv.begin(), hv.end()), hv.end());
  if (hv.size() < 2) {
    check.reason = "H needs at least one edge";
    return check;
  }
  if (std::binary_search(hv.begin(), hv.end(), w.outside)) {
    check.reason = "outside vertex lies in H";
    return check;
  }
  std::vector<Edge> local;
  for (EdgeId id : w.h_edges) {
    if (id >= g.edge_count() || partition.part_of[id] != w.part) {
      check.reason = "H edge " + std::to_string(id) + " is not in part " + std::to_string(w.part);
      return check;
    }
    const auto& e = g.edge(id);
    auto iu = std::lower_bound(hv.begin(), hv.end(), e.u);
    auto iv = std::lower_bound(hv.begin(), hv.end(), e.v);
    if (iu == hv.end() || *iu != e.u || iv == hv.end() || *iv != e.v) {
      check.reason = "H edge " + std::to_string(id) + " leaves the vertex set of H";
      return check;
    }
    local.push_back({static_cast<Vertex>(iu - hv.begin()), static_cast<Vertex>(iv - hv.begin())});
  }
  Graph h;
  try {
    h = Graph::from_edges(hv.size(), std::move(local));
  } catch (const Error& e) {
    check.reason = e.what();
    return check;
  }
  auto d = diameter(h);
  if (!d) {
    check.reason = "H is disconnected";
    return check;
  }
  std::size_t delta = 0;
  for (Vertex x : hv) {
    std::size_t in_part = 0;
    for (const auto& inc : g.incident(x)) in_part += partition.part_of[inc.edge] == w.part;
    delta = std::max(delta, in_part);
  }
  std::size_t into = 0;
  for (const auto& inc : g.incident(w.outside)) {
    if (partition.part_of[inc.edge] == w.part && std::binary_search(hv.begin(), hv.end(), inc.neighbour)) ++into;
  }
  check.window = spread_cap(*d, delta) + 2 * (delta - 1) + 1;
  if (into != w.edges_into_h || *d != w.diameter || delta != w.delta_cap) {
    check.reason = "recomputed (edges into H, diameter, delta) = (" + std::to_string(into) + ", " +
                   std::to_string(*d) + ", " + std::to_string(delta) + ") disagree with the witness";
    return check;
  }
  check.confirmed = into > check.window;
  if (!check.confirmed) {
    check.reason = std::to_string(into) + " edges fit in a window of " + std::to_string(check.window);
  }
  return check;
}

EdgeColouring colour_forest(const Graph& f) {
  std::vector<Colour> colours(f.edge_count(), 0);
  std::vector<char> seen(f.vertex_count(), 0);
  // Stack entries: vertex, parent edge id (or none), colour of the parent edge.
  struct Frame {
    Vertex v;
    std::optional<EdgeId> parent;
    Colour parent_colour;
  };
  std::vector<Frame> stack;
  for (Vertex root = 0; root < f.vertex_count(); ++root) {
    if (seen[root]) continue;
    seen[root] = 1;
    stack.push_back({root, std::nullopt, 0});
    while (!stack.empty()) {
      Frame fr = stack.back();
      stack.pop_back();
      Colour next = fr.parent_colour + 1;
      for (const auto& inc : f.incident(fr.v)) {
        if (fr.parent && inc.edge == *fr.parent) continue;
        if (seen[inc.neighbour]) {
          throw Error(ErrorCode::Precondition, "colour_forest: input contains a cycle through vertex " +
                                                   std::to_string(inc.neighbour));
        }
        seen[inc.neighbour] = 1;
        colours[inc.edge] = next;
        stack.push_back({inc.neighbour, inc.edge, next});
        ++next;
      }
    }
  }
  return EdgeColouring(f, std::move(colours));
}

EdgeColouring translate(const EdgeColouring& c, Colour offset) {
  std::vector<Colour> shifted(c.colours);
  for (auto& x : shifted) x += offset;
  return EdgeColouring(c.graph, std::move(shifted));
}

EdgeColouring normalized(const EdgeColouring& c) {
  if (c.colours.empty()) return c;
  return translate(c, -*std::min_element(c.colours.begin(), c.colours.end()));
}

}  // namespace ilab
