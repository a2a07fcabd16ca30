#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ilab/graph.hpp"

namespace ilab {

using Colour = std::int64_t;

// Integer colour per edge, aligned with graph.edges(). Colours are arbitrary
// integers; normalisation to a zero minimum is a display concern.
struct EdgeColouring {
  Graph graph;
  std::vector<Colour> colours;

  EdgeColouring() = default;
  EdgeColouring(Graph g, std::vector<Colour> c);

  Colour operator[](EdgeId e) const { return colours.at(e); }
};

struct ColouringViolation {
  Vertex vertex = 0;
  std::string description;
};

struct ColouringReport {
  bool proper = true;
  bool interval = true;
  std::size_t distinct_colours = 0;
  Colour min_colour = 0;
  Colour max_colour = 0;
  std::optional<ColouringViolation> first_violation;
};

ColouringReport verify(const EdgeColouring& c);

std::size_t count_colours(const EdgeColouring& c);

// Every vertex x satisfies max(C_x) - min(C_x) <= A * deg(x). Requires a proper
// colouring and A >= 1.
bool span_bounded(const EdgeColouring& c, double A);

// Largest admissible colour difference between two edges of a connected
// subgraph of diameter d whose vertices all have degree <= delta_cap in the
// host graph: (d + 1)(delta_cap - 1).
std::size_t spread_cap(std::size_t diameter, std::size_t delta_cap);

struct SpreadCheckResult {
  bool ok = true;
  std::size_t diameter = 0;
  std::size_t cap = 0;
  Colour observed_spread = 0;
  std::optional<std::pair<EdgeId, EdgeId>> violation;  // edge ids of c.graph
};

// H = g[h_vertices]; every edge of H must be coloured by c (c.graph is the
// intermediate graph K with H <= K <= g). Throws if H is disconnected or if
// delta_cap is below a degree in g of some vertex of H.
SpreadCheckResult spread_check(const Graph& g, std::span<const Vertex> h_vertices, const EdgeColouring& c,
                               std::size_t delta_cap);

// A connected subgraph H of one part of an edge partition together with an
// outside vertex x that has too many edges of that part into H.
struct SpreadWitness {
  std::uint32_t part = 0;
  std::vector<Vertex> h_vertices;
  std::vector<EdgeId> h_edges;  // edge ids in the partitioned graph, all in `part`
  Vertex outside = 0;
  std::size_t edges_into_h = 0;
  std::size_t diameter = 0;
  std::size_t delta_cap = 0;  // max degree within the part over H's vertices
};

// Apply the spread bound inside the part's own graph: in any interval colouring
// of the part, H edges lie within spread_cap of each other, and an edge from x
// to h in H is within delta_cap - 1 of the H edges at h. The edges from x thus
// fit in a window of spread_cap + 2(delta_cap - 1) + 1 colours; the witness is
// valid when x has more part edges into H than that window admits.
struct WitnessCheck {
  bool confirmed = false;
  std::size_t window = 0;
  std::string reason;
};
WitnessCheck confirm_spread_witness(const EdgePartition& partition, const SpreadWitness& witness);

// Interval colouring of a forest: trees rooted at their lowest id, root edges
// 1..deg in neighbour order, children of an edge with colour c get c+1, c+2, ...
EdgeColouring colour_forest(const Graph& forest);

EdgeColouring translate(const EdgeColouring& c, Colour offset);
// Shift so the smallest colour is zero (identity on empty colourings).
EdgeColouring normalized(const EdgeColouring& c);

}  // namespace ilab
