#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ilab/colouring.hpp"
#include "ilab/exact_search.hpp"
#include "ilab/graph.hpp"

namespace ilab {

struct FamilySpec {
  std::size_t s = 2;
  std::vector<std::size_t> removed_curved;  // j in 1..s-2
  bool odd_extension = false;
};

// Column j (1-based): bottom 2(j-1), top 2(j-1)+1. The odd extension adds 2s.
Vertex family_vertex(std::size_t column, bool top);

// Ladder with rungs 3(j-1), doubled straight/cross pairs 3(j-1)+1 and
// 3(j-1)+2 (the straight pair takes +2 on odd j, +1 on even j), and bottom
// curved edges j -> j+2 with colour 3j. The pendant gets colour 3s-2.
EdgeColouring extremal_family(const FamilySpec& spec);

struct SplitResult {
  Vertex v = 0, w = 0;
  EdgeId edge = 0;
  Colour c0 = 0;
  std::vector<Vertex> v1, v2;
  InducedSubgraph g1, g2;  // on V1 + {v, w} and V2 + {v, w}
  EdgeColouring c1, c2;    // restrictions of the input colouring
};

// First colour, in ascending order, that sits on exactly one edge and lies
// strictly between the smallest and largest colour used. nullopt if none.
// Requires g connected and c an interval colouring of g.
std::optional<SplitResult> unique_colour_split(const Graph& g, const EdgeColouring& c);

struct SparsityReport {
  bool ok = true;
  std::vector<Vertex> violating;  // first violating set in ascending mask order
  std::size_t edges = 0;
  double bound = 0.0;
};

// Every vertex set S with |S| >= 3 spans at most k(|S| - 2) edges. n <= 20.
SparsityReport hereditary_sparsity(const Graph& g, double k);

struct ColourBoundReport {
  std::size_t t = 0;
  double bound = 0.0;  // (k/2) n + 1 - k
  bool holds = false;
  MaxColoursSearch search;
};

// Throws Precondition when g is not sparse or not interval colourable and
// BudgetExhausted when the search runs out.
ColourBoundReport verify_colour_bound(const Graph& g, double k, const SearchBudget& budget = {});

}  // namespace ilab
