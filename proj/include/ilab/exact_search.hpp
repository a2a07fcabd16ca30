#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "ilab/colouring.hpp"
#include "ilab/graph.hpp"

namespace ilab {

struct SearchBudget {
  // Largest admissible span (max - min + 1) of a connected component's colours.
  // Defaults to 2n, the general upper bound on t(G).
  std::optional<std::size_t> max_colours;
  std::uint64_t node_limit = 200'000'000;
  double time_limit_seconds = 600.0;

  std::size_t palette_for(const Graph& g) const { return max_colours.value_or(2 * g.vertex_count()); }
};

enum class SearchOutcome { Found, None, BudgetExhausted };

const char* to_string(SearchOutcome outcome);

struct ColouringSearch {
  SearchOutcome outcome = SearchOutcome::None;
  std::optional<EdgeColouring> colouring;
  std::uint64_t nodes = 0;
};

// Component-wise constraint search. Each component's first edge is pinned to
// colour 0; other colours range over +/-(palette - 1).
ColouringSearch find_interval_colouring(const Graph& g, const SearchBudget& budget = {});

struct MaxColoursSearch {
  SearchOutcome outcome = SearchOutcome::None;  // None: not interval colourable
  std::size_t t = 0;
  std::optional<EdgeColouring> witness;
  std::uint64_t nodes = 0;
};

// Exact t(G): per component, branch and bound over colourings whose minimum
// colour is 0; components are placed on disjoint colour ranges in the witness.
MaxColoursSearch max_colours(const Graph& g, const SearchBudget& budget = {});

struct ThicknessResult {
  std::size_t theta = 0;
  EdgePartition partition;
  std::vector<EdgeColouring> per_part_colourings;  // each on the full vertex set
  bool exhausted = true;                           // every smaller k was refuted
};

enum class ThicknessOutcome { Found, ExceedsKMax, BudgetExhausted };

const char* to_string(ThicknessOutcome outcome);

struct ThicknessSearch {
  ThicknessOutcome outcome = ThicknessOutcome::ExceedsKMax;
  std::optional<ThicknessResult> result;
};

// Tries k = 1, 2, ... k_max; partitions are enumerated as restricted growth
// strings over the canonical edge order (edge 0 in part 0, new parts opened in
// order). Requires at most 64 edges. An edgeless graph has theta 0.
ThicknessSearch exact_thickness(const Graph& g, std::size_t k_max, const SearchBudget& budget = {});

struct PeelStep {
  Vertex removed = 0;
  std::size_t theta = 0;
};

struct PeelSequence {
  std::size_t initial_theta = 0;
  std::vector<PeelStep> steps;  // stops once the remaining graph is edgeless
};

// Removes vertices in ascending id order. Throws Error(BudgetExhausted).
PeelSequence peel_sequence(const Graph& g, const SearchBudget& budget = {});

}  // namespace ilab
