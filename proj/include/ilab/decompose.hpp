#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "ilab/colouring.hpp"
#include "ilab/graph.hpp"

namespace ilab {

struct PipelineConfig {
  double delta = 0.25;
  std::uint64_t seed = 0;  // echoed in reports; the pipeline itself is deterministic

  // 1/(1/2 + 1/delta): the exponent that balances the two phases. 2/9 at 1/4.
  double gamma() const { return 1.0 / (0.5 + 1.0 / delta); }
  // The other closed form, 1/(1/2 + delta/2); reported for comparison only.
  double gamma_alternative() const { return 1.0 / (0.5 + delta / 2.0); }
  void validate() const;
};

// k = max(1, floor(d * n / 100)).
std::size_t k_from_density(double density, std::size_t n);

// ---------------------------------------------------------------------------
// Bit split

struct BitLayer {
  std::size_t bit = 0;
  BipartiteGraph graph;          // labels are vertex ids of the split graph
  std::vector<EdgeId> source;    // layer edge -> edge id in the split graph
};

struct BitSplit {
  std::size_t padded_vertices = 1;  // 2^s
  std::vector<BitLayer> layers;     // s layers, some possibly empty
};

BitSplit bit_split(const Graph& g);

// ---------------------------------------------------------------------------
// k-factors

struct KFactorWitness {
  std::size_t k = 0;
  std::optional<BipartiteRestriction> factor;  // same parts, k-regular
  // Violation: kn + e(X, Y) < k|X| + k|Y|; local ids, ascending.
  std::vector<std::uint32_t> x, y;
  std::size_t e_xy = 0;

  bool has_factor() const { return factor.has_value(); }
};

KFactorWitness find_k_factor(const BipartiteGraph& b, std::size_t k);

// ---------------------------------------------------------------------------
// Density increment

enum class IncrementKind { Factor, Restriction };

struct IncrementStep {
  IncrementKind kind = IncrementKind::Factor;
  std::size_t n = 0;
  double density = 0.0;
  std::size_t k = 0;
  std::optional<BipartiteRestriction> factor;
  // Restriction: local ids of b, |left| == |right|.
  std::vector<std::uint32_t> left, right;
  double restricted_density = 0.0;
  // 1: (A, C) escape, 2: (D, Y) escape, 0: peeling fallback after k was
  // rounded up to 1.
  int escape = 0;
};

IncrementStep density_increment_step(const BipartiteGraph& b, const PipelineConfig& cfg);

struct TraceEntry {
  std::size_t n = 0;
  double density = 0.0;
  int escape = -1;  // escape that produced this entry; -1 for the start
};

struct RegularSubgraph {
  std::size_t k = 0;
  BipartiteRestriction subgraph;  // k-regular; source maps into the input's edge ids
  std::vector<TraceEntry> trace;
};

RegularSubgraph large_regular_subgraph(const BipartiteGraph& b, const PipelineConfig& cfg);

// ---------------------------------------------------------------------------
// Regular bipartite colouring and forests

// Perfect matchings as edge ids of h; matching j is extracted j-th.
std::vector<std::vector<EdgeId>> matching_decomposition(const BipartiteGraph& h);

// On h.to_graph(); matching j gets colour j (1-based).
EdgeColouring colour_regular_bipartite(const BipartiteGraph& h);

// First-fit forests over edges in canonical order.
std::vector<std::vector<EdgeId>> forest_partition(const Graph& g);

// ---------------------------------------------------------------------------
// Pipeline

enum class PartKind { Regular, Forest };

struct PartRecord {
  PartKind kind = PartKind::Regular;
  std::size_t layer = 0;  // bit index
  std::size_t k = 0;      // regular parts only
  std::vector<EdgeId> edges;
};

struct Extraction {
  std::size_t k = 0;
  std::size_t edges = 0;
  double density = 0.0;        // layer density before the extraction
  double extraction_floor = 0.0;    // density^{1/delta} * n^2 / 200, n the part size
  std::vector<TraceEntry> trace;
  std::size_t first_part = 0;  // index into parts
};

struct LayerReport {
  std::size_t bit = 0;
  std::size_t edges = 0;
  std::vector<Extraction> extractions;
  std::size_t forests = 0;
};

struct DecompositionReport {
  PipelineConfig config;
  std::size_t padded_vertices = 1;
  double gamma_used = 0.0;
  double gamma_alternative = 0.0;
  double threshold = 0.0;      // N^{-gamma}, N the layer order
  double stop_edges = 0.0;  // N^{2 - gamma/delta} / 200
  double forest_reference = 0.0;  // sqrt(m / 2)
  std::vector<LayerReport> layers;
  std::vector<PartRecord> parts;
  std::vector<EdgeColouring> colourings;  // per part, on partition.part_graph(p)
  EdgePartition partition;
  std::size_t part_count = 0;
  std::size_t forests_used = 0;
};

// threads = 0 uses one thread per layer (capped by hardware concurrency).
DecompositionReport decompose_theta(const Graph& g, const PipelineConfig& cfg, unsigned threads = 0);

// ---------------------------------------------------------------------------
// Objective check

struct GridPoint {
  double x = 0.0;
  double y = 0.0;
  double value = 0.0;
};

struct ObjectiveReport {
  double delta = 0.0;
  double step = 0.0;
  GridPoint max;                    // over the grid with x > 0
  GridPoint boundary_max;           // over x = 0
  std::vector<GridPoint> local_maxima;  // x > 0, not below any grid neighbour
  std::size_t points = 0;
};

double objective(double delta, double x, double y);

// Grid {x = i*step, y = j*step : 0 <= y <= min(x, 1/2), 0 <= x <= 1}.
ObjectiveReport objective_check(double delta, double step);

}  // namespace ilab
