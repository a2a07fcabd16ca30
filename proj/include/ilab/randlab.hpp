#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "ilab/colouring.hpp"
#include "ilab/graph.hpp"

namespace ilab {

struct LowerBoundParams {
  std::size_t r = 2;
  std::size_t n = 1000;
  double delta = 0.1;
  double epsilon = 1e-4;
  std::uint64_t seed = 0;

  // delta = 1/(1000 r), epsilon = delta^{r+2}.
  static LowerBoundParams preset(std::size_t r, std::size_t n, std::uint64_t seed);

  // Throws InvalidArgument; a probability above 1 names its layer.
  void validate() const;
  // max(1, round-half-up(n * delta^i)), i in 1..r.
  std::size_t layer_size(std::size_t i) const;
  double layer_probability(std::size_t i) const;  // epsilon * delta^{-i}
};

// B is 0..n-1, then A_1, ..., A_r in consecutive blocks.
struct LayeredBipartite {
  LowerBoundParams params;
  Graph graph;
  std::vector<std::uint32_t> layer_of;  // per edge, 1..r
  std::vector<std::size_t> layer_start;  // r + 1 offsets; A_i = [layer_start[i-1], layer_start[i])

  std::size_t b_size() const { return params.n; }
  std::size_t layer_count() const { return params.r; }
  std::vector<Vertex> a_layer(std::size_t i) const;
  // 0 for B vertices, else the layer index.
  std::size_t layer_of_vertex(Vertex v) const;
};

LayeredBipartite generate(const LowerBoundParams& params);

// ---------------------------------------------------------------------------
// Hypothesis checkers

struct DegreeViolation {
  bool left = true;
  std::uint32_t vertex = 0;
  std::size_t degree = 0;
};

struct BiregularReport {
  bool ok = true;
  double left_lo = 0, left_hi = 0, right_lo = 0, right_hi = 0;
  std::vector<DegreeViolation> violations;
};

// Every degree within [0.9, 1.1] * p * (size of the other part).
BiregularReport check_biregular(const BipartiteGraph& b, double p);

struct PseudorandomReport {
  bool ok = true;
  bool exhaustive = false;
  std::size_t pairs = 0;
  double worst_ratio = 0.0;  // |e(U,V) - p|U||V|| / (|U||V|)^{0.85}; ok iff <= 1
  std::size_t worst_u = 0, worst_v = 0;
  std::size_t failures = 0;
};

// Samples `trials` pairs with sizes uniform in [ceil(alpha|C|), |C|] and
// uniform subsets; exhaustive over all admissible pairs when both parts <= 12.
PseudorandomReport check_pseudorandom(const BipartiteGraph& b, double alpha, double p, std::size_t trials,
                                      std::uint64_t seed);

// ---------------------------------------------------------------------------
// Random instances

BipartiteGraph random_bipartite(std::size_t left, std::size_t right, double p, std::uint64_t seed);
// Every vertex of degree exactly `degree`: circulant start, then seeded
// degree-preserving double-edge swaps.
BipartiteGraph random_biregular_bipartite(std::size_t n, std::size_t degree, std::uint64_t seed);
// Independent uniform part index per edge.
std::vector<std::uint32_t> random_parts(std::size_t edges, std::size_t parts, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Dense monochromatic subgraph

struct DensePartHypothesis {
  double p = 0.0;
  double gamma = 0.0;  // deleted proportion, <= 0.1
  std::size_t r = 1;
  double alpha() const { return p * p / (2.0 * static_cast<double>(r * r)); }
};

struct DenseSubgraphReport {
  std::uint32_t part = 0;
  std::uint32_t pivot = 0;                // left local id
  std::vector<std::uint32_t> middle;      // right local ids, Gamma_k(pivot)
  std::vector<std::uint32_t> far;         // left local ids, Gamma_k(Gamma_k(pivot))
  std::vector<Vertex> k_vertices;         // ids in b.to_graph(), ascending
  std::vector<EdgeId> k_edges;            // edge ids of b
  std::size_t diameter = 0;
  std::size_t k_cap_c = 0;                // |K intersect left|
  std::size_t target = 0;                 // ceil(|C| / 2r^2)
};

// C is the left part. part_of is aligned with b.edges(); part_count = r.
DenseSubgraphReport find_dense_monochromatic(const BipartiteGraph& b, const std::vector<std::uint32_t>& part_of,
                                             std::size_t part_count, const DensePartHypothesis& hyp);

// ---------------------------------------------------------------------------
// Adversarial probe

struct ProbeConfig {
  double budget_scale = 1.0;  // multiplies the 8 eps delta^{-i} n cap
};

struct ProbeStage {
  std::size_t k = 0;
  std::size_t b_before = 0;
  // Witness search against earlier stages.
  std::size_t max_edges_into_earlier = 0;
  std::size_t cap_exceedances = 0;
  bool cap_vacuous = false;  // some earlier stage's scaled cap is below 1
  // Deletion of used-part edges.
  std::size_t deleted_edges = 0;
  double max_deleted_proportion = 0.0;
  bool deletion_within_17delta = true;
  std::size_t surviving_edges = 0;
  // Dense step; absent when the stage stalls.
  std::optional<std::uint32_t> part;
  std::size_t target = 0;
  std::size_t b_after = 0;
  std::size_t diameter = 0;
  std::size_t max_part_degree = 0;  // over V(K_k), within part f_k
  std::vector<Vertex> k_vertices;   // ids in the layered graph
  std::vector<EdgeId> k_edges;      // edge ids in the layered graph
};

enum class ProbeStatus { Witness, DistinctTrace, Stalled };

const char* to_string(ProbeStatus status);

struct ProbeReport {
  ProbeStatus status = ProbeStatus::Stalled;
  std::vector<ProbeStage> stages;
  std::optional<SpreadWitness> witness;
  std::optional<WitnessCheck> check;
};

// partition.graph must equal g.graph.
ProbeReport adversarial_probe(const LayeredBipartite& g, const EdgePartition& partition, const ProbeConfig& cfg = {});

}  // namespace ilab
