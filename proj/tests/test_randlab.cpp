#include <cmath>
#include <set>

#include "doctest.h"
#include "ilab/error.hpp"
#include "ilab/randlab.hpp"
#include "oracles.hpp"

using namespace ilab;

namespace {

EdgePartition by_layer(const LayeredBipartite& g) {
  std::vector<std::uint32_t> parts;
  for (auto l : g.layer_of) parts.push_back(l - 1);
  return EdgePartition(g.graph, parts, g.layer_count());
}

BipartiteGraph complete_bipartite(std::uint32_t n) {
  std::vector<BiEdge> edges;
  for (std::uint32_t l = 0; l < n; ++l)
    for (std::uint32_t r = 0; r < n; ++r) edges.push_back({l, r});
  return BipartiteGraph::from_edges(n, n, edges);
}

// Re-derives a witness from its definition: H connected inside its part, the
// outside vertex's part edges into H exceed the colour window allowed by the
// spread bound applied to the part's own graph.
void recheck_witness(const EdgePartition& p, const SpreadWitness& w) {
  auto part = p.part_graph(w.part).graph;
  auto h = induced_subgraph(part, w.h_vertices);
  REQUIRE(is_connected(h.graph));
  REQUIRE(diameter(h.graph));
  CHECK(*diameter(h.graph) <= w.diameter);
  std::size_t cap = 0;
  for (auto v : w.h_vertices) cap = std::max(cap, part.degree(v));
  CHECK(cap <= w.delta_cap);
  std::set<Vertex> hs(w.h_vertices.begin(), w.h_vertices.end());
  CHECK_FALSE(hs.count(w.outside));
  std::size_t into = 0;
  for (const auto& inc : part.incident(w.outside)) into += hs.count(inc.neighbour);
  CHECK(into == w.edges_into_h);
  std::size_t window = spread_cap(w.diameter, w.delta_cap) + 2 * (w.delta_cap - 1) + 1;
  CHECK(into > window);
  for (auto e : w.h_edges) CHECK(p.part_of[e] == w.part);
}

}  // namespace

TEST_CASE("layer sizes and probabilities") {
  LowerBoundParams p;
  p.r = 2;
  p.n = 1000;
  p.delta = 0.1;
  p.epsilon = 1e-4;
  CHECK(p.layer_size(1) == 100);
  CHECK(p.layer_size(2) == 10);
  CHECK(p.layer_probability(1) == doctest::Approx(1e-3));
  CHECK(p.layer_probability(2) == doctest::Approx(1e-2));
  p.n = 5;
  CHECK(p.layer_size(2) == 1);

  auto pre = LowerBoundParams::preset(2, 1000, 0);
  CHECK(pre.delta == doctest::Approx(1.0 / 2000));
  CHECK(pre.epsilon == doctest::Approx(std::pow(1.0 / 2000, 4)));

  LowerBoundParams bad = p;
  bad.epsilon = 0.5;
  CHECK_THROWS_AS(bad.validate(), Error);
}

TEST_CASE("generate") {
  LowerBoundParams p;
  p.r = 2;
  p.n = 1000;
  p.delta = 0.1;
  p.epsilon = 1e-4;
  p.seed = 3;
  auto g = generate(p);
  CHECK(g.graph.vertex_count() == 1110);
  CHECK(g.a_layer(1).size() == 100);
  CHECK(g.a_layer(2).front() == 1100);
  for (EdgeId e = 0; e < g.graph.edge_count(); ++e) {
    const auto& ed = g.graph.edge(e);
    CHECK(ed.u < 1000);
    CHECK(g.layer_of_vertex(ed.v) == g.layer_of[e]);
  }
  auto again = generate(p);
  CHECK(again.graph == g.graph);
  p.seed = 4;
  CHECK_FALSE(generate(p).graph == g.graph);
  p.epsilon = 0;
  CHECK(generate(p).graph.empty());
}

TEST_CASE("mean B degree tracks r eps n") {
  LowerBoundParams p;
  p.r = 2;
  p.n = 1000;
  p.delta = 0.1;
  p.epsilon = 1e-3;
  double total = 0;
  const int seeds = 50;
  for (int s = 0; s < seeds; ++s) {
    p.seed = static_cast<std::uint64_t>(s);
    total += static_cast<double>(generate(p).graph.edge_count()) / 1000.0;
  }
  double expected = 2 * p.epsilon * 1000;
  // Each layer's edge count is binomial; the mean degree over all runs has
  // variance sum_i |A_i| q_i (1 - q_i) / (n * seeds).
  double var = (100 * 1e-2 * (1 - 1e-2) + 10 * 1e-1 * (1 - 1e-1)) / (1000.0 * seeds);
  CHECK(std::abs(total / seeds - expected) <= 3 * std::sqrt(var));
}

TEST_CASE("check_biregular") {
  CHECK(check_biregular(complete_bipartite(6), 1.0).ok);
  auto empty = check_biregular(BipartiteGraph::from_edges(4, 4, {}), 0.5);
  CHECK_FALSE(empty.ok);
  CHECK(empty.violations.size() == 8);
  auto reg = random_biregular_bipartite(500, 50, 1);
  CHECK(check_biregular(reg, 0.1).ok);
  // Bernoulli degrees spread by about 6.7 against a +/-5 window.
  CHECK_FALSE(check_biregular(random_bipartite(500, 500, 0.1, 1), 0.1).ok);
}

TEST_CASE("random_biregular_bipartite") {
  for (std::size_t d : {1, 5, 30}) {
    auto b = random_biregular_bipartite(60, d, d);
    CHECK(b.edge_count() == 60 * d);
    for (std::uint32_t v = 0; v < 60; ++v) {
      CHECK(b.left_degree(v) == d);
      CHECK(b.right_degree(v) == d);
    }
  }
  CHECK(random_biregular_bipartite(30, 4, 9).edges()[0] == random_biregular_bipartite(30, 4, 9).edges()[0]);
}

TEST_CASE("check_pseudorandom") {
  auto full = check_pseudorandom(complete_bipartite(8), 0.5, 1.0, 1, 0);
  CHECK(full.ok);
  CHECK(full.exhaustive);
  CHECK(full.worst_ratio == 0.0);

  auto empty = check_pseudorandom(BipartiteGraph::from_edges(200, 200, {}), 0.5, 0.5, 200, 1);
  CHECK_FALSE(empty.ok);
  CHECK(empty.failures == 200);

  auto g = random_bipartite(200, 200, 0.3, 1);
  auto r = check_pseudorandom(g, 0.3 * 0.3 / 18, 0.3, 10000, 2);
  CHECK(r.ok);
  CHECK(r.pairs == 10000);
  CHECK_FALSE(r.exhaustive);
}

TEST_CASE("find_dense_monochromatic on named graphs") {
  auto k = complete_bipartite(10);
  std::vector<std::uint32_t> one(k.edge_count(), 0);
  auto r = find_dense_monochromatic(k, one, 1, {1.0, 0.0, 1});
  CHECK(r.k_cap_c == 10);
  CHECK(r.diameter <= 2);

  auto edge = BipartiteGraph::from_edges(1, 1, {{0, 0}});
  auto e = find_dense_monochromatic(edge, {0}, 1, {1.0, 0.0, 1});
  CHECK(e.k_edges.size() == 1);
  CHECK(e.diameter == 1);
}

TEST_CASE("dense monochromatic subgraphs on random partitions") {
  for (int trial = 0; trial < 10; ++trial) {
    auto b = random_biregular_bipartite(200, 60, 100 + trial);
    auto parts = random_parts(b.edge_count(), 3, 200 + trial);
    DensePartHypothesis hyp{0.3, 0.0, 3};
    auto r = find_dense_monochromatic(b, parts, 3, hyp);
    CHECK(r.diameter <= 4);
    CHECK(r.k_cap_c >= 12);
    CHECK(r.target == 12);
    auto g = b.to_graph();
    for (auto e : r.k_edges) CHECK(parts[e] == r.part);
    auto kg = induced_subgraph(edge_subgraph(g, r.k_edges).graph, r.k_vertices).graph;
    CHECK(is_connected(kg));
    CHECK(*diameter(kg) <= 4);
  }
}

TEST_CASE("probe with one part per layer gives the full trace") {
  LowerBoundParams p;
  p.r = 3;
  p.n = 2000;
  p.delta = 0.1;
  p.epsilon = 0.001;
  p.seed = 1;
  auto g = generate(p);
  auto report = adversarial_probe(g, by_layer(g));
  CHECK(report.status == ProbeStatus::DistinctTrace);
  REQUIRE(report.stages.size() == 3);
  for (std::size_t k = 0; k < 3; ++k) {
    REQUIRE(report.stages[k].part);
    CHECK(*report.stages[k].part == k);
    CHECK(report.stages[k].diameter <= 4);
  }
}

TEST_CASE("probe on a single layer") {
  LowerBoundParams p;
  p.r = 1;
  p.n = 400;
  p.delta = 0.1;
  p.epsilon = 0.05;
  p.seed = 2;
  auto g = generate(p);
  auto report = adversarial_probe(g, by_layer(g));
  CHECK(report.status == ProbeStatus::DistinctTrace);
  CHECK(report.stages.size() == 1);
}

TEST_CASE("probe witnesses re-verify from scratch") {
  LowerBoundParams p;
  p.r = 2;
  p.n = 1000;
  p.delta = 0.1;
  p.epsilon = 0.01;
  p.seed = 0;
  auto g = generate(p);
  EdgePartition single(g.graph, std::vector<std::uint32_t>(g.graph.edge_count(), 0), 1);
  auto report = adversarial_probe(g, single);
  REQUIRE(report.status == ProbeStatus::Witness);
  REQUIRE(report.witness);
  REQUIRE(report.check);
  CHECK(report.check->confirmed);
  recheck_witness(single, *report.witness);
  CHECK(confirm_spread_witness(single, *report.witness).confirmed);
}

TEST_CASE("probe rejects a partition over another graph") {
  LowerBoundParams p;
  p.r = 1;
  p.n = 50;
  p.epsilon = 0.05;
  auto g = generate(p);
  EdgePartition other(oracle::triangle(), {0, 0, 0}, 1);
  CHECK_THROWS_AS(adversarial_probe(g, other), Error);
}

TEST_CASE("random_parts is seeded") {
  auto a = random_parts(1000, 3, 7), b = random_parts(1000, 3, 7), c = random_parts(1000, 3, 8);
  CHECK(a == b);
  CHECK(a != c);
  std::vector<int> counts(3, 0);
  for (auto x : a) ++counts[x];
  for (int n : counts) CHECK(std::abs(n - 333) < 60);
}
