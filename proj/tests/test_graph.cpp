#include <algorithm>
#include <string>

#include "doctest.h"
#include "ilab/error.hpp"
#include "ilab/graph.hpp"
#include "ilab/graph_io.hpp"
#include "oracles.hpp"

using namespace ilab;

TEST_CASE("edges are canonicalised and validated") {
  auto g = Graph::from_edges(4, {{3, 1}, {0, 2}, {1, 0}});
  REQUIRE(g.edge_count() == 3);
  CHECK(g.edge(0) == Edge{0, 1});
  CHECK(g.edge(1) == Edge{0, 2});
  CHECK(g.edge(2) == Edge{1, 3});
  CHECK(g.find_edge(3, 1) == EdgeId{2});
  CHECK_FALSE(g.find_edge(2, 3));
  CHECK(g.max_degree() == 2);

  CHECK_THROWS_AS(Graph::from_edges(3, {{1, 1}}), InvalidEdgeError);
  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 3}}), InvalidEdgeError);
  try {
    Graph::from_edges(3, {{0, 1}, {0, 2}, {1, 0}});
    FAIL("duplicate accepted");
  } catch (const InvalidEdgeError& e) {
    CHECK(e.index() == 2);
  }
}

TEST_CASE("induced subgraphs") {
  auto tri = oracle::triangle();
  std::vector<Vertex> s{0, 1};
  auto sub = induced_subgraph(tri, s);
  CHECK(sub.graph.vertex_count() == 2);
  CHECK(sub.graph.edge_count() == 1);

  auto k4 = oracle::complete(4);
  std::vector<Vertex> all{0, 1, 2, 3};
  CHECK(induced_subgraph(k4, all).graph == k4);
  std::vector<Vertex> three{0, 1, 2};
  CHECK(induced_subgraph(k4, three).graph == tri);

  std::vector<Vertex> odd{1, 3};
  auto r = induced_subgraph(k4, odd);
  CHECK(r.original == std::vector<Vertex>{1, 3});
}

TEST_CASE("induced edge count is monotone in the vertex set") {
  ilab::SplitMix64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    auto g = oracle::gnp(12, 0.4, 100 + trial);
    std::vector<Vertex> s, t;
    for (Vertex v = 0; v < 12; ++v) {
      bool in_s = rng.uniform() < 0.4;
      if (in_s) s.push_back(v);
      if (in_s || rng.uniform() < 0.5) t.push_back(v);
    }
    auto es = induced_subgraph(g, s).graph.edge_count();
    auto et = induced_subgraph(g, t).graph.edge_count();
    CHECK(es <= et);
    CHECK(et <= g.edge_count());
  }
}

TEST_CASE("diameter") {
  CHECK(diameter(oracle::path(3)) == std::size_t{2});
  CHECK_FALSE(diameter(Graph::from_edges(4, {{0, 1}, {2, 3}})));
  CHECK(diameter(oracle::star(5)) == std::size_t{2});
  CHECK(diameter(Graph(1)) == std::size_t{0});
  CHECK(diameter(oracle::cycle(7)) == std::size_t{3});
}

TEST_CASE("diameter is invariant under relabelling") {
  for (int trial = 0; trial < 30; ++trial) {
    auto g = oracle::gnp(10, 0.3, 500 + trial);
    std::vector<Vertex> perm(10);
    std::iota(perm.begin(), perm.end(), 0);
    ilab::SplitMix64 rng(trial);
    rng.shuffle(perm);
    std::vector<Edge> relabelled;
    for (const auto& e : g.edges()) relabelled.push_back({perm[e.u], perm[e.v]});
    CHECK(diameter(g) == diameter(Graph::from_edges(10, relabelled)));
  }
}

TEST_CASE("components and forests") {
  auto g = Graph::from_edges(5, {{0, 1}, {2, 3}});
  std::size_t count = 0;
  auto comp = connected_components(g, &count);
  CHECK(count == 3);
  CHECK(comp[0] == comp[1]);
  CHECK(comp[2] == comp[3]);
  CHECK(comp[4] != comp[0]);
  CHECK_FALSE(is_connected(g));
  CHECK(is_forest(g));
  CHECK_FALSE(is_forest(oracle::triangle()));
  CHECK(is_connected(oracle::triangle()));
}

TEST_CASE("edge partitions") {
  auto tri = oracle::triangle();
  EdgePartition p(tri, {0, 1, 0}, 2);
  CHECK(p.part_edges(0) == std::vector<EdgeId>{0, 2});
  auto sub = p.part_graph(1);
  CHECK(sub.graph.edge_count() == 1);
  CHECK(sub.source == std::vector<EdgeId>{1});
  CHECK_THROWS_AS(EdgePartition(tri, {0, 2, 0}, 2), Error);
  CHECK_THROWS_AS(EdgePartition(tri, {0, 1}, 2), Error);
}

TEST_CASE("bipartite graphs") {
  auto b = BipartiteGraph::from_edges(2, 3, {{1, 2}, {0, 0}, {0, 2}});
  CHECK(b.edge_count() == 3);
  CHECK(b.edges()[0] == BiEdge{0, 0});
  CHECK(b.left_degree(0) == 2);
  CHECK(b.right_degree(2) == 2);
  CHECK(b.density() == doctest::Approx(0.5));
  CHECK_FALSE(b.balanced());
  auto g = b.to_graph();
  CHECK(g.vertex_count() == 5);
  CHECK(g.find_edge(1, 4));
  std::vector<std::uint32_t> l{0}, r{0, 2};
  auto res = b.restrict_to(l, r);
  CHECK(res.graph.edge_count() == 2);
  CHECK(res.source == std::vector<EdgeId>{0, 1});
  // Right labels start after the left part.
  CHECK(res.graph.right_labels()[1] == 4);
  CHECK(count_edges_between(b, {1, 1}, {0, 0, 1}) == 2);
  CHECK_THROWS(BipartiteGraph::from_edges(2, 2, {{0, 2}}));
}

TEST_CASE("text format") {
  auto p3 = parse_graph("3 2\n0 1\n1 2");
  CHECK(p3 == oracle::path(3));
  auto single = parse_graph("1 0");
  CHECK(single.vertex_count() == 1);
  CHECK(single.empty());
  CHECK(parse_graph("# comment\n\n3 1\n# another\n2 0\n").edge_count() == 1);

  try {
    parse_graph("3 1\n0 0");
    FAIL("self-loop accepted");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(parse_graph("3 2\n0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("3 1\n0 x\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("3 1\n0 1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_graph(""), ParseError);
  CHECK_THROWS_AS(parse_graph("{\"n\": 2}"), Error);
}

TEST_CASE("graph formats round-trip") {
  for (int trial = 0; trial < 40; ++trial) {
    auto g = oracle::gnp(1 + trial % 17, 0.35, 900 + trial);
    auto text = serialize_graph(g);
    CHECK(parse_graph(text) == g);
    CHECK(serialize_graph(parse_graph(text)) == text);
    auto json = serialize_graph_json(g);
    CHECK(parse_graph(json) == g);
    CHECK(serialize_graph_json(parse_graph(json)) == json);
  }
}

TEST_CASE("colouring and partition formats round-trip") {
  auto g = oracle::gnp(9, 0.5, 3);
  std::vector<Colour> cols;
  for (EdgeId e = 0; e < g.edge_count(); ++e) cols.push_back(static_cast<Colour>(e * 7 % 5) - 2);
  EdgeColouring c(g, cols);
  auto back = parse_colouring(serialize_colouring(c));
  CHECK(back.graph == g);
  CHECK(back.colours == cols);
  CHECK(parse_colouring(serialize_colouring_json(c)).colours == cols);

  std::vector<std::uint32_t> parts;
  for (EdgeId e = 0; e < g.edge_count(); ++e) parts.push_back(e % 3);
  EdgePartition p(g, parts, 3);
  auto pb = parse_partition(serialize_partition(p));
  CHECK(pb.part_of == parts);
  CHECK(pb.part_count == 3);
  CHECK(parse_partition(serialize_partition_json(p)).part_of == parts);
  CHECK_THROWS_AS(parse_partition("2 1 1\n0 1 1\n"), Error);
}

TEST_CASE("colouring text follows the file's edge order") {
  auto c = parse_colouring("3 2\n2 1 5\n0 1 4\n");
  REQUIRE(c.graph.edge_count() == 2);
  CHECK(c.graph.edge(0) == Edge{0, 1});
  CHECK(c[0] == 4);
  CHECK(c[1] == 5);
}

TEST_CASE("file helpers report I/O errors") {
  try {
    read_file("/nonexistent/graph.txt");
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Io);
  }
}
