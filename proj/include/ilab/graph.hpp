#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace ilab {

using Vertex = std::uint32_t;
using EdgeId = std::size_t;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct Incidence {
  Vertex neighbour = 0;
  EdgeId edge = 0;
};

// Undirected simple graph on dense ids 0..n-1. Edges are stored as (min, max)
// pairs in lexicographic order; EdgeId is the position in that order.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t vertex_count);

  // Validates and canonicalizes. Throws InvalidEdgeError on self-loops,
  // out-of-range endpoints and duplicates.
  static Graph from_edges(std::size_t vertex_count, std::vector<Edge> edges);

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  bool empty() const noexcept { return edges_.empty(); }

  std::span<const Edge> edges() const noexcept { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_.at(e); }

  // Incident edges of v, sorted by neighbour id.
  std::span<const Incidence> incident(Vertex v) const;
  std::size_t degree(Vertex v) const;
  std::size_t max_degree() const;

  std::optional<EdgeId> find_edge(Vertex a, Vertex b) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  void build_adjacency();

  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_;
  std::vector<Incidence> incidences_;
};

struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> original;  // new id -> id in the parent graph
};

// Subgraph on the full vertex set keeping a subset of the edges.
struct EdgeSubgraph {
  Graph graph;
  std::vector<EdgeId> source;  // edge id in subgraph -> edge id in parent
};

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);
EdgeSubgraph edge_subgraph(const Graph& g, std::span<const EdgeId> edges);

// nullopt means infinite (disconnected). 0 for graphs with at most one vertex.
std::optional<std::size_t> diameter(const Graph& g);

bool is_connected(const Graph& g);
bool is_forest(const Graph& g);

// Component index per vertex; isolated vertices get their own component.
std::vector<std::uint32_t> connected_components(const Graph& g, std::size_t* count = nullptr);

struct EdgePartition {
  Graph graph;
  std::vector<std::uint32_t> part_of;  // aligned with graph.edges()
  std::size_t part_count = 0;

  EdgePartition() = default;
  // Throws if part_of does not cover every edge or an index is >= part_count.
  EdgePartition(Graph g, std::vector<std::uint32_t> parts, std::size_t count);

  std::vector<EdgeId> part_edges(std::uint32_t part) const;
  EdgeSubgraph part_graph(std::uint32_t part) const;
};

// Bipartite graph with explicit, ordered parts. Local ids are positions in
// the part lists; labels carry vertex ids of whatever graph this came from.
struct BiEdge {
  std::uint32_t left = 0;
  std::uint32_t right = 0;

  friend auto operator<=>(const BiEdge&, const BiEdge&) = default;
};

class BipartiteGraph;

struct BipartiteRestriction;

class BipartiteGraph {
 public:
  BipartiteGraph() = default;

  static BipartiteGraph from_edges(std::size_t left, std::size_t right, std::vector<BiEdge> edges);
  static BipartiteGraph from_edges(std::vector<Vertex> left_labels, std::vector<Vertex> right_labels,
                                   std::vector<BiEdge> edges);

  std::size_t left_size() const noexcept { return left_labels_.size(); }
  std::size_t right_size() const noexcept { return right_labels_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  bool balanced() const noexcept { return left_size() == right_size(); }

  std::span<const BiEdge> edges() const noexcept { return edges_; }
  std::span<const Vertex> left_labels() const noexcept { return left_labels_; }
  std::span<const Vertex> right_labels() const noexcept { return right_labels_; }

  // Incidences of a left vertex list right-side neighbours and vice versa.
  std::span<const Incidence> left_incident(std::uint32_t l) const;
  std::span<const Incidence> right_incident(std::uint32_t r) const;
  std::size_t left_degree(std::uint32_t l) const { return left_incident(l).size(); }
  std::size_t right_degree(std::uint32_t r) const { return right_incident(r).size(); }

  // |E| / (|left| * |right|); 0 when a part is empty.
  double density() const noexcept;

  // Left vertices become 0..L-1, right vertices L..L+R-1; edge order is kept.
  Graph to_graph() const;

  // Both subsets must be sorted local ids. Labels are carried over.
  BipartiteRestriction restrict_to(std::span<const std::uint32_t> left,
                                   std::span<const std::uint32_t> right) const;
  // Same parts, keeps only the listed edges (ascending ids).
  BipartiteRestriction with_edges(std::span<const EdgeId> keep) const;

 private:
  void build_adjacency();

  std::vector<Vertex> left_labels_;
  std::vector<Vertex> right_labels_;
  std::vector<BiEdge> edges_;
  std::vector<std::size_t> left_offsets_;
  std::vector<Incidence> left_inc_;
  std::vector<std::size_t> right_offsets_;
  std::vector<Incidence> right_inc_;
};

struct BipartiteRestriction {
  BipartiteGraph graph;
  std::vector<EdgeId> source;  // edge id in restriction -> edge id in parent
};

// Edges between a left subset and a right subset, given as membership masks.
std::size_t count_edges_between(const BipartiteGraph& b, const std::vector<char>& left_in,
                                const std::vector<char>& right_in);

}  // namespace ilab
