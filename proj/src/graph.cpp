#include "ilab/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>

#include "ilab/error.hpp"

namespace ilab {

namespace {

constexpr std::uint32_t kUnvisited = UINT32_MAX;

std::string edge_text(Vertex a, Vertex b) {
  return "(" + std::to_string(a) + ", " + std::to_string(b) + ")";
}

}  // namespace

Graph::Graph(std::size_t vertex_count) : n_(vertex_count) { build_adjacency(); }

Graph Graph::from_edges(std::size_t vertex_count, std::vector<Edge> edges) {
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto& e = edges[i];
    if (e.u == e.v) {
      throw InvalidEdgeError(i, "self-loop at vertex " + std::to_string(e.u));
    }
    if (e.u >= vertex_count || e.v >= vertex_count) {
      throw InvalidEdgeError(i, "endpoint out of range in edge " + edge_text(e.u, e.v) +
                                    " for " + std::to_string(vertex_count) + " vertices");
    }
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::vector<std::size_t> order(edges.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return edges[a] < edges[b]; });
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (edges[order[i]] == edges[order[i - 1]]) {
      std::size_t later = std::max(order[i], order[i - 1]);
      throw InvalidEdgeError(later, "duplicate edge " + edge_text(edges[later].u, edges[later].v));
    }
  }
  Graph g;
  g.n_ = vertex_count;
  g.edges_.reserve(edges.size());
  for (std::size_t i : order) g.edges_.push_back(edges[i]);
  g.build_adjacency();
  return g;
}

void Graph::build_adjacency() {
  offsets_.assign(n_ + 1, 0);
  for (const auto& e : edges_) {
    ++offsets_[e.u + 1];
    ++offsets_[e.v + 1];
  }
  for (std::size_t v = 0; v < n_; ++v) offsets_[v + 1] += offsets_[v];
  incidences_.assign(2 * edges_.size(), {});
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (EdgeId id = 0; id < edges_.size(); ++id) {
    const auto& e = edges_[id];
    incidences_[fill[e.u]++] = {e.v, id};
    incidences_[fill[e.v]++] = {e.u, id};
  }
  for (std::size_t v = 0; v < n_; ++v) {
    std::sort(incidences_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]),
              incidences_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]),
              [](const Incidence& a, const Incidence& b) { return a.neighbour < b.neighbour; });
  }
}

std::span<const Incidence> Graph::incident(Vertex v) const {
  if (v >= n_) throw Error(ErrorCode::InvalidArgument, "vertex " + std::to_string(v) + " out of range");
  return {incidences_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
}

std::size_t Graph::degree(Vertex v) const { return incident(v).size(); }

std::size_t Graph::max_degree() const {
  std::size_t best = 0;
  for (std::size_t v = 0; v < n_; ++v) best = std::max(best, offsets_[v + 1] - offsets_[v]);
  return best;
}

std::optional<EdgeId> Graph::find_edge(Vertex a, Vertex b) const {
  if (a >= n_ || b >= n_ || a == b) return std::nullopt;
  auto inc = incident(a);
  auto it = std::lower_bound(inc.begin(), inc.end(), b,
                             [](const Incidence& x, Vertex key) { return x.neighbour < key; });
  if (it != inc.end() && it->neighbour == b) return it->edge;
  return std::nullopt;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<Vertex> original(vertices.begin(), vertices.end());
  std::sort(original.begin(), original.end());
  original.erase(std::unique(original.begin(), original.end()), original.end());
  std::vector<std::uint32_t> index(g.vertex_count(), kUnvisited);
  for (std::size_t i = 0; i < original.size(); ++i) {
    if (original[i] >= g.vertex_count()) {
      throw Error(ErrorCode::InvalidArgument,
                  "vertex " + std::to_string(original[i]) + " out of range for induced subgraph");
    }
    index[original[i]] = static_cast<std::uint32_t>(i);
  }
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    if (index[e.u] != kUnvisited && index[e.v] != kUnvisited) edges.push_back({index[e.u], index[e.v]});
  }
  return {Graph::from_edges(original.size(), std::move(edges)), std::move(original)};
}

EdgeSubgraph edge_subgraph(const Graph& g, std::span<const EdgeId> edges) {
  std::vector<EdgeId> source(edges.begin(), edges.end());
  std::sort(source.begin(), source.end());
  source.erase(std::unique(source.begin(), source.end()), source.end());
  std::vector<Edge> kept;
  kept.reserve(source.size());
  for (EdgeId id : source) kept.push_back(g.edge(id));
  return {Graph::from_edges(g.vertex_count(), std::move(kept)), std::move(source)};
}

std::optional<std::size_t> diameter(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n <= 1) return 0;
  std::size_t best = 0;
  std::vector<std::uint32_t> dist(n);
  std::queue<Vertex> queue;
  for (Vertex s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), kUnvisited);
    dist[s] = 0;
    queue.push(s);
    std::size_t reached = 1;
    while (!queue.empty()) {
      Vertex x = queue.front();
      queue.pop();
      for (const auto& inc : g.incident(x)) {
        if (dist[inc.neighbour] == kUnvisited) {
          dist[inc.neighbour] = dist[x] + 1;
          best = std::max<std::size_t>(best, dist[inc.neighbour]);
          ++reached;
          queue.push(inc.neighbour);
        }
      }
    }
    if (reached != n) return std::nullopt;
  }
  return best;
}

std::vector<std::uint32_t> connected_components(const Graph& g, std::size_t* count) {
  std::vector<std::uint32_t> comp(g.vertex_count(), kUnvisited);
  std::uint32_t next = 0;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    if (comp[s] != kUnvisited) continue;
    comp[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      for (const auto& inc : g.incident(x)) {
        if (comp[inc.neighbour] == kUnvisited) {
          comp[inc.neighbour] = next;
          stack.push_back(inc.neighbour);
        }
      }
    }
    ++next;
  }
  if (count) *count = next;
  return comp;
}

bool is_connected(const Graph& g) {
  std::size_t count = 0;
  connected_components(g, &count);
  return count <= 1;
}

bool is_forest(const Graph& g) {
  std::size_t count = 0;
  connected_components(g, &count);
  // A forest on n vertices with c components has exactly n - c edges.
  return g.edge_count() + count == g.vertex_count();
}

EdgePartition::EdgePartition(Graph g, std::vector<std::uint32_t> parts, std::size_t count)
    : graph(std::move(g)), part_of(std::move(parts)), part_count(count) {
  if (part_of.size() != graph.edge_count()) {
    throw Error(ErrorCode::InvalidArgument, "partition assigns " + std::to_string(part_of.size()) +
                                                " edges but the graph has " +
                                                std::to_string(graph.edge_count()));
  }
  for (std::size_t i = 0; i < part_of.size(); ++i) {
    if (part_of[i] >= part_count) {
      throw Error(ErrorCode::InvalidArgument, "edge " + std::to_string(i) + " has part index " +
                                                  std::to_string(part_of[i]) + " >= part count " +
                                                  std::to_string(part_count));
    }
  }
}

std::vector<EdgeId> EdgePartition::part_edges(std::uint32_t part) const {
  std::vector<EdgeId> ids;
  for (EdgeId e = 0; e < part_of.size(); ++e) {
    if (part_of[e] == part) ids.push_back(e);
  }
  return ids;
}

EdgeSubgraph EdgePartition::part_graph(std::uint32_t part) const {
  auto ids = part_edges(part);
  return edge_subgraph(graph, ids);
}

// ---------------------------------------------------------------------------
// BipartiteGraph

BipartiteGraph BipartiteGraph::from_edges(std::size_t left, std::size_t right, std::vector<BiEdge> edges) {
  std::vector<Vertex> l(left), r(right);
  std::iota(l.begin(), l.end(), Vertex{0});
  std::iota(r.begin(), r.end(), static_cast<Vertex>(left));
  return from_edges(std::move(l), std::move(r), std::move(edges));
}

BipartiteGraph BipartiteGraph::from_edges(std::vector<Vertex> left_labels, std::vector<Vertex> right_labels,
                                          std::vector<BiEdge> edges) {
  {
    std::vector<Vertex> all(left_labels);
    all.insert(all.end(), right_labels.begin(), right_labels.end());
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
      throw Error(ErrorCode::InvalidArgument, "bipartite parts must have distinct, disjoint labels");
    }
  }
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (edges[i].left >= left_labels.size() || edges[i].right >= right_labels.size()) {
      throw InvalidEdgeError(i, "bipartite edge endpoint out of range");
    }
  }
  std::sort(edges.begin(), edges.end());
  if (auto it = std::adjacent_find(edges.begin(), edges.end()); it != edges.end()) {
    throw InvalidEdgeError(static_cast<std::size_t>(it - edges.begin()), "duplicate bipartite edge");
  }
  BipartiteGraph b;
  b.left_labels_ = std::move(left_labels);
  b.right_labels_ = std::move(right_labels);
  b.edges_ = std::move(edges);
  b.build_adjacency();
  return b;
}

void BipartiteGraph::build_adjacency() {
  const std::size_t L = left_size(), R = right_size();
  left_offsets_.assign(L + 1, 0);
  right_offsets_.assign(R + 1, 0);
  for (const auto& e : edges_) {
    ++left_offsets_[e.left + 1];
    ++right_offsets_[e.right + 1];
  }
  for (std::size_t i = 0; i < L; ++i) left_offsets_[i + 1] += left_offsets_[i];
  for (std::size_t i = 0; i < R; ++i) right_offsets_[i + 1] += right_offsets_[i];
  left_inc_.assign(edges_.size(), {});
  right_inc_.assign(edges_.size(), {});
  std::vector<std::size_t> lf(left_offsets_.begin(), left_offsets_.end() - 1);
  std::vector<std::size_t> rf(right_offsets_.begin(), right_offsets_.end() - 1);
  // Edges are sorted by (left, right), so left incidences come out sorted and
  // right incidences are sorted by left id as well.
  for (EdgeId id = 0; id < edges_.size(); ++id) {
    const auto& e = edges_[id];
    left_inc_[lf[e.left]++] = {e.right, id};
    right_inc_[rf[e.right]++] = {e.left, id};
  }
}

std::span<const Incidence> BipartiteGraph::left_incident(std::uint32_t l) const {
  if (l >= left_size()) throw Error(ErrorCode::InvalidArgument, "left vertex out of range");
  return {left_inc_.data() + left_offsets_[l], left_offsets_[l + 1] - left_offsets_[l]};
}

std::span<const Incidence> BipartiteGraph::right_incident(std::uint32_t r) const {
  if (r >= right_size()) throw Error(ErrorCode::InvalidArgument, "right vertex out of range");
  return {right_inc_.data() + right_offsets_[r], right_offsets_[r + 1] - right_offsets_[r]};
}

double BipartiteGraph::density() const noexcept {
  if (left_size() == 0 || right_size() == 0) return 0.0;
  return static_cast<double>(edge_count()) /
         (static_cast<double>(left_size()) * static_cast<double>(right_size()));
}

Graph BipartiteGraph::to_graph() const {
  std::vector<Edge> edges;
  edges.reserve(edges_.size());
  const auto L = static_cast<Vertex>(left_size());
  for (const auto& e : edges_) edges.push_back({e.left, L + e.right});
  return Graph::from_edges(left_size() + right_size(), std::move(edges));
}

BipartiteRestriction BipartiteGraph::restrict_to(std::span<const std::uint32_t> left,
                                                 std::span<const std::uint32_t> right) const {
  std::vector<std::uint32_t> lmap(left_size(), kUnvisited), rmap(right_size(), kUnvisited);
  std::vector<Vertex> llab, rlab;
  for (std::size_t i = 0; i < left.size(); ++i) {
    if (i > 0 && left[i] <= left[i - 1]) throw Error(ErrorCode::InvalidArgument, "left subset must be sorted");
    lmap.at(left[i]) = static_cast<std::uint32_t>(i);
    llab.push_back(left_labels_[left[i]]);
  }
  for (std::size_t i = 0; i < right.size(); ++i) {
    if (i > 0 && right[i] <= right[i - 1]) throw Error(ErrorCode::InvalidArgument, "right subset must be sorted");
    rmap.at(right[i]) = static_cast<std::uint32_t>(i);
    rlab.push_back(right_labels_[right[i]]);
  }
  std::vector<BiEdge> edges;
  std::vector<EdgeId> source;
  for (EdgeId id = 0; id < edges_.size(); ++id) {
    const auto& e = edges_[id];
    if (lmap[e.left] != kUnvisited && rmap[e.right] != kUnvisited) {
      edges.push_back({lmap[e.left], rmap[e.right]});
      source.push_back(id);
    }
  }
  // Monotone relabelling keeps the edge order, so `source` stays aligned.
  return {from_edges(std::move(llab), std::move(rlab), std::move(edges)), std::move(source)};
}

BipartiteRestriction BipartiteGraph::with_edges(std::span<const EdgeId> keep) const {
  std::vector<EdgeId> source(keep.begin(), keep.end());
  std::sort(source.begin(), source.end());
  source.erase(std::unique(source.begin(), source.end()), source.end());
  std::vector<BiEdge> edges;
  edges.reserve(source.size());
  for (EdgeId id : source) edges.push_back(edges_.at(id));
  return {from_edges(left_labels_, right_labels_, std::move(edges)), std::move(source)};
}

std::size_t count_edges_between(const BipartiteGraph& b, const std::vector<char>& left_in,
                                const std::vector<char>& right_in) {
  std::size_t count = 0;
  for (const auto& e : b.edges()) {
    if (left_in[e.left] && right_in[e.right]) ++count;
  }
  return count;
}

}  // namespace ilab
