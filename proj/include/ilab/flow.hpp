#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "ilab/graph.hpp"

namespace ilab {

// Dinic's algorithm on an explicit residual network.
class MaxFlow {
 public:
  explicit MaxFlow(std::size_t nodes);

  // Returns the arc index, usable with flow_on().
  std::size_t add_arc(std::size_t from, std::size_t to, std::int64_t capacity);
  std::int64_t run(std::size_t source, std::size_t sink);

  std::int64_t flow_on(std::size_t arc) const;
  // After run(): nodes reachable from the source in the residual network.
  std::vector<char> source_side() const;

 private:
  struct Arc {
    std::size_t to;
    std::int64_t cap;
  };

  bool bfs(std::size_t s, std::size_t t);
  std::int64_t dfs(std::size_t v, std::size_t t, std::int64_t pushed);

  std::vector<Arc> arcs_;
  std::vector<std::vector<std::size_t>> out_;
  std::vector<std::int64_t> original_;
  std::vector<int> level_;
  std::vector<std::size_t> next_;
  std::size_t source_ = 0;
};

// Maximum matching of a bipartite graph (Hopcroft-Karp). Entry l is the
// matched right vertex of left vertex l, or -1.
std::vector<std::int64_t> maximum_matching(const BipartiteGraph& b);

}  // namespace ilab
