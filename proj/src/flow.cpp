#include "ilab/flow.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace ilab {

MaxFlow::MaxFlow(std::size_t nodes) : out_(nodes), level_(nodes), next_(nodes) {}

std::size_t MaxFlow::add_arc(std::size_t from, std::size_t to, std::int64_t capacity) {
  std::size_t id = arcs_.size();
  arcs_.push_back({to, capacity});
  original_.push_back(capacity);
  out_[from].push_back(id);
  arcs_.push_back({from, 0});
  original_.push_back(0);
  out_[to].push_back(id + 1);
  return id;
}

bool MaxFlow::bfs(std::size_t s, std::size_t t) {
  std::fill(level_.begin(), level_.end(), -1);
  std::queue<std::size_t> q;
  level_[s] = 0;
  q.push(s);
  while (!q.empty()) {
    std::size_t v = q.front();
    q.pop();
    for (std::size_t id : out_[v]) {
      const Arc& a = arcs_[id];
      if (a.cap > 0 && level_[a.to] < 0) {
        level_[a.to] = level_[v] + 1;
        q.push(a.to);
      }
    }
  }
  return level_[t] >= 0;
}

std::int64_t MaxFlow::dfs(std::size_t v, std::size_t t, std::int64_t pushed) {
  if (v == t) return pushed;
  for (; next_[v] < out_[v].size(); ++next_[v]) {
    std::size_t id = out_[v][next_[v]];
    Arc& a = arcs_[id];
    if (a.cap <= 0 || level_[a.to] != level_[v] + 1) continue;
    std::int64_t got = dfs(a.to, t, std::min(pushed, a.cap));
    if (got > 0) {
      a.cap -= got;
      arcs_[id ^ 1].cap += got;
      return got;
    }
  }
  return 0;
}

std::int64_t MaxFlow::run(std::size_t source, std::size_t sink) {
  source_ = source;
  std::int64_t total = 0;
  while (bfs(source, sink)) {
    std::fill(next_.begin(), next_.end(), 0);
    while (std::int64_t f = dfs(source, sink, std::numeric_limits<std::int64_t>::max())) total += f;
  }
  return total;
}

std::int64_t MaxFlow::flow_on(std::size_t arc) const { return original_[arc] - arcs_[arc].cap; }

std::vector<char> MaxFlow::source_side() const {
  std::vector<char> seen(out_.size(), 0);
  std::vector<std::size_t> stack{source_};
  seen[source_] = 1;
  while (!stack.empty()) {
    std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t id : out_[v]) {
      const Arc& a = arcs_[id];
      if (a.cap > 0 && !seen[a.to]) {
        seen[a.to] = 1;
        stack.push_back(a.to);
      }
    }
  }
  return seen;
}

std::vector<std::int64_t> maximum_matching(const BipartiteGraph& b) {
  const std::size_t L = b.left_size(), R = b.right_size();
  std::vector<std::int64_t> match_l(L, -1), match_r(R, -1);
  std::vector<int> dist(L);
  constexpr int inf = std::numeric_limits<int>::max();

  auto bfs = [&] {
    std::queue<std::size_t> q;
    bool found = false;
    for (std::size_t l = 0; l < L; ++l) {
      if (match_l[l] < 0) {
        dist[l] = 0;
        q.push(l);
      } else {
        dist[l] = inf;
      }
    }
    while (!q.empty()) {
      std::size_t l = q.front();
      q.pop();
      for (const auto& inc : b.left_incident(static_cast<std::uint32_t>(l))) {
        std::int64_t m = match_r[inc.neighbour];
        if (m < 0) {
          found = true;
        } else if (dist[static_cast<std::size_t>(m)] == inf) {
          dist[static_cast<std::size_t>(m)] = dist[l] + 1;
          q.push(static_cast<std::size_t>(m));
        }
      }
    }
    return found;
  };

  auto dfs = [&](auto&& self, std::size_t l) -> bool {
    for (const auto& inc : b.left_incident(static_cast<std::uint32_t>(l))) {
      std::int64_t m = match_r[inc.neighbour];
      if (m < 0 || (dist[static_cast<std::size_t>(m)] == dist[l] + 1 && self(self, static_cast<std::size_t>(m)))) {
        match_l[l] = inc.neighbour;
        match_r[inc.neighbour] = static_cast<std::int64_t>(l);
        return true;
      }
    }
    dist[l] = inf;
    return false;
  };

  while (bfs()) {
    for (std::size_t l = 0; l < L; ++l) {
      if (match_l[l] < 0) dfs(dfs, l);
    }
  }
  return match_l;
}

}  // namespace ilab
