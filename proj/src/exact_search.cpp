#include "ilab/exact_search.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <climits>
#include <unordered_map>

#include "ilab/error.hpp"

namespace ilab {

const char* to_string(SearchOutcome outcome) {
  switch (outcome) {
    case SearchOutcome::Found: return "found";
    case SearchOutcome::None: return "none";
    case SearchOutcome::BudgetExhausted: return "budget-exhausted";
  }
  return "?";
}

const char* to_string(ThicknessOutcome outcome) {
  switch (outcome) {
    case ThicknessOutcome::Found: return "found";
    case ThicknessOutcome::ExceedsKMax: return "exceeds-kmax";
    case ThicknessOutcome::BudgetExhausted: return "budget-exhausted";
  }
  return "?";
}

namespace {

struct Exhausted {};

class Tracker {
 public:
  explicit Tracker(const SearchBudget& b)
      : limit_(b.node_limit),
        deadline_(std::chrono::steady_clock::now() +
                  std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                      std::chrono::duration<double>(b.time_limit_seconds))) {}

  void tick() {
    if (++nodes_ > limit_) throw Exhausted{};
    if ((nodes_ & 1023) == 0 && std::chrono::steady_clock::now() > deadline_) throw Exhausted{};
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  std::uint64_t limit_;
  std::chrono::steady_clock::time_point deadline_;
  std::uint64_t nodes_ = 0;
};

// Interval-colouring constraint model of one connected component.
// Variables: an interval start per vertex and a colour per edge, both over
// value indices 0..width-1. Constraints: each edge colour lies in both
// endpoint windows [s_v, s_v + deg(v) - 1]; edges at a vertex are a bijection
// onto its window.
class ComponentCsp {
 public:
  struct State {
    std::vector<std::uint64_t> dom;
    std::vector<int> s_lo, s_hi;
  };

  ComponentCsp(const Graph& g, const std::vector<Vertex>& verts, const std::vector<EdgeId>& edges, int width,
               int span_limit, Tracker& tracker)
      : width_(width), words_((width + 63) / 64), span_limit_(span_limit), tracker_(tracker) {
    std::unordered_map<Vertex, int> vindex;
    for (std::size_t i = 0; i < verts.size(); ++i) vindex[verts[i]] = static_cast<int>(i);
    inc_.resize(verts.size());
    global_edges_ = edges;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const auto& e = g.edge(edges[i]);
      inc_[vindex.at(e.u)].push_back(static_cast<int>(i));
      inc_[vindex.at(e.v)].push_back(static_cast<int>(i));
    }
  }

  int edge_count() const { return static_cast<int>(global_edges_.size()); }
  const std::vector<EdgeId>& global_edges() const { return global_edges_; }

  State initial() const {
    State st;
    st.dom.assign(static_cast<std::size_t>(edge_count()) * words_, 0);
    for (int e = 0; e < edge_count(); ++e) set_range(st, e, 0, width_ - 1);
    st.s_lo.assign(inc_.size(), 0);
    st.s_hi.resize(inc_.size());
    for (std::size_t v = 0; v < inc_.size(); ++v) st.s_hi[v] = width_ - static_cast<int>(inc_[v].size());
    return st;
  }

  void assign(State& st, int e, int val) const {
    std::uint64_t* w = word_ptr(st, e);
    std::fill(w, w + words_, 0);
    w[val / 64] |= std::uint64_t{1} << (val % 64);
  }

  void remove(State& st, int e, int val) const { word_ptr(st, e)[val / 64] &= ~(std::uint64_t{1} << (val % 64)); }

  int size(const State& st, int e) const {
    const std::uint64_t* w = word_ptr(st, e);
    int s = 0;
    for (int i = 0; i < words_; ++i) s += std::popcount(w[i]);
    return s;
  }

  int min_value(const State& st, int e) const {
    const std::uint64_t* w = word_ptr(st, e);
    for (int i = 0; i < words_; ++i) {
      if (w[i]) return i * 64 + std::countr_zero(w[i]);
    }
    return -1;
  }

  int max_value(const State& st, int e) const {
    const std::uint64_t* w = word_ptr(st, e);
    for (int i = words_ - 1; i >= 0; --i) {
      if (w[i]) return i * 64 + 63 - std::countl_zero(w[i]);
    }
    return -1;
  }

  bool has(const State& st, int e, int val) const {
    return (word_ptr(st, e)[val / 64] >> (val % 64)) & 1U;
  }

  // Keeps only [lo, hi]; returns true if anything was removed.
  bool restrict_range(State& st, int e, int lo, int hi) const {
    std::uint64_t* w = word_ptr(st, e);
    bool changed = false;
    for (int i = 0; i < words_; ++i) {
      std::uint64_t mask = range_mask(i, lo, hi);
      if (w[i] & ~mask) {
        w[i] &= mask;
        changed = true;
      }
    }
    return changed;
  }

  bool propagate(State& st) const {
    bool changed = true;
    std::vector<std::uint64_t> uni(static_cast<std::size_t>(words_));
    while (changed) {
      changed = false;
      if (span_limit_ > 0) {
        int amin = INT_MAX, amax = INT_MIN;
        for (int e = 0; e < edge_count(); ++e) {
          if (size(st, e) == 1) {
            int v = min_value(st, e);
            amin = std::min(amin, v);
            amax = std::max(amax, v);
          }
        }
        if (amin != INT_MAX) {
          if (amax - amin > span_limit_ - 1) return false;
          for (int e = 0; e < edge_count(); ++e) {
            if (restrict_range(st, e, amax - (span_limit_ - 1), amin + (span_limit_ - 1))) {
              changed = true;
              if (size(st, e) == 0) return false;
            }
          }
        }
      }
      for (std::size_t v = 0; v < inc_.size(); ++v) {
        const auto& inc = inc_[v];
        const int d = static_cast<int>(inc.size());
        int lo = st.s_lo[v], hi = st.s_hi[v];
        std::fill(uni.begin(), uni.end(), 0);
        for (int e : inc) {
          int mn = min_value(st, e);
          if (mn < 0) return false;
          lo = std::max(lo, mn - d + 1);
          hi = std::min(hi, max_value(st, e));
          const std::uint64_t* w = word_ptr(st, e);
          for (int i = 0; i < words_; ++i) uni[static_cast<std::size_t>(i)] |= w[i];
        }
        auto window_ok = [&](int s) {
          if (s < 0 || s + d > width_) return false;
          for (int i = 0; i < words_; ++i) {
            std::uint64_t mask = range_mask(i, s, s + d - 1);
            if ((uni[static_cast<std::size_t>(i)] & mask) != mask) return false;
          }
          for (int e : inc) {
            const std::uint64_t* w = word_ptr(st, e);
            bool any = false;
            for (int i = 0; i < words_ && !any; ++i) any = (w[i] & range_mask(i, s, s + d - 1)) != 0;
            if (!any) return false;
          }
          return true;
        };
        while (lo <= hi && !window_ok(lo)) ++lo;
        while (hi >= lo && !window_ok(hi)) --hi;
        if (lo > hi) return false;
        if (lo != st.s_lo[v] || hi != st.s_hi[v]) {
          st.s_lo[v] = lo;
          st.s_hi[v] = hi;
          changed = true;
        }
        for (int e : inc) {
          if (restrict_range(st, e, lo, hi + d - 1)) {
            changed = true;
            if (size(st, e) == 0) return false;
          }
        }
        for (int e : inc) {
          if (size(st, e) != 1) continue;
          int val = min_value(st, e);
          for (int f : inc) {
            if (f != e && has(st, f, val)) {
              remove(st, f, val);
              changed = true;
              if (size(st, f) == 0) return false;
            }
          }
        }
        if (lo == hi) {
          for (int c = lo; c < lo + d; ++c) {
            int count = 0, last = -1;
            for (int e : inc) {
              if (has(st, e, c)) {
                ++count;
                last = e;
              }
            }
            if (count == 0) return false;
            if (count == 1 && size(st, last) > 1) {
              assign(st, last, c);
              changed = true;
            }
          }
        }
      }
    }
    return true;
  }

  int choose(const State& st) const {
    int best = -1, best_size = INT_MAX;
    for (int e = 0; e < edge_count(); ++e) {
      int s = size(st, e);
      if (s > 1 && s < best_size) {
        best = e;
        best_size = s;
      }
    }
    return best;
  }

  // Depth-first search for the first solution in ascending value order.
  bool solve_first(State st, std::vector<int>& out) const {
    tracker_.tick();
    if (!propagate(st)) return false;
    int e = choose(st);
    if (e < 0) {
      out.resize(static_cast<std::size_t>(edge_count()));
      for (int i = 0; i < edge_count(); ++i) out[static_cast<std::size_t>(i)] = min_value(st, i);
      return true;
    }
    for (int val = min_value(st, e); val >= 0 && val <= max_value(st, e); ++val) {
      if (!has(st, e, val)) continue;
      State child = st;
      assign(child, e, val);
      if (solve_first(std::move(child), out)) return true;
    }
    return false;
  }

  // Branch and bound maximising the largest value; `best` is the best maximum
  // seen so far and is only improved strictly.
  void solve_max(State st, int& best, std::vector<int>& out) const {
    tracker_.tick();
    if (!propagate(st)) return;
    int ub = -1;
    for (int e = 0; e < edge_count(); ++e) ub = std::max(ub, max_value(st, e));
    if (ub <= best) return;
    int e = choose(st);
    if (e < 0) {
      best = ub;
      out.resize(static_cast<std::size_t>(edge_count()));
      for (int i = 0; i < edge_count(); ++i) out[static_cast<std::size_t>(i)] = min_value(st, i);
      return;
    }
    for (int val = max_value(st, e); val >= 0; --val) {
      if (!has(st, e, val)) continue;
      State child = st;
      assign(child, e, val);
      solve_max(std::move(child), best, out);
      if (best == width_ - 1) return;
    }
  }

 private:
  static std::uint64_t range_mask(int word, int lo, int hi) {
    int base = word * 64;
    int a = std::max(lo, base), b = std::min(hi, base + 63);
    if (a > b) return 0;
    int len = b - a + 1;
    std::uint64_t m = len == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << len) - 1);
    return m << (a - base);
  }

  void set_range(State& st, int e, int lo, int hi) const {
    std::uint64_t* w = word_ptr(st, e);
    for (int i = 0; i < words_; ++i) w[i] |= range_mask(i, lo, hi);
  }

  std::uint64_t* word_ptr(State& st, int e) const { return st.dom.data() + static_cast<std::size_t>(e) * words_; }
  const std::uint64_t* word_ptr(const State& st, int e) const {
    return st.dom.data() + static_cast<std::size_t>(e) * words_;
  }

  int width_;
  int words_;
  int span_limit_;
  Tracker& tracker_;
  std::vector<std::vector<int>> inc_;
  std::vector<EdgeId> global_edges_;
};

struct Component {
  std::vector<Vertex> vertices;
  std::vector<EdgeId> edges;
};

// Components that contain at least one edge, edges in ascending id order.
std::vector<Component> edge_components(const Graph& g) {
  std::size_t count = 0;
  auto comp = connected_components(g, &count);
  std::vector<Component> all(count);
  for (Vertex v = 0; v < g.vertex_count(); ++v) all[comp[v]].vertices.push_back(v);
  for (EdgeId e = 0; e < g.edge_count(); ++e) all[comp[g.edge(e).u]].edges.push_back(e);
  std::vector<Component> out;
  for (auto& c : all) {
    if (!c.edges.empty()) out.push_back(std::move(c));
  }
  return out;
}

void check_soundness(const EdgeColouring& c) {
  if (!verify(c).interval) throw Error(ErrorCode::Internal, "exact search produced a non-interval colouring");
}

bool has_odd_cycle(const Graph& g) {
  std::vector<int> side(g.vertex_count(), -1);
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      for (const auto& inc : g.incident(x)) {
        if (side[inc.neighbour] < 0) {
          side[inc.neighbour] = 1 - side[x];
          stack.push_back(inc.neighbour);
        } else if (side[inc.neighbour] == side[x]) {
          return true;
        }
      }
    }
  }
  return false;
}

}  // namespace

ColouringSearch find_interval_colouring(const Graph& g, const SearchBudget& budget) {
  ColouringSearch result;
  Tracker tracker(budget);
  const std::size_t palette = budget.palette_for(g);
  std::vector<Colour> colours(g.edge_count(), 0);
  try {
    for (const auto& comp : edge_components(g)) {
      const int m = static_cast<int>(std::min(palette, comp.edges.size()));
      if (m == 0) {
        result.outcome = SearchOutcome::None;
        result.nodes = tracker.nodes();
        return result;
      }
      const int width = 2 * m - 1;
      ComponentCsp csp(g, comp.vertices, comp.edges, width, m, tracker);
      auto st = csp.initial();
      csp.assign(st, 0, m - 1);
      std::vector<int> values;
      if (!csp.solve_first(std::move(st), values)) {
        result.outcome = SearchOutcome::None;
        result.nodes = tracker.nodes();
        return result;
      }
      for (std::size_t i = 0; i < values.size(); ++i) colours[comp.edges[i]] = values[i] - (m - 1);
    }
  } catch (const Exhausted&) {
    result.outcome = SearchOutcome::BudgetExhausted;
    result.nodes = tracker.nodes();
    return result;
  }
  result.outcome = SearchOutcome::Found;
  result.colouring = EdgeColouring(g, std::move(colours));
  result.nodes = tracker.nodes();
  check_soundness(*result.colouring);
  return result;
}

MaxColoursSearch max_colours(const Graph& g, const SearchBudget& budget) {
  MaxColoursSearch result;
  Tracker tracker(budget);
  const std::size_t palette = budget.palette_for(g);
  std::vector<Colour> colours(g.edge_count(), 0);
  Colour offset = 0;
  try {
    for (const auto& comp : edge_components(g)) {
      const int width = static_cast<int>(std::min(palette, comp.edges.size()));
      if (width == 0) {
        result.outcome = SearchOutcome::None;
        result.nodes = tracker.nodes();
        return result;
      }
      ComponentCsp csp(g, comp.vertices, comp.edges, width, 0, tracker);
      int best = -1;
      std::vector<int> values;
      // The pinned edge is the lowest-id edge of colour 0: edges before it
      // may not take 0, so each normalised colouring is visited once.
      for (int pin = 0; pin < csp.edge_count() && best < width - 1; ++pin) {
        auto st = csp.initial();
        csp.assign(st, pin, 0);
        for (int e = 0; e < pin; ++e) csp.remove(st, e, 0);
        csp.solve_max(std::move(st), best, values);
      }
      if (best < 0) {
        result.outcome = SearchOutcome::None;
        result.nodes = tracker.nodes();
        return result;
      }
      for (std::size_t i = 0; i < values.size(); ++i) colours[comp.edges[i]] = values[i] + offset;
      offset += best + 1;
      result.t += static_cast<std::size_t>(best + 1);
    }
  } catch (const Exhausted&) {
    result.outcome = SearchOutcome::BudgetExhausted;
    result.t = 0;
    result.nodes = tracker.nodes();
    return result;
  }
  result.outcome = SearchOutcome::Found;
  result.witness = EdgeColouring(g, std::move(colours));
  result.nodes = tracker.nodes();
  check_soundness(*result.witness);
  if (count_colours(*result.witness) != result.t) {
    throw Error(ErrorCode::Internal, "max_colours witness does not realise t");
  }
  return result;
}

namespace {

class ThicknessSearcher {
 public:
  ThicknessSearcher(const Graph& g, const SearchBudget& budget) : g_(g), budget_(budget), tracker_(budget) {}

  // 1 colourable, 0 not colourable; throws Exhausted.
  bool colourable(std::uint64_t mask) {
    if (auto it = memo_.find(mask); it != memo_.end()) return it->second;
    auto sub = edge_subgraph(g_, ids_of(mask));
    bool ok;
    if (is_forest(sub.graph)) {
      ok = true;
    } else if (sub.graph.max_degree() <= 2) {
      ok = !has_odd_cycle(sub.graph);
    } else {
      SearchBudget b = budget_;
      auto r = find_interval_colouring(sub.graph, b);
      if (r.outcome == SearchOutcome::BudgetExhausted) throw Exhausted{};
      ok = r.outcome == SearchOutcome::Found;
    }
    memo_.emplace(mask, ok);
    return ok;
  }

  std::vector<EdgeId> ids_of(std::uint64_t mask) const {
    std::vector<EdgeId> ids;
    for (EdgeId e = 0; e < g_.edge_count(); ++e) {
      if ((mask >> e) & 1U) ids.push_back(e);
    }
    return ids;
  }

  // Enumerates assignments using exactly k parts; fills `parts` on success.
  bool search(std::size_t k, std::vector<std::uint32_t>& parts) {
    parts.assign(g_.edge_count(), 0);
    masks_.assign(k, 0);
    return assign(0, 0, k, parts);
  }

 private:
  bool assign(std::size_t i, std::size_t used, std::size_t k, std::vector<std::uint32_t>& parts) {
    const std::size_t m = g_.edge_count();
    if (i == m) {
      if (used != k) return false;
      tracker_.tick();
      for (std::size_t p = 0; p < k; ++p) {
        if (!colourable(masks_[p])) return false;
      }
      return true;
    }
    if (used + (m - i) < k) return false;
    std::size_t top = std::min(used, k - 1);
    for (std::size_t p = 0; p <= top; ++p) {
      parts[i] = static_cast<std::uint32_t>(p);
      masks_[p] |= std::uint64_t{1} << i;
      bool ok = assign(i + 1, std::max(used, p + 1), k, parts);
      masks_[p] &= ~(std::uint64_t{1} << i);
      if (ok) return true;
    }
    return false;
  }

  const Graph& g_;
  SearchBudget budget_;
  Tracker tracker_;
  std::unordered_map<std::uint64_t, bool> memo_;
  std::vector<std::uint64_t> masks_;
};

}  // namespace

ThicknessSearch exact_thickness(const Graph& g, std::size_t k_max, const SearchBudget& budget) {
  if (k_max < 1) throw Error(ErrorCode::InvalidArgument, "k_max must be at least 1");
  if (g.edge_count() > 64) {
    throw Error(ErrorCode::InvalidArgument, "exact_thickness supports at most 64 edges");
  }
  ThicknessSearch out;
  if (g.edge_count() == 0) {
    out.outcome = ThicknessOutcome::Found;
    out.result = ThicknessResult{0, EdgePartition(g, {}, 0), {}, true};
    return out;
  }
  ThicknessSearcher searcher(g, budget);
  std::vector<std::uint32_t> parts;
  try {
    for (std::size_t k = 1; k <= k_max; ++k) {
      if (k > g.edge_count()) break;
      if (!searcher.search(k, parts)) continue;
      ThicknessResult res;
      res.theta = k;
      res.partition = EdgePartition(g, parts, k);
      for (std::uint32_t p = 0; p < k; ++p) {
        auto sub = res.partition.part_graph(p);
        auto r = find_interval_colouring(sub.graph, budget);
        if (r.outcome != SearchOutcome::Found) {
          if (sub.graph.max_degree() <= 2 || is_forest(sub.graph)) {
            throw Error(ErrorCode::Internal, "shortcut classified a non-colourable part as colourable");
          }
          throw Exhausted{};
        }
        res.per_part_colourings.push_back(std::move(*r.colouring));
      }
      out.outcome = ThicknessOutcome::Found;
      out.result = std::move(res);
      return out;
    }
  } catch (const Exhausted&) {
    out.outcome = ThicknessOutcome::BudgetExhausted;
    return out;
  }
  out.outcome = ThicknessOutcome::ExceedsKMax;
  return out;
}

PeelSequence peel_sequence(const Graph& g, const SearchBudget& budget) {
  auto theta_of = [&](const Graph& h) {
    auto r = exact_thickness(h, std::max<std::size_t>(1, h.edge_count()), budget);
    if (r.outcome != ThicknessOutcome::Found) {
      throw Error(ErrorCode::BudgetExhausted, "peel_sequence: thickness search exhausted its budget");
    }
    return r.result->theta;
  };
  PeelSequence seq;
  seq.initial_theta = theta_of(g);
  if (g.empty()) return seq;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    std::vector<Vertex> rest;
    for (Vertex x = v + 1; x < g.vertex_count(); ++x) rest.push_back(x);
    auto sub = induced_subgraph(g, rest);
    seq.steps.push_back({v, theta_of(sub.graph)});
    if (sub.graph.empty()) break;
  }
  return seq;
}

}  // namespace ilab
