#include "ilab/decompose.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <map>
#include <numeric>
#include <string>
#include <thread>

#include "ilab/error.hpp"
#include "ilab/flow.hpp"

namespace ilab {

void PipelineConfig::validate() const {
  if (!(delta > 0.0 && delta < 1.0)) throw Error(ErrorCode::InvalidArgument, "delta must lie in (0, 1)");
}

std::size_t k_from_density(double density, std::size_t n) {
  double raw = std::floor(density * static_cast<double>(n) / 100.0);
  return std::max<std::size_t>(1, static_cast<std::size_t>(raw));
}

BitSplit bit_split(const Graph& g) {
  BitSplit out;
  std::size_t s = 0;
  while ((std::size_t{1} << s) < g.vertex_count()) ++s;
  out.padded_vertices = std::size_t{1} << s;
  const std::size_t half = out.padded_vertices / 2;
  std::vector<std::vector<BiEdge>> edges(s);
  std::vector<std::vector<EdgeId>> sources(s);
  // Position of v within its side of layer i: v with bit i deleted.
  auto local = [](Vertex v, std::size_t i) {
    Vertex low = v & ((Vertex{1} << i) - 1);
    return static_cast<std::uint32_t>(((v >> (i + 1)) << i) | low);
  };
  for (EdgeId id = 0; id < g.edge_count(); ++id) {
    const auto& e = g.edge(id);
    auto i = static_cast<std::size_t>(std::countr_zero(e.u ^ e.v));
    Vertex l = ((e.u >> i) & 1U) ? e.v : e.u;
    Vertex r = l == e.u ? e.v : e.u;
    edges[i].push_back({local(l, i), local(r, i)});
    sources[i].push_back(id);
  }
  for (std::size_t i = 0; i < s; ++i) {
    std::vector<Vertex> left, right;
    left.reserve(half);
    right.reserve(half);
    for (Vertex v = 0; v < out.padded_vertices; ++v) (((v >> i) & 1U) ? right : left).push_back(v);
    // from_edges sorts edges by (left, right); keep sources aligned.
    std::vector<std::size_t> order(edges[i].size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return edges[i][a] < edges[i][b]; });
    std::vector<BiEdge> sorted;
    std::vector<EdgeId> src;
    for (std::size_t o : order) {
      sorted.push_back(edges[i][o]);
      src.push_back(sources[i][o]);
    }
    out.layers.push_back({i, BipartiteGraph::from_edges(std::move(left), std::move(right), std::move(sorted)),
                          std::move(src)});
  }
  return out;
}

KFactorWitness find_k_factor(const BipartiteGraph& b, std::size_t k) {
  if (!b.balanced()) throw Error(ErrorCode::InvalidArgument, "find_k_factor requires equal parts");
  const std::size_t n = b.left_size();
  if (k > n) throw Error(ErrorCode::InvalidArgument, "k exceeds the part size");
  KFactorWitness w;
  w.k = k;
  if (k == 0) {
    w.factor = b.with_edges({});
    return w;
  }
  const std::size_t source = 0, sink = 2 * n + 1;
  MaxFlow flow(2 * n + 2);
  const auto cap = static_cast<std::int64_t>(k);
  for (std::size_t l = 0; l < n; ++l) flow.add_arc(source, 1 + l, cap);
  std::vector<std::size_t> arc_of(b.edge_count());
  for (EdgeId id = 0; id < b.edge_count(); ++id) {
    const auto& e = b.edges()[id];
    arc_of[id] = flow.add_arc(1 + e.left, 1 + n + e.right, 1);
  }
  for (std::size_t r = 0; r < n; ++r) flow.add_arc(1 + n + r, sink, cap);
  std::int64_t value = flow.run(source, sink);
  if (value == cap * static_cast<std::int64_t>(n)) {
    std::vector<EdgeId> keep;
    for (EdgeId id = 0; id < b.edge_count(); ++id) {
      if (flow.flow_on(arc_of[id]) > 0) keep.push_back(id);
    }
    w.factor = b.with_edges(keep);
    return w;
  }
  auto side = flow.source_side();
  std::vector<char> xin(n, 0), yin(n, 0);
  for (std::uint32_t l = 0; l < n; ++l) {
    if (side[1 + l]) {
      w.x.push_back(l);
      xin[l] = 1;
    }
  }
  for (std::uint32_t r = 0; r < n; ++r) {
    if (!side[1 + n + r]) {
      w.y.push_back(r);
      yin[r] = 1;
    }
  }
  w.e_xy = count_edges_between(b, xin, yin);
  if (k * n + w.e_xy >= k * w.x.size() + k * w.y.size()) {
    throw Error(ErrorCode::Internal, "minimum cut did not yield a violating pair");
  }
  return w;
}

namespace {

struct Sides {
  // adj[0][p]: neighbours on side 1 of vertex p on side 0, and vice versa.
  std::vector<std::vector<std::uint32_t>> adj[2];
};

Sides sides_of(const BipartiteGraph& b) {
  Sides s;
  s.adj[0].resize(b.left_size());
  s.adj[1].resize(b.right_size());
  for (const auto& e : b.edges()) {
    s.adj[0][e.left].push_back(e.right);
    s.adj[1][e.right].push_back(e.left);
  }
  return s;
}

std::size_t edges_into(const std::vector<std::uint32_t>& nbrs, const std::vector<char>& in) {
  std::size_t c = 0;
  for (auto x : nbrs) c += static_cast<std::size_t>(in[x]);
  return c;
}

// The `keep` members of `from` (side `side`) with the most edges into `into`;
// ties go to the lower id. Result ascending.
std::vector<std::uint32_t> trim(const Sides& s, int side, const std::vector<std::uint32_t>& from,
                                const std::vector<char>& into, std::size_t keep) {
  std::vector<std::pair<std::size_t, std::uint32_t>> scored;
  for (auto v : from) scored.push_back({edges_into(s.adj[side][v], into), v});
  std::stable_sort(scored.begin(), scored.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
  std::vector<std::uint32_t> out;
  for (std::size_t i = 0; i < keep && i < scored.size(); ++i) out.push_back(scored[i].second);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<char> mask_of(const std::vector<std::uint32_t>& set, std::size_t size) {
  std::vector<char> m(size, 0);
  for (auto v : set) m[v] = 1;
  return m;
}

struct Candidate {
  std::vector<std::uint32_t> left, right;
  double density = 0.0;
  int escape = 0;
};

double restricted_density(const BipartiteGraph& b, const std::vector<std::uint32_t>& l,
                          const std::vector<std::uint32_t>& r) {
  if (l.empty() || r.empty()) return 0.0;
  auto e = count_edges_between(b, mask_of(l, b.left_size()), mask_of(r, b.right_size()));
  return static_cast<double>(e) / (static_cast<double>(l.size()) * static_cast<double>(r.size()));
}

// Greedy min-degree peeling on both sides; returns the admissible equal-size
// restriction with the largest potential, if any.
std::optional<Candidate> peeling_candidate(const BipartiteGraph& b, const Sides& s, double d, double delta) {
  const std::size_t n = b.left_size();
  std::vector<char> alive[2] = {std::vector<char>(n, 1), std::vector<char>(n, 1)};
  std::vector<std::size_t> deg[2];
  std::size_t edges = b.edge_count();
  for (int side = 0; side < 2; ++side) {
    deg[side].resize(n);
    for (std::size_t v = 0; v < n; ++v) deg[side][v] = s.adj[side][v].size();
  }
  std::optional<Candidate> best;
  double best_potential = -1.0;
  std::vector<std::uint32_t> removed[2];
  for (std::size_t size = n; size > 1; --size) {
    for (int side = 0; side < 2; ++side) {
      std::uint32_t pick = 0;
      std::size_t pick_deg = SIZE_MAX;
      for (std::uint32_t v = 0; v < n; ++v) {
        if (alive[side][v] && deg[side][v] < pick_deg) {
          pick = v;
          pick_deg = deg[side][v];
        }
      }
      alive[side][pick] = 0;
      edges -= pick_deg;
      for (auto x : s.adj[side][pick]) {
        if (alive[1 - side][x]) --deg[1 - side][x];
      }
    }
    const std::size_t m = size - 1;
    double dens = static_cast<double>(edges) / static_cast<double>(m * m);
    if (dens / d >= std::pow(static_cast<double>(n) / static_cast<double>(m), delta)) {
      double potential = dens * std::pow(static_cast<double>(m), delta);
      if (potential > best_potential) {
        Candidate c;
        for (std::uint32_t v = 0; v < n; ++v) {
          if (alive[0][v]) c.left.push_back(v);
          if (alive[1][v]) c.right.push_back(v);
        }
        c.density = dens;
        c.escape = 0;
        best = std::move(c);
        best_potential = potential;
      }
    }
  }
  return best;
}

}  // namespace

IncrementStep density_increment_step(const BipartiteGraph& b, const PipelineConfig& cfg) {
  cfg.validate();
  if (!b.balanced()) throw Error(ErrorCode::InvalidArgument, "density increment requires equal parts");
  const std::size_t n = b.left_size();
  const double d = b.density();
  if (n == 0 || d <= 0.0) throw Error(ErrorCode::InvalidArgument, "density increment requires positive density");
  IncrementStep step;
  step.n = n;
  step.density = d;
  step.k = k_from_density(d, n);
  auto w = find_k_factor(b, step.k);
  if (w.has_factor()) {
    step.kind = IncrementKind::Factor;
    step.factor = std::move(w.factor);
    return step;
  }
  step.kind = IncrementKind::Restriction;
  const double delta = cfg.delta;
  const double nd = static_cast<double>(n);
  Sides s = sides_of(b);

  // Orient so |A| <= |B|; side 0 of the oriented view holds A.
  const bool swapped = w.x.size() > w.y.size();
  const int pa = swapped ? 1 : 0, pb = 1 - pa;
  const auto& A = swapped ? w.y : w.x;
  const auto& B = swapped ? w.x : w.y;
  std::vector<char> ain = mask_of(A, n), bin = mask_of(B, n);
  std::vector<std::uint32_t> C, D, Y;
  for (std::uint32_t v = 0; v < n; ++v) {
    if (!bin[v]) C.push_back(v);
    if (!ain[v]) D.push_back(v);
    Y.push_back(v);
  }
  std::vector<char> cin = mask_of(C, n), din = mask_of(D, n);

  auto to_left_right = [&](std::vector<std::uint32_t> on_a_side, std::vector<std::uint32_t> on_b_side, int escape) {
    Candidate c;
    if (swapped) {
      c.left = std::move(on_b_side);
      c.right = std::move(on_a_side);
    } else {
      c.left = std::move(on_a_side);
      c.right = std::move(on_b_side);
    }
    c.density = restricted_density(b, c.left, c.right);
    c.escape = escape;
    return c;
  };

  std::vector<Candidate> found;
  if (!C.empty()) {
    std::size_t e_ac = 0;
    for (auto a : A) e_ac += edges_into(s.adj[pa][a], cin);
    double rhs = d * static_cast<double>(A.size()) * std::pow(static_cast<double>(C.size()), 1.0 - delta) *
                 std::pow(nd, delta);
    if (static_cast<double>(e_ac) >= rhs) found.push_back(to_left_right(trim(s, pa, A, cin, C.size()), C, 1));
  }
  if (!D.empty()) {
    std::size_t e_dy = 0;
    for (auto x : D) e_dy += s.adj[pa][x].size();
    double rhs = d * std::pow(static_cast<double>(D.size()), 1.0 - delta) * std::pow(nd, 1.0 + delta);
    if (static_cast<double>(e_dy) >= rhs) found.push_back(to_left_right(D, trim(s, pb, Y, din, D.size()), 2));
  }
  auto potential = [&](const Candidate& c) {
    return c.density * std::pow(static_cast<double>(c.left.size()), delta);
  };
  std::optional<Candidate> chosen;
  for (auto& c : found) {
    if (!chosen || potential(c) > potential(*chosen)) chosen = std::move(c);
  }
  if (!chosen && static_cast<double>(step.k) > d * nd / 100.0) chosen = peeling_candidate(b, s, d, delta);
  if (!chosen) {
    throw Error(ErrorCode::Internal, "density increment: neither escape holds for a violating pair (n=" +
                                         std::to_string(n) + ")");
  }
  step.left = std::move(chosen->left);
  step.right = std::move(chosen->right);
  step.restricted_density = chosen->density;
  step.escape = chosen->escape;
  return step;
}

RegularSubgraph large_regular_subgraph(const BipartiteGraph& b, const PipelineConfig& cfg) {
  if (!b.balanced()) throw Error(ErrorCode::InvalidArgument, "large_regular_subgraph requires equal parts");
  if (b.edge_count() == 0) throw Error(ErrorCode::InvalidArgument, "large_regular_subgraph requires density > 0");
  RegularSubgraph out;
  std::vector<EdgeId> ids(b.edge_count());
  std::iota(ids.begin(), ids.end(), EdgeId{0});
  BipartiteRestriction cur = b.with_edges(ids);
  out.trace.push_back({b.left_size(), b.density(), -1});
  while (true) {
    auto step = density_increment_step(cur.graph, cfg);
    if (step.kind == IncrementKind::Factor) {
      out.k = step.k;
      for (auto& e : step.factor->source) e = cur.source[e];
      out.subgraph = std::move(*step.factor);
      return out;
    }
    auto next = cur.graph.restrict_to(step.left, step.right);
    for (auto& e : next.source) e = cur.source[e];
    const auto& prev = out.trace.back();
    TraceEntry t{next.graph.left_size(), next.graph.density(), step.escape};
    double before = prev.density * std::pow(static_cast<double>(prev.n), cfg.delta);
    double after = t.density * std::pow(static_cast<double>(t.n), cfg.delta);
    if (after < before * (1.0 - 1e-9) || t.n >= prev.n) {
      throw Error(ErrorCode::Internal, "density increment lost potential or made no progress");
    }
    out.trace.push_back(t);
    cur = std::move(next);
  }
}

std::vector<std::vector<EdgeId>> matching_decomposition(const BipartiteGraph& h) {
  if (!h.balanced()) throw Error(ErrorCode::InvalidArgument, "matching decomposition requires equal parts");
  const std::size_t n = h.left_size();
  if (n == 0) return {};
  const std::size_t k = h.left_degree(0);
  for (std::uint32_t v = 0; v < n; ++v) {
    if (h.left_degree(v) != k) {
      throw Error(ErrorCode::InvalidArgument, "graph is not regular: left vertex " + std::to_string(v) + " has degree " +
                                                  std::to_string(h.left_degree(v)) + ", expected " + std::to_string(k));
    }
    if (h.right_degree(v) != k) {
      throw Error(ErrorCode::InvalidArgument, "graph is not regular: right vertex " + std::to_string(v) +
                                                  " has degree " + std::to_string(h.right_degree(v)) + ", expected " +
                                                  std::to_string(k));
    }
  }
  std::vector<std::vector<EdgeId>> out;
  std::vector<EdgeId> remaining(h.edge_count());
  std::iota(remaining.begin(), remaining.end(), EdgeId{0});
  for (std::size_t j = 0; j < k; ++j) {
    auto sub = h.with_edges(remaining);
    auto match = maximum_matching(sub.graph);
    std::vector<EdgeId> matching;
    std::vector<char> used(h.edge_count(), 0);
    for (std::uint32_t l = 0; l < n; ++l) {
      if (match[l] < 0) throw Error(ErrorCode::Internal, "regular bipartite graph without a perfect matching");
      for (const auto& inc : sub.graph.left_incident(l)) {
        if (inc.neighbour == static_cast<Vertex>(match[l])) {
          matching.push_back(sub.source[inc.edge]);
          used[sub.source[inc.edge]] = 1;
        }
      }
    }
    std::sort(matching.begin(), matching.end());
    std::erase_if(remaining, [&](EdgeId e) { return used[e] != 0; });
    out.push_back(std::move(matching));
  }
  return out;
}

EdgeColouring colour_regular_bipartite(const BipartiteGraph& h) {
  auto matchings = matching_decomposition(h);
  std::vector<Colour> colours(h.edge_count(), 0);
  for (std::size_t j = 0; j < matchings.size(); ++j) {
    for (EdgeId e : matchings[j]) colours[e] = static_cast<Colour>(j + 1);
  }
  return EdgeColouring(h.to_graph(), std::move(colours));
}

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[std::max(a, b)] = std::min(a, b);
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

std::vector<std::vector<EdgeId>> forest_partition(const Graph& g) {
  std::vector<std::vector<EdgeId>> forests;
  std::vector<UnionFind> uf;
  for (EdgeId id = 0; id < g.edge_count(); ++id) {
    const auto& e = g.edge(id);
    std::size_t f = 0;
    for (; f < forests.size(); ++f) {
      if (uf[f].unite(e.u, e.v)) break;
    }
    if (f == forests.size()) {
      forests.emplace_back();
      uf.emplace_back(g.vertex_count());
      uf.back().unite(e.u, e.v);
    }
    forests[f].push_back(id);
  }
  return forests;
}

namespace {

struct LayerPart {
  PartKind kind;
  std::size_t k;
  std::vector<EdgeId> edges;  // ids in g, ascending
  std::vector<Colour> colours;  // aligned with edges; empty for forests
};

struct LayerResult {
  LayerReport report;
  std::vector<LayerPart> parts;
  std::vector<Extraction> extractions;
};

LayerResult run_layer(const Graph& g, const BitLayer& layer, const PipelineConfig& cfg, double threshold) {
  LayerResult res;
  res.report.bit = layer.bit;
  res.report.edges = layer.graph.edge_count();
  const double half = static_cast<double>(layer.graph.left_size());
  std::vector<EdgeId> remaining(layer.graph.edge_count());
  std::iota(remaining.begin(), remaining.end(), EdgeId{0});
  while (!remaining.empty()) {
    auto cur = layer.graph.with_edges(remaining);
    double density = cur.graph.density();
    if (density < threshold) break;
    auto reg = large_regular_subgraph(cur.graph, cfg);
    auto sub_colouring = colour_regular_bipartite(reg.subgraph.graph);
    std::vector<std::pair<EdgeId, Colour>> taken;
    std::vector<char> used(layer.graph.edge_count(), 0);
    for (std::size_t i = 0; i < reg.subgraph.source.size(); ++i) {
      EdgeId in_layer = cur.source[reg.subgraph.source[i]];
      used[in_layer] = 1;
      taken.push_back({layer.source[in_layer], sub_colouring.colours[i]});
    }
    std::sort(taken.begin(), taken.end());
    LayerPart part{PartKind::Regular, reg.k, {}, {}};
    for (auto& [e, c] : taken) {
      part.edges.push_back(e);
      part.colours.push_back(c);
    }
    Extraction ex;
    ex.k = reg.k;
    ex.edges = part.edges.size();
    ex.density = density;
    ex.extraction_floor = std::pow(density, 1.0 / cfg.delta) * half * half / 200.0;
    ex.trace = std::move(reg.trace);
    ex.first_part = res.parts.size();
    res.extractions.push_back(std::move(ex));
    res.parts.push_back(std::move(part));
    std::erase_if(remaining, [&](EdgeId e) { return used[e] != 0; });
  }
  if (!remaining.empty()) {
    std::vector<EdgeId> ids;
    for (EdgeId e : remaining) ids.push_back(layer.source[e]);
    std::sort(ids.begin(), ids.end());
    auto rest = edge_subgraph(g, ids);
    for (auto& forest : forest_partition(rest.graph)) {
      LayerPart part{PartKind::Forest, 0, {}, {}};
      for (EdgeId e : forest) part.edges.push_back(rest.source[e]);
      res.parts.push_back(std::move(part));
      ++res.report.forests;
    }
  }
  return res;
}

}  // namespace

DecompositionReport decompose_theta(const Graph& g, const PipelineConfig& cfg, unsigned threads) {
  cfg.validate();
  DecompositionReport rep;
  rep.config = cfg;
  auto split = bit_split(g);
  rep.padded_vertices = split.padded_vertices;
  const double N = static_cast<double>(split.padded_vertices);
  rep.gamma_used = cfg.gamma();
  rep.gamma_alternative = cfg.gamma_alternative();
  rep.threshold = std::pow(N, -rep.gamma_used);
  rep.stop_edges = std::pow(N, 2.0 - rep.gamma_used / cfg.delta) / 200.0;
  rep.forest_reference = std::sqrt(static_cast<double>(g.edge_count()) / 2.0);

  std::vector<LayerResult> results(split.layers.size());
  unsigned workers = threads ? threads : std::max(1U, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(1, split.layers.size())));
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(split.layers.size());
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < split.layers.size();) {
      try {
        results[i] = run_layer(g, split.layers[i], cfg, rep.threshold);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  std::vector<std::uint32_t> part_of(g.edge_count(), 0);
  std::vector<const LayerPart*> flat;
  for (auto& r : results) {
    std::size_t base = rep.parts.size();
    for (auto& ex : r.extractions) {
      ex.first_part += base;
      r.report.extractions.push_back(ex);
    }
    for (const auto& p : r.parts) {
      for (EdgeId e : p.edges) part_of[e] = static_cast<std::uint32_t>(rep.parts.size());
      rep.parts.push_back({p.kind, r.report.bit, p.k, p.edges});
      if (p.kind == PartKind::Forest) ++rep.forests_used;
      flat.push_back(&p);
    }
    rep.layers.push_back(r.report);
  }
  rep.part_count = rep.parts.size();
  rep.partition = EdgePartition(g, std::move(part_of), rep.part_count);
  for (std::size_t p = 0; p < rep.part_count; ++p) {
    auto sub = rep.partition.part_graph(static_cast<std::uint32_t>(p));
    EdgeColouring c = flat[p]->kind == PartKind::Forest ? colour_forest(sub.graph)
                                                        : EdgeColouring(sub.graph, flat[p]->colours);
    if (!verify(c).interval) {
      throw Error(ErrorCode::Internal, "decomposition part " + std::to_string(p) + " is not interval coloured");
    }
    rep.colourings.push_back(std::move(c));
  }
  return rep;
}

double objective(double delta, double x, double y) {
  return (x - y) / 100.0 + std::pow(1.0 - x, 1.0 - delta) + x * std::pow(y, 1.0 - delta);
}

ObjectiveReport objective_check(double delta, double step) {
  if (!(delta > 0.0 && delta < 1.0)) throw Error(ErrorCode::InvalidArgument, "delta must lie in (0, 1)");
  if (!(step > 0.0 && step <= 0.1)) throw Error(ErrorCode::InvalidArgument, "grid step must lie in (0, 0.1]");
  ObjectiveReport rep;
  rep.delta = delta;
  rep.step = step;
  const auto steps = static_cast<long>(std::floor(1.0 / step + 1e-9));
  const auto ycap = static_cast<long>(std::floor(0.5 / step + 1e-9));
  auto jmax = [&](long i) { return std::min(i, ycap); };
  auto value = [&](long i, long j) {
    return objective(delta, static_cast<double>(i) * step, static_cast<double>(j) * step);
  };
  bool have_max = false, have_boundary = false;
  for (long i = 0; i <= steps; ++i) {
    for (long j = 0; j <= jmax(i); ++j) {
      ++rep.points;
      GridPoint p{static_cast<double>(i) * step, static_cast<double>(j) * step, value(i, j)};
      if (i == 0) {
        if (!have_boundary || p.value > rep.boundary_max.value) rep.boundary_max = p;
        have_boundary = true;
        continue;
      }
      if (!have_max || p.value > rep.max.value) rep.max = p;
      have_max = true;
      bool local = true;
      for (long di = -1; di <= 1 && local; ++di) {
        for (long dj = -1; dj <= 1 && local; ++dj) {
          long ni = i + di, nj = j + dj;
          if ((di == 0 && dj == 0) || ni < 1 || ni > steps || nj < 0 || nj > jmax(ni)) continue;
          if (value(ni, nj) > p.value) local = false;
        }
      }
      if (local) rep.local_maxima.push_back(p);
    }
  }
  return rep;
}

}  // namespace ilab
