#include "ilab/randlab.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <string>
#include <tuple>

#include "ilab/error.hpp"
#include "ilab/random.hpp"

namespace ilab {

LowerBoundParams LowerBoundParams::preset(std::size_t r, std::size_t n, std::uint64_t seed) {
  LowerBoundParams p;
  p.r = r;
  p.n = n;
  p.delta = 1.0 / (1000.0 * static_cast<double>(r));
  p.epsilon = std::pow(p.delta, static_cast<double>(r + 2));
  p.seed = seed;
  return p;
}

void LowerBoundParams::validate() const {
  if (r < 1) throw Error(ErrorCode::InvalidArgument, "r must be at least 1");
  if (!(delta > 0.0 && delta < 1.0)) throw Error(ErrorCode::InvalidArgument, "delta must lie in (0, 1)");
  if (!(epsilon >= 0.0 && epsilon < 1.0)) throw Error(ErrorCode::InvalidArgument, "epsilon must lie in [0, 1)");
  for (std::size_t i = 1; i <= r; ++i) {
    double p = layer_probability(i);
    if (p > 1.0) {
      throw Error(ErrorCode::InvalidArgument,
                  "layer " + std::to_string(i) + " edge probability " + std::to_string(p) + " exceeds 1");
    }
  }
}

std::size_t LowerBoundParams::layer_size(std::size_t i) const {
  double raw = static_cast<double>(n) * std::pow(delta, static_cast<double>(i));
  return std::max<std::size_t>(1, static_cast<std::size_t>(std::floor(raw + 0.5)));
}

double LowerBoundParams::layer_probability(std::size_t i) const {
  return epsilon * std::pow(delta, -static_cast<double>(i));
}

std::vector<Vertex> LayeredBipartite::a_layer(std::size_t i) const {
  std::vector<Vertex> out;
  for (std::size_t v = layer_start.at(i - 1); v < layer_start.at(i); ++v) out.push_back(static_cast<Vertex>(v));
  return out;
}

std::size_t LayeredBipartite::layer_of_vertex(Vertex v) const {
  if (v < params.n) return 0;
  auto it = std::upper_bound(layer_start.begin(), layer_start.end(), static_cast<std::size_t>(v));
  return static_cast<std::size_t>(it - layer_start.begin());
}

LayeredBipartite generate(const LowerBoundParams& params) {
  params.validate();
  LayeredBipartite out;
  out.params = params;
  out.layer_start.push_back(params.n);
  for (std::size_t i = 1; i <= params.r; ++i) out.layer_start.push_back(out.layer_start.back() + params.layer_size(i));
  std::vector<Edge> edges;
  for (std::size_t i = 1; i <= params.r; ++i) {
    const double p = params.layer_probability(i);
    for (std::size_t b = 0; b < params.n; ++b) {
      SplitMix64 rng(mix_seed(params.seed, i, b));
      for (std::size_t a = out.layer_start[i - 1]; a < out.layer_start[i]; ++a) {
        if (rng.uniform() < p) edges.push_back({static_cast<Vertex>(b), static_cast<Vertex>(a)});
      }
    }
  }
  out.graph = Graph::from_edges(out.layer_start.back(), std::move(edges));
  for (const auto& e : out.graph.edges()) out.layer_of.push_back(static_cast<std::uint32_t>(out.layer_of_vertex(e.v)));
  return out;
}

BiregularReport check_biregular(const BipartiteGraph& b, double p) {
  BiregularReport rep;
  rep.left_lo = 0.9 * p * static_cast<double>(b.right_size());
  rep.left_hi = 1.1 * p * static_cast<double>(b.right_size());
  rep.right_lo = 0.9 * p * static_cast<double>(b.left_size());
  rep.right_hi = 1.1 * p * static_cast<double>(b.left_size());
  for (std::uint32_t l = 0; l < b.left_size(); ++l) {
    auto d = static_cast<double>(b.left_degree(l));
    if (d < rep.left_lo || d > rep.left_hi) rep.violations.push_back({true, l, b.left_degree(l)});
  }
  for (std::uint32_t r = 0; r < b.right_size(); ++r) {
    auto d = static_cast<double>(b.right_degree(r));
    if (d < rep.right_lo || d > rep.right_hi) rep.violations.push_back({false, r, b.right_degree(r)});
  }
  rep.ok = rep.violations.empty();
  return rep;
}

namespace {

using Bits = std::vector<std::uint64_t>;

std::size_t and_count(const Bits& a, const Bits& b) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < a.size(); ++i) c += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
  return c;
}

std::size_t min_size(double alpha, std::size_t n) {
  auto s = static_cast<std::size_t>(std::ceil(alpha * static_cast<double>(n) - 1e-12));
  return std::clamp<std::size_t>(s, 1, std::max<std::size_t>(n, 1));
}

}  // namespace

PseudorandomReport check_pseudorandom(const BipartiteGraph& b, double alpha, double p, std::size_t trials,
                                      std::uint64_t seed) {
  if (trials < 1) throw Error(ErrorCode::InvalidArgument, "trials must be at least 1");
  PseudorandomReport rep;
  const std::size_t L = b.left_size(), R = b.right_size();
  if (L == 0 || R == 0) return rep;
  const std::size_t words = (R + 63) / 64;
  std::vector<Bits> adj(L, Bits(words, 0));
  for (const auto& e : b.edges()) adj[e.left][e.right / 64] |= std::uint64_t{1} << (e.right % 64);
  const std::size_t umin = min_size(alpha, L), vmin = min_size(alpha, R);
  auto record = [&](std::size_t e, std::size_t su, std::size_t sv) {
    double prod = static_cast<double>(su) * static_cast<double>(sv);
    double ratio = std::abs(static_cast<double>(e) - p * prod) / std::pow(prod, 0.85);
    ++rep.pairs;
    if (ratio > 1.0) ++rep.failures;
    if (ratio > rep.worst_ratio) {
      rep.worst_ratio = ratio;
      rep.worst_u = su;
      rep.worst_v = sv;
    }
  };
  if (L <= 12 && R <= 12) {
    rep.exhaustive = true;
    for (std::uint32_t u = 1; u < (1U << L); ++u) {
      auto su = static_cast<std::size_t>(std::popcount(u));
      if (su < umin) continue;
      std::vector<std::size_t> into(R, 0);
      for (std::size_t l = 0; l < L; ++l) {
        if (!((u >> l) & 1U)) continue;
        for (const auto& inc : b.left_incident(static_cast<std::uint32_t>(l))) ++into[inc.neighbour];
      }
      for (std::uint32_t v = 1; v < (1U << R); ++v) {
        auto sv = static_cast<std::size_t>(std::popcount(v));
        if (sv < vmin) continue;
        std::size_t e = 0;
        for (std::size_t r = 0; r < R; ++r) e += ((v >> r) & 1U) ? into[r] : 0;
        record(e, su, sv);
      }
    }
  } else {
    SplitMix64 rng(seed);
    std::vector<std::uint32_t> lid(L), rid(R);
    std::iota(lid.begin(), lid.end(), 0U);
    std::iota(rid.begin(), rid.end(), 0U);
    Bits vmask(words);
    for (std::size_t t = 0; t < trials; ++t) {
      std::size_t su = umin + rng.below(L - umin + 1);
      std::size_t sv = vmin + rng.below(R - vmin + 1);
      for (std::size_t i = 0; i < su; ++i) std::swap(lid[i], lid[i + rng.below(L - i)]);
      for (std::size_t i = 0; i < sv; ++i) std::swap(rid[i], rid[i + rng.below(R - i)]);
      std::fill(vmask.begin(), vmask.end(), 0);
      for (std::size_t i = 0; i < sv; ++i) vmask[rid[i] / 64] |= std::uint64_t{1} << (rid[i] % 64);
      std::size_t e = 0;
      for (std::size_t i = 0; i < su; ++i) e += and_count(adj[lid[i]], vmask);
      record(e, su, sv);
    }
  }
  rep.ok = rep.failures == 0;
  return rep;
}

BipartiteGraph random_bipartite(std::size_t left, std::size_t right, double p, std::uint64_t seed) {
  std::vector<BiEdge> edges;
  for (std::size_t l = 0; l < left; ++l) {
    SplitMix64 rng(mix_seed(seed, l));
    for (std::size_t r = 0; r < right; ++r) {
      if (rng.uniform() < p) edges.push_back({static_cast<std::uint32_t>(l), static_cast<std::uint32_t>(r)});
    }
  }
  return BipartiteGraph::from_edges(left, right, std::move(edges));
}

BipartiteGraph random_biregular_bipartite(std::size_t n, std::size_t degree, std::uint64_t seed) {
  if (degree > n) throw Error(ErrorCode::InvalidArgument, "degree exceeds the part size");
  std::vector<BiEdge> edges;
  std::vector<char> present(n * n, 0);
  for (std::size_t l = 0; l < n; ++l) {
    for (std::size_t j = 0; j < degree; ++j) {
      std::size_t r = (l + j) % n;
      edges.push_back({static_cast<std::uint32_t>(l), static_cast<std::uint32_t>(r)});
      present[l * n + r] = 1;
    }
  }
  SplitMix64 rng(seed);
  const std::size_t m = edges.size();
  for (std::size_t t = 0; m >= 2 && t < 20 * m; ++t) {
    std::size_t i = rng.below(m), j = rng.below(m);
    auto [a, b] = edges[i];
    auto [c, d] = edges[j];
    if (a == c || b == d || present[a * n + d] || present[c * n + b]) continue;
    present[a * n + b] = present[c * n + d] = 0;
    present[a * n + d] = present[c * n + b] = 1;
    edges[i].right = d;
    edges[j].right = b;
  }
  return BipartiteGraph::from_edges(n, n, std::move(edges));
}

std::vector<std::uint32_t> random_parts(std::size_t edges, std::size_t parts, std::uint64_t seed) {
  if (parts == 0) throw Error(ErrorCode::InvalidArgument, "part count must be positive");
  SplitMix64 rng(seed);
  std::vector<std::uint32_t> out(edges);
  for (auto& x : out) x = static_cast<std::uint32_t>(rng.below(parts));
  return out;
}

DenseSubgraphReport find_dense_monochromatic(const BipartiteGraph& b, const std::vector<std::uint32_t>& part_of,
                                             std::size_t part_count, const DensePartHypothesis& hyp) {
  if (part_count == 0) throw Error(ErrorCode::InvalidArgument, "partition has no parts");
  if (part_of.size() != b.edge_count()) throw Error(ErrorCode::InvalidArgument, "partition does not match the edges");
  std::vector<std::size_t> count(part_count, 0);
  for (auto p : part_of) {
    if (p >= part_count) throw Error(ErrorCode::InvalidArgument, "part index out of range");
    ++count[p];
  }
  DenseSubgraphReport rep;
  rep.part = static_cast<std::uint32_t>(std::max_element(count.begin(), count.end()) - count.begin());
  if (count[rep.part] == 0) throw Error(ErrorCode::Precondition, "graph has no edges");
  const auto k = rep.part;
  const std::size_t L = b.left_size();
  std::vector<std::size_t> right_deg(b.right_size(), 0);
  for (EdgeId id = 0; id < b.edge_count(); ++id) {
    if (part_of[id] == k) ++right_deg[b.edges()[id].right];
  }
  std::size_t best = 0;
  for (std::uint32_t x = 0; x < L; ++x) {
    std::size_t score = 0;
    for (const auto& inc : b.left_incident(x)) {
      if (part_of[inc.edge] == k) score += right_deg[inc.neighbour];
    }
    if (score > best) {
      best = score;
      rep.pivot = x;
    }
  }
  std::vector<char> in_mid(b.right_size(), 0), in_far(L, 0);
  for (const auto& inc : b.left_incident(rep.pivot)) {
    if (part_of[inc.edge] == k) in_mid[inc.neighbour] = 1;
  }
  for (std::uint32_t y = 0; y < b.right_size(); ++y) {
    if (!in_mid[y]) continue;
    rep.middle.push_back(y);
    for (const auto& inc : b.right_incident(y)) {
      if (part_of[inc.edge] == k) in_far[inc.neighbour] = 1;
    }
  }
  in_far[rep.pivot] = 1;
  for (std::uint32_t x = 0; x < L; ++x) {
    if (in_far[x]) {
      rep.far.push_back(x);
      rep.k_vertices.push_back(x);
    }
  }
  for (auto y : rep.middle) rep.k_vertices.push_back(static_cast<Vertex>(L + y));
  std::vector<Edge> local;
  std::vector<std::uint32_t> pos(L + b.right_size(), 0);
  for (std::size_t i = 0; i < rep.k_vertices.size(); ++i) pos[rep.k_vertices[i]] = static_cast<std::uint32_t>(i);
  for (EdgeId id = 0; id < b.edge_count(); ++id) {
    const auto& e = b.edges()[id];
    if (part_of[id] == k && in_far[e.left] && in_mid[e.right]) {
      rep.k_edges.push_back(id);
      local.push_back({pos[e.left], pos[L + e.right]});
    }
  }
  auto kg = Graph::from_edges(rep.k_vertices.size(), std::move(local));
  auto d = diameter(kg);
  if (!d || *d > 4) throw Error(ErrorCode::Internal, "dense monochromatic subgraph has diameter above 4");
  rep.diameter = *d;
  rep.k_cap_c = rep.far.size();
  const std::size_t r = std::max<std::size_t>(hyp.r, 1);
  rep.target = (L + 2 * r * r - 1) / (2 * r * r);
  return rep;
}

const char* to_string(ProbeStatus status) {
  switch (status) {
    case ProbeStatus::Witness: return "witness";
    case ProbeStatus::DistinctTrace: return "distinct-trace";
    case ProbeStatus::Stalled: return "stalled";
  }
  return "?";
}

namespace {

struct StageMemo {
  std::uint32_t part;
  std::vector<char> in_k;  // over all vertices
  std::vector<Vertex> vertices;
  std::vector<EdgeId> edges;
  std::size_t diameter;
  std::size_t delta;
};

}  // namespace

ProbeReport adversarial_probe(const LayeredBipartite& g, const EdgePartition& partition, const ProbeConfig& cfg) {
  if (!(partition.graph == g.graph)) throw Error(ErrorCode::InvalidArgument, "partition is over a different graph");
  const auto& G = g.graph;
  const auto& prm = g.params;
  const std::size_t nv = G.vertex_count();
  ProbeReport rep;
  std::vector<char> in_b(nv, 0), used(partition.part_count, 0);
  std::size_t b_count = prm.n;
  for (std::size_t v = 0; v < prm.n; ++v) in_b[v] = 1;
  std::vector<StageMemo> memo;

  for (std::size_t k = 1; k <= prm.r; ++k) {
    ProbeStage st;
    st.k = k;
    st.b_before = b_count;
    const auto A = g.a_layer(k);

    for (std::size_t i = 0; i < memo.size(); ++i) {
      const auto& m = memo[i];
      double cap = cfg.budget_scale * 8.0 * prm.epsilon * std::pow(prm.delta, -static_cast<double>(i + 1)) *
                   static_cast<double>(prm.n);
      if (cap < 1.0) st.cap_vacuous = true;
      const std::size_t window = (m.diameter + 3) * (m.delta - 1) + 1;
      for (Vertex a : A) {
        std::size_t j = 0;
        for (const auto& inc : G.incident(a)) {
          if (partition.part_of[inc.edge] == m.part && m.in_k[inc.neighbour]) ++j;
        }
        st.max_edges_into_earlier = std::max(st.max_edges_into_earlier, j);
        if (static_cast<double>(j) > cap) ++st.cap_exceedances;
        if (j > window && !rep.witness) {
          SpreadWitness w{m.part, m.vertices, m.edges, a, j, m.diameter, m.delta};
          auto check = confirm_spread_witness(partition, w);
          if (!check.confirmed) throw Error(ErrorCode::Internal, "probe witness rejected: " + check.reason);
          rep.witness = std::move(w);
          rep.check = std::move(check);
        }
      }
    }
    if (rep.witness) {
      rep.status = ProbeStatus::Witness;
      rep.stages.push_back(std::move(st));
      return rep;
    }

    // Delete used-part edges from A_k into B_{k-1}; keep the rest.
    std::vector<std::tuple<std::uint32_t, std::uint32_t, EdgeId>> keep;  // (B pos, A pos, edge)
    std::vector<std::uint32_t> bpos(nv, 0);
    std::vector<Vertex> blabels;
    for (Vertex v = 0; v < prm.n; ++v) {
      if (in_b[v]) {
        bpos[v] = static_cast<std::uint32_t>(blabels.size());
        blabels.push_back(v);
      }
    }
    for (std::size_t ai = 0; ai < A.size(); ++ai) {
      std::size_t deleted = 0;
      for (const auto& inc : G.incident(A[ai])) {
        if (!in_b[inc.neighbour]) continue;
        if (used[partition.part_of[inc.edge]]) {
          ++deleted;
        } else {
          keep.emplace_back(bpos[inc.neighbour], static_cast<std::uint32_t>(ai), inc.edge);
        }
      }
      st.deleted_edges += deleted;
      if (G.degree(A[ai]) > 0) {
        st.max_deleted_proportion =
            std::max(st.max_deleted_proportion, static_cast<double>(deleted) / static_cast<double>(G.degree(A[ai])));
      }
    }
    st.deletion_within_17delta = st.max_deleted_proportion <= 17.0 * prm.delta;
    st.surviving_edges = keep.size();
    if (keep.empty()) {
      rep.status = ProbeStatus::Stalled;
      rep.stages.push_back(std::move(st));
      return rep;
    }

    std::sort(keep.begin(), keep.end());
    std::vector<BiEdge> bedges;
    std::vector<std::uint32_t> parts;
    std::vector<EdgeId> origin;
    for (const auto& [bl, al, id] : keep) {
      bedges.push_back({bl, al});
      parts.push_back(partition.part_of[id]);
      origin.push_back(id);
    }
    auto stage_graph = BipartiteGraph::from_edges(blabels, A, std::move(bedges));
    DensePartHypothesis hyp;
    hyp.r = prm.r - k + 1;
    auto dense = find_dense_monochromatic(stage_graph, parts, partition.part_count, hyp);

    StageMemo m;
    m.part = dense.part;
    m.in_k.assign(nv, 0);
    for (Vertex x : dense.k_vertices) {
      Vertex v = x < blabels.size() ? blabels[x] : A[x - blabels.size()];
      m.vertices.push_back(v);
      m.in_k[v] = 1;
    }
    std::sort(m.vertices.begin(), m.vertices.end());
    for (EdgeId e : dense.k_edges) m.edges.push_back(origin[e]);
    std::sort(m.edges.begin(), m.edges.end());
    m.diameter = dense.diameter;
    m.delta = 0;
    for (Vertex v : m.vertices) {
      std::size_t d = 0;
      for (const auto& inc : G.incident(v)) d += partition.part_of[inc.edge] == m.part;
      m.delta = std::max(m.delta, d);
    }
    std::fill(in_b.begin(), in_b.end(), 0);
    b_count = 0;
    for (auto x : dense.far) {
      in_b[blabels[x]] = 1;
      ++b_count;
    }
    used[m.part] = 1;

    st.part = m.part;
    st.target = dense.target;
    st.b_after = b_count;
    st.diameter = m.diameter;
    st.max_part_degree = m.delta;
    st.k_vertices = m.vertices;
    st.k_edges = m.edges;
    rep.stages.push_back(std::move(st));
    memo.push_back(std::move(m));
  }
  rep.status = ProbeStatus::DistinctTrace;
  return rep;
}

}  // namespace ilab
