#include "ilab/ilab.h"

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "ilab/colouring.hpp"
#include "ilab/decompose.hpp"
#include "ilab/error.hpp"
#include "ilab/exact_search.hpp"
#include "ilab/graph_io.hpp"
#include "ilab/planar.hpp"
#include "ilab/randlab.hpp"
#include "ilab/report_json.hpp"

struct ilab_graph {
  ilab::Graph g;
};

struct ilab_colouring {
  ilab::EdgeColouring c;
};

namespace {

using nlohmann::json;

thread_local std::string last_error;

ilab_status status_of(ilab::ErrorCode code) {
  switch (code) {
    case ilab::ErrorCode::InvalidArgument: return ILAB_INVALID_ARGUMENT;
    case ilab::ErrorCode::Parse: return ILAB_PARSE;
    case ilab::ErrorCode::Precondition: return ILAB_PRECONDITION;
    case ilab::ErrorCode::BudgetExhausted: return ILAB_BUDGET;
    case ilab::ErrorCode::Io: return ILAB_IO;
    case ilab::ErrorCode::Internal: return ILAB_INTERNAL;
  }
  return ILAB_INTERNAL;
}

template <class F>
ilab_status guard(F&& f) {
  try {
    last_error.clear();
    f();
    return ILAB_OK;
  } catch (const ilab::Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return ILAB_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return ILAB_INTERNAL;
  }
}

void require(const void* p, const char* name) {
  if (!p) throw ilab::Error(ilab::ErrorCode::InvalidArgument, std::string(name) + " is null");
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void emit(json j, ilab_outcome outcome, const std::string& summary, ilab_outcome* out_outcome, char** report) {
  j["summary"] = summary;
  j["outcome"] = outcome == ILAB_FOUND ? "found" : outcome == ILAB_NEGATIVE ? "negative" : "budget-exhausted";
  *report = dup(j.dump());
  if (out_outcome) *out_outcome = outcome;
}

std::string fixed(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  return buf;
}

ilab::SearchBudget budget_from(int64_t max_colours, uint64_t node_limit, double time_limit) {
  ilab::SearchBudget b;
  if (max_colours > 0) b.max_colours = static_cast<std::size_t>(max_colours);
  if (node_limit > 0) b.node_limit = node_limit;
  if (time_limit > 0) b.time_limit_seconds = time_limit;
  return b;
}

}  // namespace

extern "C" {

const char* ilab_version(void) { return "1.0.0"; }

const char* ilab_last_error(void) { return last_error.c_str(); }

void ilab_string_free(char* s) { std::free(s); }

ilab_status ilab_graph_parse(const char* text, ilab_graph** out) {
  return guard([&] {
    require(text, "text");
    require(out, "out");
    *out = new ilab_graph{ilab::parse_graph(text)};
  });
}

ilab_status ilab_graph_load(const char* path, ilab_graph** out) {
  return guard([&] {
    require(path, "path");
    require(out, "out");
    *out = new ilab_graph{ilab::parse_graph(ilab::read_file(path))};
  });
}

ilab_status ilab_graph_from_edges(size_t n, const uint32_t* pairs, size_t m, ilab_graph** out) {
  return guard([&] {
    require(out, "out");
    if (m > 0) require(pairs, "pairs");
    std::vector<ilab::Edge> edges;
    for (size_t i = 0; i < m; ++i) edges.push_back({pairs[2 * i], pairs[2 * i + 1]});
    *out = new ilab_graph{ilab::Graph::from_edges(n, std::move(edges))};
  });
}

void ilab_graph_free(ilab_graph* g) { delete g; }

size_t ilab_graph_vertex_count(const ilab_graph* g) { return g ? g->g.vertex_count() : 0; }

size_t ilab_graph_edge_count(const ilab_graph* g) { return g ? g->g.edge_count() : 0; }

ilab_status ilab_graph_edge(const ilab_graph* g, size_t e, uint32_t* u, uint32_t* v) {
  return guard([&] {
    require(g, "graph");
    require(u, "u");
    require(v, "v");
    if (e >= g->g.edge_count()) throw ilab::Error(ilab::ErrorCode::InvalidArgument, "edge index out of range");
    *u = g->g.edge(e).u;
    *v = g->g.edge(e).v;
  });
}

ilab_status ilab_graph_serialize(const ilab_graph* g, int as_json, char** out) {
  return guard([&] {
    require(g, "graph");
    require(out, "out");
    *out = dup(as_json ? ilab::serialize_graph_json(g->g) : ilab::serialize_graph(g->g));
  });
}

ilab_status ilab_graph_diameter(const ilab_graph* g, int64_t* out) {
  return guard([&] {
    require(g, "graph");
    require(out, "out");
    auto d = ilab::diameter(g->g);
    *out = d ? static_cast<int64_t>(*d) : -1;
  });
}

ilab_status ilab_colouring_parse(const char* text, ilab_colouring** out) {
  return guard([&] {
    require(text, "text");
    require(out, "out");
    *out = new ilab_colouring{ilab::parse_colouring(text)};
  });
}

ilab_status ilab_colouring_load(const char* path, ilab_colouring** out) {
  return guard([&] {
    require(path, "path");
    require(out, "out");
    *out = new ilab_colouring{ilab::parse_colouring(ilab::read_file(path))};
  });
}

ilab_status ilab_colouring_create(const ilab_graph* g, const int64_t* colours, size_t count, ilab_colouring** out) {
  return guard([&] {
    require(g, "graph");
    require(out, "out");
    if (count > 0) require(colours, "colours");
    *out = new ilab_colouring{ilab::EdgeColouring(g->g, std::vector<ilab::Colour>(colours, colours + count))};
  });
}

void ilab_colouring_free(ilab_colouring* c) { delete c; }

ilab_status ilab_colouring_get(const ilab_colouring* c, size_t e, int64_t* out) {
  return guard([&] {
    require(c, "colouring");
    require(out, "out");
    if (e >= c->c.colours.size()) throw ilab::Error(ilab::ErrorCode::InvalidArgument, "edge index out of range");
    *out = c->c.colours[e];
  });
}

ilab_status ilab_colouring_graph(const ilab_colouring* c, ilab_graph** out) {
  return guard([&] {
    require(c, "colouring");
    require(out, "out");
    *out = new ilab_graph{c->c.graph};
  });
}

ilab_status ilab_colouring_serialize(const ilab_colouring* c, int as_json, char** out) {
  return guard([&] {
    require(c, "colouring");
    require(out, "out");
    *out = dup(as_json ? ilab::serialize_colouring_json(c->c) : ilab::serialize_colouring(c->c));
  });
}

ilab_status ilab_colouring_verify(const ilab_colouring* c, int* proper, int* interval, size_t* distinct) {
  return guard([&] {
    require(c, "colouring");
    auto r = ilab::verify(c->c);
    if (proper) *proper = r.proper;
    if (interval) *interval = r.interval;
    if (distinct) *distinct = r.distinct_colours;
  });
}

ilab_status ilab_check(const ilab_graph* g, const ilab_colouring* c, ilab_outcome* outcome, char** report) {
  return guard([&] {
    require(c, "colouring");
    require(report, "report");
    if (g && !(g->g == c->c.graph)) {
      throw ilab::Error(ilab::ErrorCode::InvalidArgument, "colouring does not cover the graph's edge set");
    }
    auto r = ilab::verify(c->c);
    std::string summary;
    if (r.interval) {
      summary = "interval, " + std::to_string(r.distinct_colours) + " colours";
    } else {
      summary = std::string(r.proper ? "proper, not interval" : "not proper") + ": vertex " +
                std::to_string(r.first_violation->vertex) + ": " + r.first_violation->description;
    }
    emit(ilab::to_json(r), r.interval ? ILAB_FOUND : ILAB_NEGATIVE, summary, outcome, report);
  });
}

ilab_status ilab_solve(const ilab_graph* g, const ilab_solve_options* options, ilab_outcome* outcome, char** report) {
  return guard([&] {
    require(g, "graph");
    require(options, "options");
    require(report, "report");
    const std::string mode = options->mode ? options->mode : "colourable";
    auto budget = budget_from(options->max_colours, options->node_limit, options->time_limit_seconds);
    json j{{"mode", mode}};
    if (mode == "colourable") {
      auto r = ilab::find_interval_colouring(g->g, budget);
      j["nodes"] = r.nodes;
      if (r.outcome == ilab::SearchOutcome::Found) {
        j["colouring"] = ilab::to_json(*r.colouring);
        emit(j, ILAB_FOUND, "interval colourable, " + std::to_string(ilab::count_colours(*r.colouring)) + " colours",
             outcome, report);
      } else if (r.outcome == ilab::SearchOutcome::None) {
        emit(j, ILAB_NEGATIVE, "not interval colourable", outcome, report);
      } else {
        emit(j, ILAB_BUDGET_EXHAUSTED, "budget exhausted after " + std::to_string(r.nodes) + " nodes", outcome, report);
      }
    } else if (mode == "tmax") {
      auto r = ilab::max_colours(g->g, budget);
      j["nodes"] = r.nodes;
      if (r.outcome == ilab::SearchOutcome::Found) {
        j["t"] = r.t;
        j["colouring"] = ilab::to_json(*r.witness);
        emit(j, ILAB_FOUND, "t = " + std::to_string(r.t), outcome, report);
      } else if (r.outcome == ilab::SearchOutcome::None) {
        emit(j, ILAB_NEGATIVE, "not interval colourable", outcome, report);
      } else {
        emit(j, ILAB_BUDGET_EXHAUSTED, "budget exhausted after " + std::to_string(r.nodes) + " nodes", outcome, report);
      }
    } else if (mode == "theta") {
      std::size_t kmax = options->kmax ? options->kmax : std::max<std::size_t>(1, g->g.edge_count());
      auto r = ilab::exact_thickness(g->g, kmax, budget);
      j["kmax"] = kmax;
      if (r.outcome == ilab::ThicknessOutcome::Found) {
        j.update(ilab::to_json(*r.result));
        emit(j, ILAB_FOUND, "theta = " + std::to_string(r.result->theta), outcome, report);
      } else if (r.outcome == ilab::ThicknessOutcome::ExceedsKMax) {
        emit(j, ILAB_NEGATIVE, "theta exceeds kmax " + std::to_string(kmax), outcome, report);
      } else {
        emit(j, ILAB_BUDGET_EXHAUSTED, "budget exhausted", outcome, report);
      }
    } else if (mode == "peel") {
      auto p = ilab::peel_sequence(g->g, budget);
      std::string seq = std::to_string(p.initial_theta);
      for (const auto& s : p.steps) seq += ", " + std::to_string(s.theta);
      j.update(ilab::to_json(p));
      emit(j, ILAB_FOUND, "theta sequence " + seq, outcome, report);
    } else {
      throw ilab::Error(ilab::ErrorCode::InvalidArgument, "unknown mode '" + mode + "'");
    }
  });
}

ilab_status ilab_decompose(const ilab_graph* g, double delta, uint64_t seed, unsigned threads, char** report) {
  return guard([&] {
    require(g, "graph");
    require(report, "report");
    ilab::PipelineConfig cfg;
    cfg.delta = delta;
    cfg.seed = seed;
    auto r = ilab::decompose_theta(g->g, cfg, threads);
    std::size_t regular = r.part_count - r.forests_used;
    std::string summary = std::to_string(r.part_count) + " parts (" + std::to_string(regular) + " regular, " +
                          std::to_string(r.forests_used) + " forest) over " + std::to_string(r.layers.size()) +
                          " layers, all interval";
    emit(ilab::to_json(r), ILAB_FOUND, summary, nullptr, report);
  });
}

ilab_status ilab_gen_lower(size_t r, size_t n, double delta, double epsilon, int preset, uint64_t seed,
                           char** graph_json) {
  return guard([&] {
    require(graph_json, "graph_json");
    ilab::LowerBoundParams p;
    if (preset) {
      p = ilab::LowerBoundParams::preset(r, n, seed);
    } else {
      p.r = r;
      p.n = n;
      p.delta = delta;
      p.epsilon = epsilon;
      p.seed = seed;
    }
    *graph_json = dup(ilab::serialize_layered(ilab::generate(p)));
  });
}

ilab_status ilab_gen_partition(const char* graph, size_t parts, uint64_t seed, char** partition) {
  return guard([&] {
    require(graph, "graph");
    require(partition, "partition");
    if (parts == 0) throw ilab::Error(ilab::ErrorCode::InvalidArgument, "parts must be positive");
    auto g = ilab::parse_graph(graph);
    auto labels = ilab::random_parts(g.edge_count(), parts, seed);
    *partition = dup(ilab::serialize_partition(ilab::EdgePartition(std::move(g), std::move(labels), parts)));
  });
}

ilab_status ilab_gen_planar(size_t s, const size_t* removed, size_t removed_count, int odd, ilab_colouring** out) {
  return guard([&] {
    require(out, "out");
    if (removed_count > 0) require(removed, "removed");
    ilab::FamilySpec spec;
    spec.s = s;
    spec.removed_curved.assign(removed, removed + removed_count);
    spec.odd_extension = odd != 0;
    *out = new ilab_colouring{ilab::extremal_family(spec)};
  });
}

ilab_status ilab_probe(const char* layered_json, const char* partition, double budget_scale, ilab_outcome* outcome,
                       char** report) {
  return guard([&] {
    require(layered_json, "layered_json");
    require(partition, "partition");
    require(report, "report");
    auto g = ilab::parse_layered(layered_json);
    auto p = ilab::parse_partition(partition);
    ilab::ProbeConfig cfg;
    cfg.budget_scale = budget_scale;
    auto r = ilab::adversarial_probe(g, p, cfg);
    std::string summary;
    ilab_outcome oc = ILAB_FOUND;
    if (r.status == ilab::ProbeStatus::Witness) {
      const auto& w = *r.witness;
      summary = "witness: part " + std::to_string(w.part) + " is not interval colourable (vertex " +
                std::to_string(w.outside) + " has " + std::to_string(w.edges_into_h) + " edges into H, window " +
                std::to_string(r.check->window) + ")";
    } else if (r.status == ilab::ProbeStatus::DistinctTrace) {
      summary = "distinct trace:";
      for (const auto& s : r.stages) summary += " " + std::to_string(*s.part);
    } else {
      summary = "stalled at stage " + std::to_string(r.stages.back().k) + " (no edges left in unused parts)";
      oc = ILAB_NEGATIVE;
    }
    emit(ilab::to_json(r), oc, summary, outcome, report);
  });
}

ilab_status ilab_split(const ilab_colouring* c, ilab_outcome* outcome, char** report) {
  return guard([&] {
    require(c, "colouring");
    require(report, "report");
    auto r = ilab::unique_colour_split(c->c.graph, c->c);
    if (!r) {
      emit(json::object(), ILAB_NEGATIVE, "no unique interior colour", outcome, report);
      return;
    }
    auto shift = *std::min_element(c->c.colours.begin(), c->c.colours.end());
    std::string summary = "split at colour " + std::to_string(r->c0 - shift) + " on edge " + std::to_string(r->v) +
                          "-" + std::to_string(r->w) + ": |V1| = " + std::to_string(r->v1.size()) +
                          ", |V2| = " + std::to_string(r->v2.size());
    auto j = ilab::to_json(*r);
    j["c0"] = r->c0 - shift;
    emit(j, ILAB_FOUND, summary, outcome, report);
  });
}

ilab_status ilab_bound(const ilab_graph* g, double k, uint64_t node_limit, double time_limit_seconds,
                       ilab_outcome* outcome, char** report) {
  return guard([&] {
    require(g, "graph");
    require(report, "report");
    auto sparse = ilab::hereditary_sparsity(g->g, k);
    if (!sparse.ok) {
      json j{{"sparsity", ilab::to_json(sparse)}};
      std::string set;
      for (auto v : sparse.violating) set += (set.empty() ? "" : ",") + std::to_string(v);
      emit(j, ILAB_NEGATIVE,
           "hypothesis fails: {" + set + "} spans " + std::to_string(sparse.edges) + " edges > " +
               fixed(sparse.bound, 2),
           outcome, report);
      return;
    }
    auto r = ilab::verify_colour_bound(g->g, k, budget_from(0, node_limit, time_limit_seconds));
    json j = ilab::to_json(r);
    j["sparsity"] = ilab::to_json(sparse);
    std::string summary = "t = " + std::to_string(r.t) + (r.holds ? " <= " : " > ") + "bound " + fixed(r.bound, 2);
    emit(j, r.holds ? ILAB_FOUND : ILAB_NEGATIVE, summary, outcome, report);
  });
}

ilab_status ilab_objective(double delta, double step, char** report) {
  return guard([&] {
    require(report, "report");
    auto r = ilab::objective_check(delta, step);
    std::string summary = "max " + fixed(r.max.value, 4) + " at (" + fixed(r.max.x, 2) + "," + fixed(r.max.y, 2) +
                          "), boundary x=0 excluded";
    emit(ilab::to_json(r), ILAB_FOUND, summary, nullptr, report);
  });
}

}  // extern "C"
