#include "ilab/report_json.hpp"

namespace ilab {

using nlohmann::json;

namespace {

json edges_of(const Graph& g) {
  json edges = json::array();
  for (const auto& e : g.edges()) edges.push_back({e.u, e.v});
  return edges;
}

json point(const GridPoint& p) { return {{"x", p.x}, {"y", p.y}, {"value", p.value}}; }

}  // namespace

json to_json(const Graph& g) { return {{"n", g.vertex_count()}, {"edges", edges_of(g)}}; }

json to_json(const EdgeColouring& c) {
  auto n = normalized(c);
  return {{"n", n.graph.vertex_count()}, {"edges", edges_of(n.graph)}, {"colours", n.colours}};
}

json to_json(const EdgePartition& p) {
  return {{"n", p.graph.vertex_count()}, {"edges", edges_of(p.graph)}, {"parts", p.part_of}, {"part_count", p.part_count}};
}

json to_json(const ColouringReport& r) {
  json j{{"proper", r.proper},
         {"interval", r.interval},
         {"distinct_colours", r.distinct_colours},
         {"min_colour", r.min_colour},
         {"max_colour", r.max_colour}};
  if (r.first_violation) {
    j["violation"] = {{"vertex", r.first_violation->vertex}, {"description", r.first_violation->description}};
  }
  return j;
}

json to_json(const ThicknessResult& r) {
  json cols = json::array();
  for (const auto& c : r.per_part_colourings) cols.push_back(to_json(c));
  return {{"theta", r.theta}, {"partition", to_json(r.partition)}, {"colourings", cols}};
}

json to_json(const PeelSequence& p) {
  json steps = json::array();
  for (const auto& s : p.steps) steps.push_back({{"removed", s.removed}, {"theta", s.theta}});
  return {{"initial_theta", p.initial_theta}, {"steps", steps}};
}

json to_json(const DecompositionReport& r) {
  json layers = json::array();
  for (const auto& l : r.layers) {
    json ex = json::array();
    for (const auto& e : l.extractions) {
      json trace = json::array();
      for (const auto& t : e.trace) trace.push_back({{"n", t.n}, {"density", t.density}, {"escape", t.escape}});
      ex.push_back({{"k", e.k},
                    {"edges", e.edges},
                    {"density", e.density},
                    {"extraction_floor", e.extraction_floor},
                    {"part", e.first_part},
                    {"trace", trace}});
    }
    layers.push_back({{"bit", l.bit}, {"edges", l.edges}, {"extractions", ex}, {"forests", l.forests}});
  }
  json parts = json::array();
  for (std::size_t p = 0; p < r.parts.size(); ++p) {
    const auto& rec = r.parts[p];
    parts.push_back({{"kind", rec.kind == PartKind::Regular ? "regular" : "forest"},
                     {"layer", rec.layer},
                     {"k", rec.k},
                     {"edges", rec.edges},
                     {"colouring", to_json(r.colourings[p])}});
  }
  return {{"delta", r.config.delta},
          {"seed", r.config.seed},
          {"padded_vertices", r.padded_vertices},
          {"gamma_used", r.gamma_used},
          {"gamma_alternative", r.gamma_alternative},
          {"threshold", r.threshold},
          {"stop_edges", r.stop_edges},
          {"forest_reference", r.forest_reference},
          {"forests_used", r.forests_used},
          {"part_count", r.part_count},
          {"layers", layers},
          {"parts", parts},
          {"partition", to_json(r.partition)}};
}

json to_json(const ObjectiveReport& r) {
  json local = json::array();
  for (const auto& p : r.local_maxima) local.push_back(point(p));
  return {{"delta", r.delta},
          {"step", r.step},
          {"points", r.points},
          {"max", point(r.max)},
          {"boundary_x0_max", point(r.boundary_max)},
          {"local_maxima", local}};
}

json to_json(const ProbeReport& r) {
  json stages = json::array();
  for (const auto& s : r.stages) {
    json j{{"k", s.k},
           {"b_before", s.b_before},
           {"max_edges_into_earlier", s.max_edges_into_earlier},
           {"cap_exceedances", s.cap_exceedances},
           {"cap_vacuous", s.cap_vacuous},
           {"deleted_edges", s.deleted_edges},
           {"max_deleted_proportion", s.max_deleted_proportion},
           {"deletion_within_17delta", s.deletion_within_17delta},
           {"surviving_edges", s.surviving_edges}};
    if (s.part) {
      j["part"] = *s.part;
      j["target"] = s.target;
      j["b_after"] = s.b_after;
      j["diameter"] = s.diameter;
      j["max_part_degree"] = s.max_part_degree;
      j["k_vertices"] = s.k_vertices.size();
      j["k_edges"] = s.k_edges.size();
    }
    stages.push_back(std::move(j));
  }
  json j{{"status", to_string(r.status)}, {"stages", stages}};
  if (r.witness) {
    const auto& w = *r.witness;
    j["witness"] = {{"part", w.part},
                    {"h_vertices", w.h_vertices},
                    {"h_edges", w.h_edges},
                    {"outside", w.outside},
                    {"edges_into_h", w.edges_into_h},
                    {"diameter", w.diameter},
                    {"delta_cap", w.delta_cap}};
  }
  if (r.check) j["check"] = {{"confirmed", r.check->confirmed}, {"window", r.check->window}, {"reason", r.check->reason}};
  return j;
}

json to_json(const SplitResult& r) {
  return {{"v", r.v},
          {"w", r.w},
          {"edge", r.edge},
          {"c0", r.c0},
          {"v1", r.v1},
          {"v2", r.v2},
          {"g1", {{"vertices", r.g1.original}, {"colouring", to_json(r.c1)}}},
          {"g2", {{"vertices", r.g2.original}, {"colouring", to_json(r.c2)}}}};
}

json to_json(const SparsityReport& r) {
  json j{{"ok", r.ok}};
  if (!r.ok) {
    j["violating"] = r.violating;
    j["edges"] = r.edges;
    j["bound"] = r.bound;
  }
  return j;
}

json to_json(const ColourBoundReport& r) {
  json j{{"t", r.t}, {"bound", r.bound}, {"holds", r.holds}, {"nodes", r.search.nodes}};
  if (r.search.witness) j["witness"] = to_json(*r.search.witness);
  return j;
}

}  // namespace ilab
