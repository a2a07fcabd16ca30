#include "ilab/graph_io.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>

#include <json.hpp>

#include "ilab/error.hpp"

namespace ilab {

using nlohmann::json;

namespace {

struct Row {
  std::size_t line;
  std::vector<std::int64_t> v;
};

bool is_json(std::string_view text) {
  auto pos = text.find_first_not_of(" \t\r\n");
  return pos != std::string_view::npos && text[pos] == '{';
}

std::vector<Row> read_rows(std::string_view text) {
  std::vector<Row> rows;
  std::size_t line = 0, start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++line;
    auto body = text.substr(start, end - start);
    if (auto hash = body.find('#'); hash != std::string_view::npos) body = body.substr(0, hash);
    Row row{line, {}};
    std::size_t i = 0;
    while (i < body.size()) {
      while (i < body.size() && (body[i] == ' ' || body[i] == '\t' || body[i] == '\r')) ++i;
      if (i >= body.size()) break;
      std::size_t j = i;
      while (j < body.size() && body[j] != ' ' && body[j] != '\t' && body[j] != '\r') ++j;
      std::int64_t value = 0;
      auto [ptr, ec] = std::from_chars(body.data() + i, body.data() + j, value);
      if (ec != std::errc() || ptr != body.data() + j) {
        throw ParseError(line, "expected an integer, got '" + std::string(body.substr(i, j - i)) + "'");
      }
      row.v.push_back(value);
      i = j;
    }
    if (!row.v.empty()) rows.push_back(std::move(row));
    start = end + 1;
  }
  return rows;
}

std::uint32_t vertex_id(const Row& row, std::size_t col) {
  std::int64_t x = row.v[col];
  if (x < 0 || x > std::numeric_limits<std::uint32_t>::max()) {
    throw ParseError(row.line, "vertex id " + std::to_string(x) + " out of range");
  }
  return static_cast<std::uint32_t>(x);
}

// Header with `header_cols` values (n, m, ...), then m rows of `cols` values.
std::vector<Row> read_table(std::string_view text, std::size_t header_cols, std::size_t cols, const char* what) {
  auto rows = read_rows(text);
  if (rows.empty()) throw ParseError(1, std::string("empty ") + what + " file");
  const Row& head = rows[0];
  if (head.v.size() != header_cols) {
    throw ParseError(head.line, std::string("malformed header: expected ") + std::to_string(header_cols) + " values");
  }
  for (auto x : head.v) {
    if (x < 0) throw ParseError(head.line, "malformed header: negative count");
  }
  const auto m = static_cast<std::size_t>(head.v[1]);
  if (rows.size() - 1 != m) {
    std::size_t line = rows.size() - 1 > m ? rows[m + 1].line : rows.back().line;
    throw ParseError(line, "header announces " + std::to_string(m) + " edges, file has " +
                               std::to_string(rows.size() - 1));
  }
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i].v.size() != cols) {
      throw ParseError(rows[i].line, "expected " + std::to_string(cols) + " values per edge line");
    }
  }
  return rows;
}

// Builds the graph; edge i of the input sits on rows[i + 1].
Graph build_graph(std::size_t n, std::vector<Edge> edges, const std::vector<Row>* rows) {
  try {
    return Graph::from_edges(n, std::move(edges));
  } catch (const InvalidEdgeError& e) {
    if (rows) throw ParseError((*rows)[e.index() + 1].line, e.what());
    throw Error(ErrorCode::Parse, "edge " + std::to_string(e.index()) + ": " + e.what());
  }
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::Parse, std::string("invalid JSON: ") + e.what());
  }
}

template <class F>
auto json_field(const char* what, F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Parse, std::string("bad ") + what + ": " + e.what());
  }
}

std::pair<std::size_t, std::vector<Edge>> json_edges(const json& j) {
  auto n = json_field("\"n\"", [&] { return j.at("n").get<std::size_t>(); });
  auto raw = json_field("\"edges\"", [&] { return j.at("edges").get<std::vector<std::array<std::uint32_t, 2>>>(); });
  std::vector<Edge> edges;
  for (const auto& e : raw) edges.push_back({e[0], e[1]});
  return {n, std::move(edges)};
}

json edges_json(const Graph& g) {
  json edges = json::array();
  for (const auto& e : g.edges()) edges.push_back({e.u, e.v});
  return edges;
}

std::string header(const Graph& g) {
  return std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count());
}

// Maps colours given in input order onto the canonical edge order.
template <class T>
std::vector<T> align(const Graph& g, const std::vector<Edge>& input, const std::vector<T>& values) {
  std::vector<T> out(g.edge_count());
  for (std::size_t i = 0; i < input.size(); ++i) out[*g.find_edge(input[i].u, input[i].v)] = values[i];
  return out;
}

}  // namespace

Graph parse_graph(std::string_view text) {
  if (is_json(text)) {
    auto [n, edges] = json_edges(parse_json(text));
    return build_graph(n, std::move(edges), nullptr);
  }
  auto rows = read_table(text, 2, 2, "graph");
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < rows.size(); ++i) edges.push_back({vertex_id(rows[i], 0), vertex_id(rows[i], 1)});
  return build_graph(static_cast<std::size_t>(rows[0].v[0]), std::move(edges), &rows);
}

std::string serialize_graph(const Graph& g) {
  std::ostringstream out;
  out << header(g) << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

std::string serialize_graph_json(const Graph& g) {
  json j{{"n", g.vertex_count()}, {"edges", edges_json(g)}};
  return j.dump() + "\n";
}

EdgeColouring parse_colouring(std::string_view text) {
  if (is_json(text)) {
    auto j = parse_json(text);
    auto [n, edges] = json_edges(j);
    auto colours = json_field("\"colours\"", [&] { return j.at("colours").get<std::vector<Colour>>(); });
    if (colours.size() != edges.size()) throw Error(ErrorCode::Parse, "\"colours\" and \"edges\" differ in length");
    auto g = build_graph(n, edges, nullptr);
    auto aligned = align(g, edges, colours);
    return EdgeColouring(std::move(g), std::move(aligned));
  }
  auto rows = read_table(text, 2, 3, "colouring");
  std::vector<Edge> edges;
  std::vector<Colour> colours;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    edges.push_back({vertex_id(rows[i], 0), vertex_id(rows[i], 1)});
    colours.push_back(rows[i].v[2]);
  }
  auto g = build_graph(static_cast<std::size_t>(rows[0].v[0]), edges, &rows);
  auto aligned = align(g, edges, colours);
  return EdgeColouring(std::move(g), std::move(aligned));
}

std::string serialize_colouring(const EdgeColouring& c) {
  std::ostringstream out;
  out << header(c.graph) << '\n';
  for (EdgeId e = 0; e < c.graph.edge_count(); ++e) {
    out << c.graph.edge(e).u << ' ' << c.graph.edge(e).v << ' ' << c.colours[e] << '\n';
  }
  return out.str();
}

std::string serialize_colouring_json(const EdgeColouring& c) {
  json j{{"n", c.graph.vertex_count()}, {"edges", edges_json(c.graph)}, {"colours", c.colours}};
  return j.dump() + "\n";
}

EdgePartition parse_partition(std::string_view text) {
  if (is_json(text)) {
    auto j = parse_json(text);
    auto [n, edges] = json_edges(j);
    auto parts = json_field("\"parts\"", [&] { return j.at("parts").get<std::vector<std::uint32_t>>(); });
    if (parts.size() != edges.size()) throw Error(ErrorCode::Parse, "\"parts\" and \"edges\" differ in length");
    std::size_t count = 0;
    for (auto p : parts) count = std::max<std::size_t>(count, p + 1);
    if (j.contains("part_count")) {
      count = json_field("\"part_count\"", [&] { return j.at("part_count").get<std::size_t>(); });
    }
    auto g = build_graph(n, edges, nullptr);
    auto aligned = align(g, edges, parts);
    return EdgePartition(std::move(g), std::move(aligned), count);
  }
  auto rows = read_table(text, 3, 3, "partition");
  std::vector<Edge> edges;
  std::vector<std::uint32_t> parts;
  const auto count = static_cast<std::size_t>(rows[0].v[2]);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    edges.push_back({vertex_id(rows[i], 0), vertex_id(rows[i], 1)});
    if (rows[i].v[2] < 0 || static_cast<std::size_t>(rows[i].v[2]) >= count) {
      throw ParseError(rows[i].line, "part index " + std::to_string(rows[i].v[2]) + " out of range");
    }
    parts.push_back(static_cast<std::uint32_t>(rows[i].v[2]));
  }
  auto g = build_graph(static_cast<std::size_t>(rows[0].v[0]), edges, &rows);
  auto aligned = align(g, edges, parts);
  return EdgePartition(std::move(g), std::move(aligned), count);
}

std::string serialize_partition(const EdgePartition& p) {
  std::ostringstream out;
  out << header(p.graph) << ' ' << p.part_count << '\n';
  for (EdgeId e = 0; e < p.graph.edge_count(); ++e) {
    out << p.graph.edge(e).u << ' ' << p.graph.edge(e).v << ' ' << p.part_of[e] << '\n';
  }
  return out.str();
}

std::string serialize_partition_json(const EdgePartition& p) {
  json j{{"n", p.graph.vertex_count()},
         {"edges", edges_json(p.graph)},
         {"parts", p.part_of},
         {"part_count", p.part_count}};
  return j.dump() + "\n";
}

LayeredBipartite parse_layered(std::string_view text) {
  auto j = parse_json(text);
  auto [n, edges] = json_edges(j);
  LayeredBipartite out;
  out.graph = build_graph(n, edges, nullptr);
  out.params.n = json_field("\"b_size\"", [&] { return j.at("b_size").get<std::size_t>(); });
  auto sizes = json_field("\"layer_sizes\"", [&] { return j.at("layer_sizes").get<std::vector<std::size_t>>(); });
  out.params.r = sizes.size();
  if (j.contains("params")) {
    const auto& p = j.at("params");
    json_field("\"params\"", [&] {
      out.params.delta = p.at("delta").get<double>();
      out.params.epsilon = p.at("epsilon").get<double>();
      out.params.seed = p.at("seed").get<std::uint64_t>();
      return 0;
    });
  }
  out.layer_start.push_back(out.params.n);
  for (auto s : sizes) out.layer_start.push_back(out.layer_start.back() + s);
  if (out.layer_start.back() != n) throw Error(ErrorCode::Parse, "b_size and layer_sizes do not add up to n");
  std::vector<std::uint32_t> tags;
  if (j.contains("layers")) tags = json_field("\"layers\"", [&] { return j.at("layers").get<std::vector<std::uint32_t>>(); });
  if (!tags.empty() && tags.size() != edges.size()) throw Error(ErrorCode::Parse, "\"layers\" and \"edges\" differ in length");
  auto aligned = tags.empty() ? tags : align(out.graph, edges, tags);
  for (EdgeId e = 0; e < out.graph.edge_count(); ++e) {
    const auto& ed = out.graph.edge(e);
    if (ed.u >= out.params.n || ed.v < out.params.n) {
      throw Error(ErrorCode::Parse, "edge (" + std::to_string(ed.u) + ", " + std::to_string(ed.v) +
                                        ") does not join B to a layer");
    }
    auto layer = static_cast<std::uint32_t>(out.layer_of_vertex(ed.v));
    if (!aligned.empty() && aligned[e] != layer) {
      throw Error(ErrorCode::Parse, "layer tag of edge (" + std::to_string(ed.u) + ", " + std::to_string(ed.v) +
                                        ") disagrees with its endpoint");
    }
    out.layer_of.push_back(layer);
  }
  return out;
}

std::string serialize_layered(const LayeredBipartite& g) {
  std::vector<std::size_t> sizes;
  for (std::size_t i = 1; i < g.layer_start.size(); ++i) sizes.push_back(g.layer_start[i] - g.layer_start[i - 1]);
  json j{{"n", g.graph.vertex_count()},
         {"edges", edges_json(g.graph)},
         {"layers", g.layer_of},
         {"b_size", g.params.n},
         {"layer_sizes", sizes},
         {"params",
          {{"r", g.params.r},
           {"n", g.params.n},
           {"delta", g.params.delta},
           {"epsilon", g.params.epsilon},
           {"seed", g.params.seed}}}};
  return j.dump() + "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::Io, "cannot write '" + path + "'");
  out << content;
  if (!out) throw Error(ErrorCode::Io, "write to '" + path + "' failed");
}

}  // namespace ilab
