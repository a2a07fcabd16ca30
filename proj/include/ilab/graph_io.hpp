#pragma once

#include <string>
#include <string_view>

#include "ilab/colouring.hpp"
#include "ilab/graph.hpp"
#include "ilab/randlab.hpp"

namespace ilab {

// Text: "n m" then m lines "u v"; blank lines and '#' comments are skipped.
// JSON: {"n": n, "edges": [[u, v], ...]}. Input starting with '{' is JSON.
Graph parse_graph(std::string_view text);
std::string serialize_graph(const Graph& g);
std::string serialize_graph_json(const Graph& g);

// Text adds a colour column; JSON adds "colours" aligned with "edges".
EdgeColouring parse_colouring(std::string_view text);
std::string serialize_colouring(const EdgeColouring& c);
std::string serialize_colouring_json(const EdgeColouring& c);

// Text: "n m k" then "u v part"; JSON: {"n", "edges", "parts", "part_count"}.
EdgePartition parse_partition(std::string_view text);
std::string serialize_partition(const EdgePartition& p);
std::string serialize_partition_json(const EdgePartition& p);

// JSON with "layers" (per edge), "b_size", "layer_sizes" and "params".
LayeredBipartite parse_layered(std::string_view text);
std::string serialize_layered(const LayeredBipartite& g);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

}  // namespace ilab
