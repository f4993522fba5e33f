#pragma once

#include <string>

#include "ihara/graph.hpp"

namespace ihara {

// Graph files: {"name": string, "vertices": integer, "edges": [[u, v], ...]}
// Repeated pairs are multiple edges, [v, v] is a loop. Edge order is
// preserved on both read and write, so write(read(f)) reproduces a file this
// library emitted byte for byte.
Graph read_graph_json(const std::string& text);
Graph read_graph_file(const std::string& path);

std::string write_graph_json(const Graph& g);
void write_graph_file(const Graph& g, const std::string& path);

}  // namespace ihara
