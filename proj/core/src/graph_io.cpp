#include "ihara/graph_io.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "ihara/errors.hpp"

namespace ihara {

namespace {

using json = nlohmann::ordered_json;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

Graph read_graph_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("graph JSON parse error: ") + e.what());
  }
  if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
    throw InputError("graph JSON must be an object with 'vertices' and 'edges'");
  std::string name = j.value("name", std::string("graph"));
  if (!j["vertices"].is_number_integer())
    throw InputError("'vertices' must be an integer");
  Vertex n = j["vertices"].get<Vertex>();
  if (!j["edges"].is_array()) throw InputError("'edges' must be an array of pairs");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (const auto& item : j["edges"]) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer() ||
        !item[1].is_number_integer())
      throw InputError("each edge must be a pair of integers");
    edges.emplace_back(item[0].get<Vertex>(), item[1].get<Vertex>());
  }
  return build_graph(std::move(name), n, std::move(edges));
}

Graph read_graph_file(const std::string& path) {
  return read_graph_json(slurp(path));
}

std::string write_graph_json(const Graph& g) {
  json j;
  j["name"] = g.name();
  j["vertices"] = g.vertex_count();
  json edges = json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back(json::array({u, v}));
  j["edges"] = std::move(edges);
  return j.dump(2) + "\n";
}

void write_graph_file(const Graph& g, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write file: " + path);
  out << write_graph_json(g);
}

}  // namespace ihara
