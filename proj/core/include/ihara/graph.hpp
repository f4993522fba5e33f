#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace ihara {

using Vertex = std::int64_t;
using HalfEdge = std::int64_t;

// Undirected multigraph stored as half-edges. Geometric edge k of the input
// list becomes half-edges 2k (u -> v) and 2k+1 (v -> u), which are each
// other's reversal. A loop [v, v] contributes two half-edges with origin and
// terminus both v, so it adds 2 to deg(v) and 2 to the adjacency diagonal.
class Graph {
 public:
  Graph() = default;
  Graph(std::string name, Vertex vertex_count,
        std::vector<std::pair<Vertex, Vertex>> edges);

  const std::string& name() const { return name_; }
  Vertex vertex_count() const { return vertex_count_; }
  HalfEdge half_edge_count() const { return static_cast<HalfEdge>(origin_.size()); }

  // Geometric edges in construction order (serialization preserves this).
  const std::vector<std::pair<Vertex, Vertex>>& edges() const { return edges_; }
  Vertex edge_count() const { return static_cast<Vertex>(edges_.size()); }

  Vertex origin(HalfEdge e) const { return origin_[static_cast<std::size_t>(e)]; }
  Vertex terminus(HalfEdge e) const { return terminus_[static_cast<std::size_t>(e)]; }
  HalfEdge reversal(HalfEdge e) const { return e ^ 1; }

  // Half-edges with origin x, in construction order.
  const std::vector<HalfEdge>& out_edges(Vertex x) const {
    return out_edges_[static_cast<std::size_t>(x)];
  }
  Vertex degree(Vertex x) const {
    return static_cast<Vertex>(out_edges_[static_cast<std::size_t>(x)].size());
  }

  Vertex max_degree() const;
  Vertex min_degree() const;
  bool is_simple() const { return simple_; }
  bool is_connected() const;
  bool is_regular() const;

 private:
  std::string name_;
  Vertex vertex_count_ = 0;
  std::vector<std::pair<Vertex, Vertex>> edges_;
  std::vector<Vertex> origin_;
  std::vector<Vertex> terminus_;
  std::vector<std::vector<HalfEdge>> out_edges_;
  bool simple_ = true;
};

Graph build_graph(std::string name, Vertex vertex_count,
                  std::vector<std::pair<Vertex, Vertex>> edges);

struct ValidationReport {
  bool connected = false;
  bool simple = false;
  Vertex min_degree = 0;
  Vertex max_degree = 0;
  // vertex_count - geometric edge count
  std::int64_t euler_characteristic = 0;
  // One entry per failed standing assumption, e.g. "degree-1 vertex 3".
  std::vector<std::string> violations;
};

ValidationReport validate(const Graph& g);

struct BallResult {
  Graph graph;
  // new vertex id (BFS discovery order, center first) -> original vertex id
  std::vector<Vertex> vertex_map;
};

// Induced subgraph on vertices within BFS distance r of center.
BallResult ball(const Graph& g, Vertex center, Vertex radius);

// Requires connectivity, min degree >= 2 etc. before running a formula that
// assumes them; throws AssumptionError otherwise.
void require_simple(const Graph& g, const std::string& where);
void require_min_degree(const Graph& g, Vertex min_degree, const std::string& where);
void require_regular(const Graph& g, const std::string& where);

}  // namespace ihara
