#include "ihara/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <string>

#include "ihara/errors.hpp"

namespace ihara {

Graph::Graph(std::string name, Vertex vertex_count,
             std::vector<std::pair<Vertex, Vertex>> edges)
    : name_(std::move(name)), vertex_count_(vertex_count), edges_(std::move(edges)) {
  if (vertex_count_ < 0) throw InputError("vertex count must be nonnegative");
  origin_.reserve(edges_.size() * 2);
  terminus_.reserve(edges_.size() * 2);
  out_edges_.resize(static_cast<std::size_t>(vertex_count_));
  std::set<std::pair<Vertex, Vertex>> seen;
  for (const auto& [u, v] : edges_) {
    if (u < 0 || u >= vertex_count_ || v < 0 || v >= vertex_count_)
      throw InputError("edge endpoint out of range: [" + std::to_string(u) + ", " +
                       std::to_string(v) + "]");
    HalfEdge forward = static_cast<HalfEdge>(origin_.size());
    origin_.push_back(u);
    terminus_.push_back(v);
    origin_.push_back(v);
    terminus_.push_back(u);
    out_edges_[static_cast<std::size_t>(u)].push_back(forward);
    out_edges_[static_cast<std::size_t>(v)].push_back(forward + 1);
    if (u == v) simple_ = false;
    auto key = std::minmax(u, v);
    if (!seen.insert({key.first, key.second}).second) simple_ = false;
  }
}

Graph build_graph(std::string name, Vertex vertex_count,
                  std::vector<std::pair<Vertex, Vertex>> edges) {
  return Graph(std::move(name), vertex_count, std::move(edges));
}

Vertex Graph::max_degree() const {
  Vertex best = 0;
  for (Vertex v = 0; v < vertex_count_; ++v) best = std::max(best, degree(v));
  return best;
}

Vertex Graph::min_degree() const {
  if (vertex_count_ == 0) return 0;
  Vertex best = degree(0);
  for (Vertex v = 1; v < vertex_count_; ++v) best = std::min(best, degree(v));
  return best;
}

bool Graph::is_connected() const {
  if (vertex_count_ <= 1) return true;
  std::vector<char> seen(static_cast<std::size_t>(vertex_count_), 0);
  std::queue<Vertex> frontier;
  frontier.push(0);
  seen[0] = 1;
  Vertex reached = 1;
  while (!frontier.empty()) {
    Vertex v = frontier.front();
    frontier.pop();
    for (HalfEdge e : out_edges(v)) {
      Vertex w = terminus(e);
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        ++reached;
        frontier.push(w);
      }
    }
  }
  return reached == vertex_count_;
}

bool Graph::is_regular() const {
  return vertex_count_ == 0 || min_degree() == max_degree();
}

ValidationReport validate(const Graph& g) {
  ValidationReport r;
  r.connected = g.is_connected();
  r.simple = g.is_simple();
  r.min_degree = g.min_degree();
  r.max_degree = g.max_degree();
  r.euler_characteristic =
      g.vertex_count() - static_cast<std::int64_t>(g.edges().size());
  if (!r.connected) r.violations.push_back("graph is not connected");
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    Vertex d = g.degree(v);
    if (d < 2)
      r.violations.push_back("degree-" + std::to_string(d) + " vertex " +
                             std::to_string(v));
  }
  return r;
}

BallResult ball(const Graph& g, Vertex center, Vertex radius) {
  if (center < 0 || center >= g.vertex_count())
    throw InputError("ball center out of range");
  if (radius < 0) throw InputError("ball radius must be nonnegative");

  std::vector<Vertex> dist(static_cast<std::size_t>(g.vertex_count()), -1);
  std::vector<Vertex> order;
  std::queue<Vertex> frontier;
  dist[static_cast<std::size_t>(center)] = 0;
  frontier.push(center);
  while (!frontier.empty()) {
    Vertex v = frontier.front();
    frontier.pop();
    order.push_back(v);
    if (dist[static_cast<std::size_t>(v)] == radius) continue;
    for (HalfEdge e : g.out_edges(v)) {
      Vertex w = g.terminus(e);
      if (dist[static_cast<std::size_t>(w)] < 0) {
        dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
        frontier.push(w);
      }
    }
  }

  std::vector<Vertex> new_id(static_cast<std::size_t>(g.vertex_count()), -1);
  for (std::size_t i = 0; i < order.size(); ++i)
    new_id[static_cast<std::size_t>(order[i])] = static_cast<Vertex>(i);

  std::vector<std::pair<Vertex, Vertex>> kept;
  for (const auto& [u, v] : g.edges()) {
    if (new_id[static_cast<std::size_t>(u)] >= 0 &&
        new_id[static_cast<std::size_t>(v)] >= 0)
      kept.emplace_back(new_id[static_cast<std::size_t>(u)],
                        new_id[static_cast<std::size_t>(v)]);
  }

  BallResult out;
  out.graph = Graph(g.name() + "_ball_" + std::to_string(center) + "_" +
                        std::to_string(radius),
                    static_cast<Vertex>(order.size()), std::move(kept));
  out.vertex_map = std::move(order);
  return out;
}

void require_simple(const Graph& g, const std::string& where) {
  if (!g.is_simple())
    throw AssumptionError(AssumptionError::Kind::not_simple,
                          where + ": graph must be simple (no loops or multiple edges)");
}

void require_min_degree(const Graph& g, Vertex min_degree, const std::string& where) {
  if (g.vertex_count() > 0 && g.min_degree() < min_degree)
    throw AssumptionError(AssumptionError::Kind::degree_too_small,
                          where + ": graph has a vertex of degree < " +
                              std::to_string(min_degree));
}

void require_regular(const Graph& g, const std::string& where) {
  if (!g.is_regular())
    throw AssumptionError(AssumptionError::Kind::not_regular,
                          where + ": graph must be regular");
}

}  // namespace ihara
