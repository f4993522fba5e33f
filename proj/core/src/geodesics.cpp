#include "ihara/geodesics.hpp"

#include <cmath>
#include <cstdio>
#include <string>

namespace ihara {

namespace {

std::string compact(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4g", v);
  return buf;
}

}  // namespace

void check_enumeration_budget(const Graph& g, Vertex length, const OracleLimits& limits) {
  if (length < 0) throw InputError("path length must be nonnegative");
  if (length > limits.max_length)
    throw WorkCapError(static_cast<double>(length), static_cast<double>(limits.max_length),
                       "enumeration length " + std::to_string(length) +
                           " exceeds the configured cap " +
                           std::to_string(limits.max_length));
  const double M = static_cast<double>(g.max_degree());
  double estimate = 1.0;
  if (length >= 1 && M >= 1.0)
    estimate = M * std::pow(std::max(M - 1.0, 1.0), static_cast<double>(length - 1));
  if (estimate > limits.work_cap)
    throw WorkCapError(estimate, limits.work_cap,
                       "estimated enumeration work " + compact(estimate) +
                           " exceeds the cap " + compact(limits.work_cap));
}

static void check_vertex(const Graph& g, Vertex x) {
  if (x < 0 || x >= g.vertex_count()) throw InputError("vertex id out of range");
}

VertexScan scan_geodesics(const Graph& g, Vertex x0, Vertex max_length,
                          const OracleLimits& limits) {
  check_vertex(g, x0);
  check_enumeration_budget(g, max_length, limits);
  VertexScan scan;
  scan.base_vertex = x0;
  scan.max_length = max_length;
  const std::size_t n = static_cast<std::size_t>(g.vertex_count());
  scan.path_counts.assign(static_cast<std::size_t>(max_length) + 1,
                          std::vector<Int>(n, Int(0)));
  scan.loops.assign(static_cast<std::size_t>(max_length) + 1, Int(0));
  scan.closed.assign(static_cast<std::size_t>(max_length) + 1, Int(0));
  scan.path_counts[0][static_cast<std::size_t>(x0)] = 1;
  scan.loops[0] = 1;
  enumerate_geodesics(g, x0, max_length,
                      [&](Vertex len, HalfEdge first, HalfEdge last, Vertex end) {
                        scan.path_counts[static_cast<std::size_t>(len)]
                                        [static_cast<std::size_t>(end)] += 1;
                        if (end == x0) {
                          scan.loops[static_cast<std::size_t>(len)] += 1;
                          if (last != g.reversal(first))
                            scan.closed[static_cast<std::size_t>(len)] += 1;
                        }
                      });
  return scan;
}

CountTable count_closed_geodesics(const Graph& g, Vertex x0, Vertex max_length,
                                  const OracleLimits& limits) {
  check_vertex(g, x0);
  check_enumeration_budget(g, max_length, limits);
  CountTable table;
  table.base_vertex = x0;
  table.max_length = max_length;
  table.loops.assign(static_cast<std::size_t>(max_length) + 1, Int(0));
  table.closed.assign(static_cast<std::size_t>(max_length) + 1, Int(0));
  table.loops[0] = 1;
  enumerate_geodesics(g, x0, max_length,
                      [&](Vertex len, HalfEdge first, HalfEdge last, Vertex end) {
                        if (end != x0) return;
                        table.loops[static_cast<std::size_t>(len)] += 1;
                        if (last != g.reversal(first))
                          table.closed[static_cast<std::size_t>(len)] += 1;
                      });
  return table;
}

Matrix<Int> geodesic_count_matrix(const Graph& g, Vertex length,
                                  const OracleLimits& limits) {
  check_enumeration_budget(g, length, limits);
  const std::size_t n = static_cast<std::size_t>(g.vertex_count());
  Matrix<Int> out(n, n);
  if (length == 0) return Matrix<Int>::identity(n);
  for (Vertex x = 0; x < g.vertex_count(); ++x) {
    enumerate_geodesics(g, x, length,
                        [&](Vertex len, HalfEdge, HalfEdge, Vertex end) {
                          if (len == length)
                            out(static_cast<std::size_t>(x),
                                static_cast<std::size_t>(end)) += 1;
                        });
  }
  return out;
}

std::vector<Matrix<Int>> geodesic_count_matrices(const Graph& g, Vertex max_length,
                                                 const OracleLimits& limits) {
  check_enumeration_budget(g, max_length, limits);
  const std::size_t n = static_cast<std::size_t>(g.vertex_count());
  std::vector<Matrix<Int>> out(static_cast<std::size_t>(max_length) + 1,
                               Matrix<Int>(n, n));
  out[0] = Matrix<Int>::identity(n);
  for (Vertex x = 0; x < g.vertex_count(); ++x) {
    enumerate_geodesics(g, x, max_length,
                        [&](Vertex len, HalfEdge, HalfEdge, Vertex end) {
                          out[static_cast<std::size_t>(len)](
                              static_cast<std::size_t>(x),
                              static_cast<std::size_t>(end)) += 1;
                        });
  }
  return out;
}

EdgeRefinedCounts edge_refined_counts(const Graph& g, Vertex x, HalfEdge e,
                                      Vertex length, const OracleLimits& limits) {
  check_vertex(g, x);
  if (e < 0 || e >= g.half_edge_count()) throw InputError("half-edge id out of range");
  if (g.origin(e) != x && g.terminus(e) != x)
    throw InputError("half-edge is not incident to the vertex");
  if (length < 1) throw InputError("edge-refined counts need length >= 1");
  check_enumeration_budget(g, length, limits);

  EdgeRefinedCounts counts;
  const bool anchor_first = g.origin(e) == x;
  if (anchor_first) {
    enumerate_from_edge(g, e, length,
                        [&](Vertex len, HalfEdge first, HalfEdge last, Vertex end) {
                          if (len != length || end != x) return;
                          counts.through += 1;
                          if (last != g.reversal(first))
                            counts.closed_through += 1;
                          else
                            counts.tailed += 1;
                        });
  } else {
    enumerate_geodesics(g, x, length,
                        [&](Vertex len, HalfEdge first, HalfEdge last, Vertex end) {
                          if (len != length || end != x || last != e) return;
                          counts.through += 1;
                          if (last != g.reversal(first)) counts.closed_through += 1;
                        });
  }
  return counts;
}

// Loop counts of length m at a vertex with the first and/or last half-edge
// pinned; shared by the recursion residual below.
namespace {

struct PinnedLoopCounts {
  Int total = 0;        // all geodesic loops of length m at y
  Int first_pinned = 0; // first half-edge == pin_first
  Int last_pinned = 0;  // last half-edge == pin_last
  Int tailed_first = 0; // first == pin_first and last == reversal(pin_first)
};

PinnedLoopCounts pinned_loop_counts(const Graph& g, Vertex y, Vertex m,
                                    HalfEdge pin_first, HalfEdge pin_last) {
  PinnedLoopCounts counts;
  enumerate_geodesics(g, y, m,
                      [&](Vertex len, HalfEdge first, HalfEdge last, Vertex end) {
                        if (len != m || end != y) return;
                        counts.total += 1;
                        if (first == pin_first) {
                          counts.first_pinned += 1;
                          if (last == g.reversal(pin_first)) counts.tailed_first += 1;
                        }
                        if (last == pin_last) counts.last_pinned += 1;
                      });
  return counts;
}

}  // namespace

Int counting_recursion_residual(const Graph& g, Vertex x0, Vertex m,
                                const OracleLimits& limits) {
  check_vertex(g, x0);
  if (m < 3) throw InputError("the counting recursion needs m >= 3");
  check_enumeration_budget(g, m, limits);

  CountTable table = count_closed_geodesics(g, x0, m, limits);
  const Int c_m = table.loops[static_cast<std::size_t>(m)];
  const Int n_m = table.closed[static_cast<std::size_t>(m)];
  const Int c_prev = table.loops[static_cast<std::size_t>(m - 2)];
  const Int n_prev = table.closed[static_cast<std::size_t>(m - 2)];

  Int neighbor_sum = 0;
  Int tail_sum = 0;
  for (HalfEdge e : g.out_edges(x0)) {
    const Vertex y = g.terminus(e);
    CountTable nbr = count_closed_geodesics(g, y, m - 2, limits);
    neighbor_sum += nbr.loops[static_cast<std::size_t>(m - 2)];
    // Loops at the neighbor entering on the reversed half-edge and leaving
    // on e itself: exactly the tailed configurations the recursion removes.
    tail_sum += pinned_loop_counts(g, y, m - 2, g.reversal(e), e).tailed_first;
  }
  // Graph Laplacian applied to the loop-count function, evaluated at x0.
  const Int laplacian = Int(g.degree(x0)) * c_prev - neighbor_sum;

  const Int lhs = c_m - n_m;
  const Int rhs = Int(g.degree(x0)) * c_prev - laplacian - 2 * n_prev - tail_sum;
  return lhs - rhs;
}

}  // namespace ihara
