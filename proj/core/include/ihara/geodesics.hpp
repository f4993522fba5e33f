#pragma once

#include <vector>

#include "ihara/errors.hpp"
#include "ihara/graph.hpp"
#include "ihara/matrix.hpp"
#include "ihara/numbers.hpp"

namespace ihara {

// Brute-force enumeration of non-backtracking paths. This module is the
// reference implementation: it derives nothing from the closed-form
// machinery elsewhere in the library, so the two can be compared.
//
// Terminology used throughout:
//   geodesic        path with no backtracking (never follows a half-edge by
//                   its own reversal)
//   geodesic loop   closed geodesic path based at a vertex; may have a tail,
//                   i.e. the last half-edge may be the reversal of the first
//   closed geodesic geodesic loop without a tail

struct OracleLimits {
  Vertex max_length = 16;
  // Refuse enumerations whose estimated path count M*(M-1)^(L-1) exceeds this.
  double work_cap = 1e9;
};

void check_enumeration_budget(const Graph& g, Vertex length, const OracleLimits& limits);

struct CountTable {
  Vertex base_vertex = 0;
  Vertex max_length = 0;
  // loops[m] = geodesic loops of length m at base_vertex; loops[0] = 1
  // (a vertex counts as a path of length 0).
  std::vector<Int> loops;
  // closed[m] = closed geodesics of length m at base_vertex; closed[0] = 0.
  std::vector<Int> closed;
};

CountTable count_closed_geodesics(const Graph& g, Vertex x0, Vertex max_length,
                                  const OracleLimits& limits = {});

// One enumeration pass from x0 shared by several consumers: path counts by
// endpoint for every length up to max_length, plus the loop/closed tallies.
struct VertexScan {
  Vertex base_vertex = 0;
  Vertex max_length = 0;
  // path_counts[m][y] = geodesic paths of length m from base_vertex to y
  std::vector<std::vector<Int>> path_counts;
  std::vector<Int> loops;
  std::vector<Int> closed;
};

VertexScan scan_geodesics(const Graph& g, Vertex x0, Vertex max_length,
                          const OracleLimits& limits = {});

// (m, x, y) -> number of geodesic paths of length m from x to y.
Matrix<Int> geodesic_count_matrix(const Graph& g, Vertex length,
                                  const OracleLimits& limits = {});
std::vector<Matrix<Int>> geodesic_count_matrices(const Graph& g, Vertex max_length,
                                                 const OracleLimits& limits = {});

// Loop counts refined by an incident half-edge. With o(e) = x the counts are
// anchored on the first half-edge, otherwise (t(e) = x) on the last one.
// tailed counts geodesic loops whose first half-edge is e and whose last is
// reversal(e); it requires o(e) = x.
struct EdgeRefinedCounts {
  Int through = 0;
  Int closed_through = 0;
  Int tailed = 0;
};

EdgeRefinedCounts edge_refined_counts(const Graph& g, Vertex x, HalfEdge e,
                                      Vertex length, const OracleLimits& limits = {});

// Residual of the two-step recursion tying loop counts to closed-geodesic
// counts (length m versus m-2); zero on every graph. All terms come from
// enumeration, so a zero residual is an internal consistency statement about
// the oracle itself. Requires m >= 3.
Int counting_recursion_residual(const Graph& g, Vertex x0, Vertex m,
                                const OracleLimits& limits = {});

namespace detail {

template <typename Visitor>
void descend(const Graph& g, HalfEdge first, HalfEdge last, Vertex depth,
             Vertex max_length, Visitor& visit) {
  Vertex v = g.terminus(last);
  visit(depth, first, last, v);
  if (depth == max_length) return;
  const HalfEdge back = g.reversal(last);
  for (HalfEdge e : g.out_edges(v))
    if (e != back) descend(g, first, e, depth + 1, max_length, visit);
}

}  // namespace detail

// Calls visit(length, first, last, end_vertex) for every geodesic path of
// length 1..max_length whose first half-edge is `first`.
template <typename Visitor>
void enumerate_from_edge(const Graph& g, HalfEdge first, Vertex max_length,
                         Visitor&& visit) {
  if (max_length < 1) return;
  detail::descend(g, first, first, 1, max_length, visit);
}

// Same, over all geodesic paths starting at x0.
template <typename Visitor>
void enumerate_geodesics(const Graph& g, Vertex x0, Vertex max_length,
                         Visitor&& visit) {
  for (HalfEdge e : g.out_edges(x0)) enumerate_from_edge(g, e, max_length, visit);
}

}  // namespace ihara
