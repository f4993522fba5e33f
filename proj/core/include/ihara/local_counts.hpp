#pragma once

#include <vector>

#include "ihara/geodesics.hpp"
#include "ihara/graph.hpp"
#include "ihara/numbers.hpp"
#include "ihara/series.hpp"

namespace ihara {

// Per-vertex counting formulas. Everything here consumes geodesic-loop
// counts (from enumeration) and produces closed-geodesic data through closed
// formulas, so results can be compared against directly enumerated closed
// geodesics. Valid on multigraphs; all entry points insist on minimum
// degree 2, the standing assumption of the closed formulas.

// N_1..N_max_length at x0 computed from loop counts alone:
//   N_1 = c_1, N_2 = c_2,
//   N_m = c_m - (deg(x0)-2) sum_{i=1}^{ceil(m/2)-1} c_{m-2i}
//             + sum_{i=1}^{ceil(m/2)-1} i (Lap c_{m-2i})(x0)   for m >= 3.
// Index 0 of the result is unused (zero).
std::vector<Int> closed_from_loop_counts(const Graph& g, Vertex x0, Vertex max_length,
                                         const OracleLimits& limits = {});

// R_m = sum_{i=1}^{ceil(m/2)-1} i (Lap c_{m-2i})(x), zero for m <= 2. The
// diagonal correction entering both the series identities and the zeta
// assembly; vanishes on vertex-transitive graphs.
std::vector<Int> correction_sequence(const Graph& g, Vertex x0, Vertex max_length,
                                     const OracleLimits& limits = {});

struct LocalSeriesBundle {
  Vertex base_vertex = 0;
  long order = 0;
  Vertex degree = 0;
  ScalarSeries loop_series;       // sum_m c_m(x0) u^m, m >= 1
  ScalarSeries closed_series;     // sum_m N_m(x0) u^m (enumerated)
  ScalarSeries laplacian_series;  // sum_m (Lap c_m)(x0) u^m
  ScalarSeries correction_series; // sum_m R_m u^m from the defining sums
  ScalarSeries corrected_series;  // sum_m b_m u^m from the defining sums
  // increments: index m holds R_m - R_{m-2} for m >= 3, R_m below that
  std::vector<Int> correction_increments;
};

LocalSeriesBundle local_series_bundle(const Graph& g, Vertex x0, long order,
                                      const OracleLimits& limits = {});

// The same series through their rational closed forms; each must agree with
// the direct sums in the bundle coefficient by coefficient.
ScalarSeries correction_series_rational_form(const LocalSeriesBundle& bundle);
ScalarSeries corrected_series_rational_form(const LocalSeriesBundle& bundle);

// Closed-geodesic series from the loop series through the full generating
// identity:
//   N(u) = (1-u^2)^{-2} [ C(u) - deg u^2 C(u) + u^2 (Lap C)(u) + (deg-1) u^4 C(u) ].
ScalarSeries closed_series_rational_form(const LocalSeriesBundle& bundle);

}  // namespace ihara
