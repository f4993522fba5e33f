#pragma once

#include <string>
#include <vector>

#include "ihara/geodesics.hpp"
#include "ihara/graph.hpp"
#include "ihara/series.hpp"

namespace ihara {

// exp(sum_{m>=1} N_m/m u^m) from a table of closed-geodesic counts; the
// reference every other zeta route is measured against.
ScalarSeries zeta_from_counts(const std::vector<Int>& closed_counts, long order);
ScalarSeries zeta_from_counts(const Graph& g, Vertex x0, long order,
                              const OracleLimits& limits = {});

// Two-variable zeta assembled from its four closed-form factors:
//   prefactor    (1-u^2)^{-(deg(x0)-2)/2 [x=x0]}
//   determinant  exp(-[log(I - Au + Qu^2)](x0, x))
//   commutator   exp(G(u)(x0, x))   with G the integrated commutator series
//   correction   exp(sum_{m>=3} R_m(x0,x)/m u^m)
// The product has N_m(x0,x)/m as its log-coefficients; on the diagonal these
// are the closed-geodesic counts at x0.
struct FourFactorZeta {
  ScalarSeries prefactor;
  ScalarSeries determinant_factor;
  ScalarSeries commutator_factor;
  ScalarSeries correction_factor;
  ScalarSeries product;
};

FourFactorZeta zeta_four_factor(const Graph& g, Vertex x0, Vertex x, long order,
                                const OracleLimits& limits = {});

// Routes a zeta series can be computed by. Exact routes agree identically;
// float routes agree with the exact ones to 1e-8 on the coefficients.
enum class ZetaMethod {
  counts,       // exponentiated enumeration counts (diagonal only)
  loop_series,  // closed counts reconstructed from loop counts (diagonal only)
  four_factor,  // closed-form factorization, exact rationals
  spectral,     // Laplacian spectral measure, regular graphs, float
  local_det,    // per-eigenvalue determinant with local multiplicities, float
  global_det,   // whole-graph determinant, exact rationals
};

std::string to_string(ZetaMethod method);
ZetaMethod zeta_method_from_string(const std::string& name);
std::vector<ZetaMethod> all_zeta_methods();
std::vector<ZetaMethod> applicable_methods(const Graph& g);

struct MethodSeries {
  ZetaMethod method = ZetaMethod::counts;
  bool exact = false;          // rational coefficients vs float
  ScalarSeries rational;       // set when exact
  FloatSeries approx;          // set unless refused (exact ones converted)
  bool refused = false;        // method does not apply to this graph
  std::string refusal_reason;
};

struct MethodComparison {
  std::string a;
  std::string b;
  double max_deviation = 0;
  bool exact = false;  // both sides exact: deviation must be identically 0
  bool pass = false;
};

struct ZetaReport {
  std::string graph_name;
  Vertex base_vertex = 0;
  Vertex target_vertex = 0;  // equals base_vertex for diagonal reports
  long order = 0;
  std::vector<MethodSeries> series;
  std::vector<MethodComparison> comparisons;
  bool all_pass = true;
};

// Runs the requested routes at x0 (diagonal) and compares all pairs that
// actually produced a series. A method whose preconditions the graph fails
// is recorded as refused, not treated as an error. The whole-graph
// determinant is compared against counts aggregated over every vertex
// (reported as "counts_total") rather than against per-vertex series.
ZetaReport compare_methods(const Graph& g, Vertex x0, long order,
                           const std::vector<ZetaMethod>& methods,
                           const OracleLimits& limits = {});

// All six methods.
ZetaReport compare_methods(const Graph& g, Vertex x0, long order,
                           const OracleLimits& limits = {});

}  // namespace ihara
