#include "ihara/zeta.hpp"

#include <cmath>
#include <cstddef>

#include "ihara/errors.hpp"
#include "ihara/local_counts.hpp"
#include "ihara/operators.hpp"
#include "ihara/spectral.hpp"

namespace ihara {

namespace {

ScalarSeries exp_weighted_counts(const std::vector<Int>& counts, long order) {
  ScalarSeries arg(order);
  for (long m = 1; m <= order; ++m) {
    const auto& n = counts[static_cast<std::size_t>(m)];
    if (n != 0) arg.coeff(m) = Rational(n) / m;
  }
  return series_exp(arg);
}

ScalarSeries one_minus_u2(long order) {
  ScalarSeries s(order);
  s.coeff(0) = 1;
  if (order >= 2) s.coeff(2) = -1;
  return s;
}

ScalarSeries ones_series(long order) {
  ScalarSeries s(order);
  s.coeff(0) = 1;
  return s;
}

void check_vertex(const Graph& g, Vertex x, const char* what) {
  if (x < 0 || x >= g.vertex_count()) {
    throw InputError(std::string(what) + " out of range");
  }
}

}  // namespace

ScalarSeries zeta_from_counts(const std::vector<Int>& closed_counts, long order) {
  if (static_cast<long>(closed_counts.size()) <= order) {
    throw InputError("zeta_from_counts: not enough count values for the order");
  }
  return exp_weighted_counts(closed_counts, order);
}

ScalarSeries zeta_from_counts(const Graph& g, Vertex x0, long order,
                              const OracleLimits& limits) {
  check_vertex(g, x0, "base vertex");
  const CountTable table = count_closed_geodesics(g, x0, order, limits);
  return exp_weighted_counts(table.closed, order);
}

FourFactorZeta zeta_four_factor(const Graph& g, Vertex x0, Vertex x, long order,
                                const OracleLimits& limits) {
  require_simple(g, "four-factor zeta");
  require_min_degree(g, 2, "four-factor zeta");
  check_vertex(g, x0, "base vertex");
  check_vertex(g, x, "target vertex");

  FourFactorZeta z;

  if (x == x0) {
    const long deg = static_cast<long>(g.degree(x0));
    z.prefactor = binomial_power(one_minus_u2(order), Rational(-(deg - 2), 2));
  } else {
    z.prefactor = ones_series(order);
  }

  const OperatorSet ops = build_operators(g);
  const RationalMatrixSeries w = bass_quadratic(ops, order);
  const ScalarSeries log_entry =
      entry_series(series_log(w), static_cast<std::size_t>(x),
                   static_cast<std::size_t>(x0));
  z.determinant_factor = series_exp(scaled(log_entry, Rational(-1)));

  const RationalMatrixSeries correction = commutator_correction_series(g, order);
  z.commutator_factor = series_exp(
      entry_series(correction, static_cast<std::size_t>(x),
                   static_cast<std::size_t>(x0)));

  if (x == x0) {
    const std::vector<Int> r = correction_sequence(g, x0, order, limits);
    ScalarSeries arg(order);
    for (long m = 3; m <= order; ++m) {
      const auto& rm = r[static_cast<std::size_t>(m)];
      if (rm != 0) arg.coeff(m) = Rational(rm) / m;
    }
    z.correction_factor = series_exp(arg);
  } else {
    z.correction_factor = ones_series(order);
  }

  z.product = z.prefactor * z.determinant_factor * z.commutator_factor *
              z.correction_factor;
  return z;
}

std::string to_string(ZetaMethod method) {
  switch (method) {
    case ZetaMethod::counts: return "counts";
    case ZetaMethod::loop_series: return "loop_series";
    case ZetaMethod::four_factor: return "four_factor";
    case ZetaMethod::spectral: return "spectral";
    case ZetaMethod::local_det: return "local_det";
    case ZetaMethod::global_det: return "global_det";
  }
  return "unknown";
}

ZetaMethod zeta_method_from_string(const std::string& name) {
  for (ZetaMethod method : all_zeta_methods()) {
    if (to_string(method) == name) return method;
  }
  throw InputError("unknown zeta method \"" + name + "\"");
}

std::vector<ZetaMethod> all_zeta_methods() {
  return {ZetaMethod::counts,   ZetaMethod::loop_series, ZetaMethod::four_factor,
          ZetaMethod::spectral, ZetaMethod::local_det,   ZetaMethod::global_det};
}

std::vector<ZetaMethod> applicable_methods(const Graph& g) {
  std::vector<ZetaMethod> methods{ZetaMethod::counts};
  const bool deg_ok = g.min_degree() >= 2;
  if (deg_ok) methods.push_back(ZetaMethod::loop_series);
  if (g.is_simple() && deg_ok) {
    methods.push_back(ZetaMethod::four_factor);
    if (g.is_regular()) {
      methods.push_back(ZetaMethod::spectral);
      methods.push_back(ZetaMethod::local_det);
    }
    methods.push_back(ZetaMethod::global_det);
  }
  return methods;
}

namespace {

double max_abs_diff(const FloatSeries& a, const FloatSeries& b) {
  double worst = 0;
  for (long k = 0; k <= a.order(); ++k) {
    const double d = std::abs(a.coeff(k) - b.coeff(k));
    if (d > worst) worst = d;
  }
  return worst;
}

double max_abs_coeff(const ScalarSeries& a) {
  Rational worst = 0;
  for (long k = 0; k <= a.order(); ++k) {
    Rational c = a.coeff(k);
    if (c < 0) c = -c;
    if (c > worst) worst = c;
  }
  return to_double(worst);
}

MethodComparison compare_pair(const std::string& name_a, const MethodSeries& a,
                              const std::string& name_b, const MethodSeries& b) {
  MethodComparison cmp;
  cmp.a = name_a;
  cmp.b = name_b;
  cmp.exact = a.exact && b.exact;
  if (cmp.exact) {
    const ScalarSeries diff = a.rational - b.rational;
    cmp.max_deviation = max_abs_coeff(diff);
    cmp.pass = diff.is_zero();
  } else {
    cmp.max_deviation = max_abs_diff(a.approx, b.approx);
    cmp.pass = cmp.max_deviation <= 1e-8;
  }
  return cmp;
}

MethodSeries exact_entry(ZetaMethod method, ScalarSeries series) {
  MethodSeries entry;
  entry.method = method;
  entry.exact = true;
  entry.approx = to_float_series(series);
  entry.rational = std::move(series);
  return entry;
}

MethodSeries float_entry(ZetaMethod method, FloatSeries series) {
  MethodSeries entry;
  entry.method = method;
  entry.exact = false;
  entry.approx = std::move(series);
  return entry;
}

}  // namespace

namespace {

MethodSeries refused_entry(ZetaMethod method, const std::string& reason) {
  MethodSeries entry;
  entry.method = method;
  entry.refused = true;
  entry.refusal_reason = reason;
  return entry;
}

MethodSeries run_method(const Graph& g, Vertex x0, long order, ZetaMethod method,
                        const OracleLimits& limits) {
  try {
    switch (method) {
      case ZetaMethod::counts:
        return exact_entry(method, zeta_from_counts(g, x0, order, limits));
      case ZetaMethod::loop_series:
        return exact_entry(
            method, zeta_from_counts(closed_from_loop_counts(g, x0, order, limits),
                                     order));
      case ZetaMethod::four_factor:
        return exact_entry(method,
                           zeta_four_factor(g, x0, x0, order, limits).product);
      case ZetaMethod::spectral:
        return float_entry(method, zeta_spectral(g, x0, x0, order, limits));
      case ZetaMethod::local_det:
        return float_entry(method,
                           zeta_local_determinant(g, x0, order, limits));
      case ZetaMethod::global_det:
        return exact_entry(method, zeta_global_determinant(g, order));
    }
    throw InputError("unknown zeta method");
  } catch (const AssumptionError& e) {
    return refused_entry(method, e.what());
  }
}

}  // namespace

ZetaReport compare_methods(const Graph& g, Vertex x0, long order,
                           const std::vector<ZetaMethod>& methods,
                           const OracleLimits& limits) {
  check_vertex(g, x0, "base vertex");

  ZetaReport report;
  report.graph_name = g.name();
  report.base_vertex = x0;
  report.target_vertex = x0;
  report.order = order;

  for (ZetaMethod method : methods) {
    report.series.push_back(run_method(g, x0, order, method, limits));
  }

  // Pairwise comparisons among the diagonal methods; the whole-graph series
  // is a different object and gets its own check below.
  std::vector<const MethodSeries*> diagonal;
  const MethodSeries* global = nullptr;
  for (const auto& entry : report.series) {
    if (entry.refused) continue;
    if (entry.method == ZetaMethod::global_det) {
      global = &entry;
    } else {
      diagonal.push_back(&entry);
    }
  }

  for (std::size_t i = 0; i < diagonal.size(); ++i) {
    for (std::size_t j = i + 1; j < diagonal.size(); ++j) {
      report.comparisons.push_back(
          compare_pair(to_string(diagonal[i]->method), *diagonal[i],
                       to_string(diagonal[j]->method), *diagonal[j]));
    }
  }

  if (global != nullptr) {
    std::vector<Int> totals(static_cast<std::size_t>(order) + 1, Int(0));
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      const CountTable table = count_closed_geodesics(g, v, order, limits);
      for (long m = 1; m <= order; ++m) {
        totals[static_cast<std::size_t>(m)] +=
            table.closed[static_cast<std::size_t>(m)];
      }
    }
    const MethodSeries total_entry =
        exact_entry(ZetaMethod::counts, zeta_from_counts(totals, order));
    report.comparisons.push_back(
        compare_pair("global_det", *global, "counts_total", total_entry));
  }

  for (const auto& cmp : report.comparisons) {
    if (!cmp.pass) report.all_pass = false;
  }
  return report;
}

ZetaReport compare_methods(const Graph& g, Vertex x0, long order,
                           const OracleLimits& limits) {
  return compare_methods(g, x0, order, all_zeta_methods(), limits);
}

}  // namespace ihara
