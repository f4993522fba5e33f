#include "ihara/local_counts.hpp"

#include <utility>

#include "ihara/errors.hpp"

namespace ihara {

namespace {

// Loop counts at x0 and the Laplacian of the loop-count functions at x0,
// which needs the counts at every neighbor as well.
struct LoopData {
  std::vector<Int> loops;      // c_m(x0)
  std::vector<Int> closed;     // N_m(x0)
  std::vector<Int> laplacian;  // (Lap c_m)(x0)
};

LoopData gather_loop_data(const Graph& g, Vertex x0, Vertex max_length,
                          const OracleLimits& limits) {
  CountTable base = count_closed_geodesics(g, x0, max_length, limits);
  LoopData data;
  data.loops = base.loops;
  data.closed = base.closed;
  data.laplacian.assign(static_cast<std::size_t>(max_length) + 1, Int(0));
  for (Vertex m = 0; m <= max_length; ++m)
    data.laplacian[static_cast<std::size_t>(m)] =
        Int(g.degree(x0)) * data.loops[static_cast<std::size_t>(m)];
  for (HalfEdge e : g.out_edges(x0)) {
    CountTable nbr = count_closed_geodesics(g, g.terminus(e), max_length, limits);
    for (Vertex m = 0; m <= max_length; ++m)
      data.laplacian[static_cast<std::size_t>(m)] -=
          nbr.loops[static_cast<std::size_t>(m)];
  }
  return data;
}

std::vector<Int> correction_from(const LoopData& data, Vertex max_length) {
  std::vector<Int> r(static_cast<std::size_t>(max_length) + 1, Int(0));
  for (Vertex m = 3; m <= max_length; ++m) {
    const Vertex terms = (m + 1) / 2 - 1;
    for (Vertex i = 1; i <= terms; ++i)
      r[static_cast<std::size_t>(m)] +=
          Int(i) * data.laplacian[static_cast<std::size_t>(m - 2 * i)];
  }
  return r;
}

}  // namespace

std::vector<Int> closed_from_loop_counts(const Graph& g, Vertex x0, Vertex max_length,
                                         const OracleLimits& limits) {
  require_min_degree(g, 2, "closed-geodesic formula");
  LoopData data = gather_loop_data(g, x0, max_length, limits);
  const Int deg_offset = Int(g.degree(x0)) - 2;

  std::vector<Int> closed(static_cast<std::size_t>(max_length) + 1, Int(0));
  // Lengths 1 and 2 cannot carry a tail, so loop counts are closed counts.
  for (Vertex m = 1; m <= max_length && m <= 2; ++m)
    closed[static_cast<std::size_t>(m)] = data.loops[static_cast<std::size_t>(m)];
  for (Vertex m = 3; m <= max_length; ++m) {
    Int value = data.loops[static_cast<std::size_t>(m)];
    const Vertex terms = (m + 1) / 2 - 1;
    for (Vertex i = 1; i <= terms; ++i) {
      value -= deg_offset * data.loops[static_cast<std::size_t>(m - 2 * i)];
      value += Int(i) * data.laplacian[static_cast<std::size_t>(m - 2 * i)];
    }
    closed[static_cast<std::size_t>(m)] = value;
  }
  return closed;
}

std::vector<Int> correction_sequence(const Graph& g, Vertex x0, Vertex max_length,
                                     const OracleLimits& limits) {
  LoopData data = gather_loop_data(g, x0, max_length, limits);
  return correction_from(data, max_length);
}

LocalSeriesBundle local_series_bundle(const Graph& g, Vertex x0, long order,
                                      const OracleLimits& limits) {
  require_min_degree(g, 2, "local series bundle");
  const Vertex max_length = static_cast<Vertex>(order);
  LoopData data = gather_loop_data(g, x0, max_length, limits);
  std::vector<Int> correction = correction_from(data, max_length);

  LocalSeriesBundle bundle{x0,
                           order,
                           g.degree(x0),
                           ScalarSeries(order, Rational(0)),
                           ScalarSeries(order, Rational(0)),
                           ScalarSeries(order, Rational(0)),
                           ScalarSeries(order, Rational(0)),
                           ScalarSeries(order, Rational(0)),
                           {}};
  const Int deg_offset = Int(g.degree(x0)) - 2;
  for (long m = 1; m <= order; ++m) {
    bundle.loop_series.coeff(m) = Rational(data.loops[static_cast<std::size_t>(m)]);
    bundle.closed_series.coeff(m) = Rational(data.closed[static_cast<std::size_t>(m)]);
    bundle.laplacian_series.coeff(m) =
        Rational(data.laplacian[static_cast<std::size_t>(m)]);
    bundle.correction_series.coeff(m) = Rational(correction[static_cast<std::size_t>(m)]);

    Int b = data.loops[static_cast<std::size_t>(m)];
    if (m >= 3) {
      const long terms = (m + 1) / 2 - 1;
      for (long j = 1; j <= terms; ++j)
        b -= deg_offset * data.loops[static_cast<std::size_t>(m - 2 * j)];
    }
    bundle.corrected_series.coeff(m) = Rational(b);
  }

  bundle.correction_increments.assign(static_cast<std::size_t>(order) + 1, Int(0));
  for (long m = 1; m <= order; ++m) {
    Int inc = correction[static_cast<std::size_t>(m)];
    if (m >= 3) inc -= correction[static_cast<std::size_t>(m - 2)];
    bundle.correction_increments[static_cast<std::size_t>(m)] = inc;
  }
  return bundle;
}

namespace {

// (1 - u^2)^{-1} as a scalar series.
ScalarSeries inverse_one_minus_u2(long order) {
  ScalarSeries s(order, Rational(0));
  for (long m = 0; m <= order; m += 2) s.coeff(m) = 1;
  return s;
}

}  // namespace

ScalarSeries correction_series_rational_form(const LocalSeriesBundle& bundle) {
  const long order = bundle.order;
  ScalarSeries geom = inverse_one_minus_u2(order);
  ScalarSeries shifted(order, Rational(0));
  for (long m = 2; m <= order; ++m)
    shifted.coeff(m) = bundle.laplacian_series.coeff(m - 2);
  return shifted * geom * geom;
}

ScalarSeries corrected_series_rational_form(const LocalSeriesBundle& bundle) {
  const long order = bundle.order;
  ScalarSeries factor(order, Rational(0));
  factor.coeff(0) = 1;
  if (order >= 2) factor.coeff(2) = Rational(1) - Rational(bundle.degree);
  return factor * inverse_one_minus_u2(order) * bundle.loop_series;
}

ScalarSeries closed_series_rational_form(const LocalSeriesBundle& bundle) {
  const long order = bundle.order;
  const Rational deg(bundle.degree);
  ScalarSeries acc = bundle.loop_series;
  for (long m = 2; m <= order; ++m) {
    acc.coeff(m) -= deg * bundle.loop_series.coeff(m - 2);
    acc.coeff(m) += bundle.laplacian_series.coeff(m - 2);
  }
  for (long m = 4; m <= order; ++m)
    acc.coeff(m) += (deg - 1) * bundle.loop_series.coeff(m - 4);
  ScalarSeries geom = inverse_one_minus_u2(order);
  return acc * geom * geom;
}

}  // namespace ihara
