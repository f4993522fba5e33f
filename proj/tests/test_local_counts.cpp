#include <doctest/doctest.h>

#include "ihara/errors.hpp"
#include "ihara/families.hpp"
#include "ihara/geodesics.hpp"
#include "ihara/graph.hpp"
#include "ihara/local_counts.hpp"
#include "ihara/series.hpp"

using namespace ihara;

namespace {

Graph triangle_double_edge() {
  return Graph("triangle_double_edge", 3, {{0, 1}, {1, 2}, {2, 0}, {0, 1}});
}

}  // namespace

TEST_CASE("closed counts derived from loop counts match enumeration") {
  for (const Graph& g : {make_family({"complete", {4}}),
                         make_family({"bowtie", {}}),
                         triangle_double_edge()}) {
    for (Vertex x0 = 0; x0 < g.vertex_count(); ++x0) {
      const auto derived = closed_from_loop_counts(g, x0, 10);
      const CountTable t = count_closed_geodesics(g, x0, 10);
      for (Vertex m = 1; m <= 10; ++m) {
        CAPTURE(g.name());
        CAPTURE(x0);
        CAPTURE(m);
        CHECK(derived[m] == t.closed[m]);
      }
    }
  }
}

TEST_CASE("minimum degree gate") {
  const Graph path("path", 3, {{0, 1}, {1, 2}});
  CHECK_THROWS_AS(closed_from_loop_counts(path, 0, 6), AssumptionError);
  try {
    closed_from_loop_counts(path, 0, 6);
  } catch (const AssumptionError& e) {
    CHECK(e.kind() == AssumptionError::Kind::degree_too_small);
  }
}

TEST_CASE("correction sequence at the bowtie center") {
  const Graph g = make_family({"bowtie", {}});
  const auto r = correction_sequence(g, 0, 6);
  CHECK(r[1] == 0);
  CHECK(r[2] == 0);
  CHECK(r[3] == 0);
  CHECK(r[4] == 0);
  CHECK(r[5] == 8);
  CHECK(r[6] == 0);

  // Regular graphs have no correction at all.
  const Graph k4 = make_family({"complete", {4}});
  for (Vertex x = 0; x < 4; ++x) {
    for (const Int& v : correction_sequence(k4, x, 10)) CHECK(v == 0);
  }
}

TEST_CASE("increments recover the correction series") {
  // (1 - u^2) R(u) has the increments as coefficients.
  const Graph g = make_family({"bowtie", {}});
  for (Vertex x0 = 0; x0 < g.vertex_count(); ++x0) {
    const LocalSeriesBundle b = local_series_bundle(g, x0, 9);
    ScalarSeries one_minus_u2(b.order);
    one_minus_u2.coeff(0) = 1;
    one_minus_u2.coeff(2) = -1;
    const ScalarSeries lhs = one_minus_u2 * b.correction_series;
    for (long m = 0; m <= b.order; ++m) {
      CAPTURE(x0);
      CAPTURE(m);
      CHECK(lhs.coeff(m) == Rational(b.correction_increments[static_cast<std::size_t>(m)]));
    }
  }
}

TEST_CASE("rational closed forms match the defining sums") {
  for (const Graph& g : {make_family({"complete", {4}}),
                         make_family({"bowtie", {}})}) {
    for (Vertex x0 = 0; x0 < g.vertex_count(); ++x0) {
      const LocalSeriesBundle b = local_series_bundle(g, x0, 9);
      CAPTURE(g.name());
      CAPTURE(x0);
      CHECK(correction_series_rational_form(b) == b.correction_series);
      CHECK(corrected_series_rational_form(b) == b.corrected_series);
      CHECK(closed_series_rational_form(b) == b.closed_series);
      // The decomposition N = B + R holds term by term.
      CHECK(b.corrected_series + b.correction_series == b.closed_series);
    }
  }
}
