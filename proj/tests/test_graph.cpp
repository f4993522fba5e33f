#include <doctest/doctest.h>

#include <algorithm>

#include "ihara/errors.hpp"
#include "ihara/families.hpp"
#include "ihara/graph.hpp"

using namespace ihara;

TEST_CASE("half-edge structure of a triangle") {
  const Graph g("triangle", 3, {{0, 1}, {1, 2}, {2, 0}});
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 3);
  CHECK(g.half_edge_count() == 6);
  CHECK(g.is_simple());
  CHECK(g.is_connected());
  CHECK(g.is_regular());

  for (HalfEdge e = 0; e < g.half_edge_count(); ++e) {
    CHECK(g.reversal(e) != e);
    CHECK(g.reversal(g.reversal(e)) == e);
    CHECK(g.origin(g.reversal(e)) == g.terminus(e));
    CHECK(g.terminus(g.reversal(e)) == g.origin(e));
  }

  // Edge k becomes half-edges 2k (u -> v) and 2k+1 (v -> u).
  CHECK(g.origin(0) == 0);
  CHECK(g.terminus(0) == 1);
  CHECK(g.origin(1) == 1);
  CHECK(g.terminus(1) == 0);
  CHECK(g.degree(0) == 2);
  CHECK(g.out_edges(0).size() == 2);
}

TEST_CASE("loops and parallel edges") {
  const Graph with_loop("loop", 2, {{0, 1}, {1, 1}});
  CHECK(!with_loop.is_simple());
  CHECK(with_loop.degree(1) == 3);  // the loop contributes both half-edges

  const Graph with_parallel("parallel", 2, {{0, 1}, {0, 1}});
  CHECK(!with_parallel.is_simple());
  CHECK(with_parallel.degree(0) == 2);
}

TEST_CASE("malformed edges are rejected") {
  CHECK_THROWS_AS(Graph("bad", 2, {{0, 2}}), InputError);
  CHECK_THROWS_AS(Graph("bad", 2, {{-1, 0}}), InputError);
  CHECK_THROWS_AS(Graph("bad", -1, {}), InputError);
}

TEST_CASE("validate reports structure and violations") {
  const Graph path("path", 3, {{0, 1}, {1, 2}});
  const ValidationReport v = validate(path);
  CHECK(v.connected);
  CHECK(v.simple);
  CHECK(v.min_degree == 1);
  CHECK(v.max_degree == 2);
  CHECK(v.euler_characteristic == 1);
  REQUIRE(v.violations.size() == 2);
  CHECK(v.violations[0].find("degree-1") != std::string::npos);

  const Graph split("split", 4, {{0, 1}, {2, 3}});
  const ValidationReport w = validate(split);
  CHECK(!w.connected);
  CHECK(std::any_of(w.violations.begin(), w.violations.end(), [](const auto& s) {
    return s.find("not connected") != std::string::npos;
  }));
}

TEST_CASE("assumption guards") {
  const Graph path("path", 3, {{0, 1}, {1, 2}});
  CHECK_THROWS_AS(require_min_degree(path, 2, "test"), AssumptionError);
  const Graph multi("multi", 2, {{0, 1}, {0, 1}});
  CHECK_THROWS_AS(require_simple(multi, "test"), AssumptionError);
  const Graph star("star", 4, {{0, 1}, {0, 2}, {0, 3}});
  CHECK_THROWS_AS(require_regular(star, "test"), AssumptionError);

  try {
    require_min_degree(path, 2, "test");
  } catch (const AssumptionError& e) {
    CHECK(e.kind() == AssumptionError::Kind::degree_too_small);
  }
}

TEST_CASE("ball extraction relabels by discovery order") {
  const Graph cycle = make_family({"cycle", {6}});
  const BallResult b = ball(cycle, 2, 1);
  CHECK(b.graph.vertex_count() == 3);
  CHECK(b.graph.edge_count() == 2);
  CHECK(b.vertex_map[0] == 2);  // center first
  CHECK(b.graph.name().find("ball") != std::string::npos);

  // Radius large enough returns the whole graph.
  const BallResult whole = ball(cycle, 0, 10);
  CHECK(whole.graph.vertex_count() == 6);
  CHECK(whole.graph.edge_count() == 6);
}
