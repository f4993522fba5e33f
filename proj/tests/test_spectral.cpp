#include <doctest/doctest.h>

#include <cmath>
#include <cstdlib>
#include <vector>

#include "ihara/errors.hpp"
#include "ihara/families.hpp"
#include "ihara/graph.hpp"
#include "ihara/matrix.hpp"
#include "ihara/series.hpp"
#include "ihara/spectral.hpp"

using namespace ihara;

namespace {

void check_values(const std::vector<double>& got, const std::vector<double>& want,
                  double tol = 1e-9) {
  REQUIRE(got.size() == want.size());
  for (std::size_t i = 0; i < got.size(); ++i) {
    CHECK(std::abs(got[i] - want[i]) < tol);
  }
}

void check_atoms(const LocalSpectrum& got,
                 const std::vector<std::pair<double, double>>& want) {
  REQUIRE(got.size() == want.size());
  for (std::size_t i = 0; i < got.size(); ++i) {
    CHECK(std::abs(got[i].first - want[i].first) < 1e-7);
    CHECK(std::abs(got[i].second - want[i].second) < 1e-9);
  }
}

double max_diff(const FloatSeries& a, const FloatSeries& b) {
  double worst = 0.0;
  for (long k = 0; k <= a.order(); ++k)
    worst = std::max(worst, std::abs(a.coeff(k) - b.coeff(k)));
  return worst;
}

ScalarSeries rational_poly(long order, std::vector<std::pair<long, Rational>> terms) {
  ScalarSeries s(order);
  s.coeff(0) = 1;
  for (const auto& [k, c] : terms) s.coeff(k) = c;
  return s;
}

}  // namespace

TEST_CASE("eigendecomposition basics") {
  Matrix<double> d(3, 3, 0.0);
  d(0, 0) = 2.0;
  d(1, 1) = -1.0;
  d(2, 2) = 2.0;
  const EigenDecomposition e = eigendecompose(d);
  check_values(e.eigenvalues, {-1.0, 2.0, 2.0});
  REQUIRE(e.clusters.size() == 2);
  CHECK(e.clusters[1].members.size() == 2);

  Matrix<double> asym(2, 2, 0.0);
  asym(0, 1) = 1.0;
  CHECK_THROWS_AS(eigendecompose(asym), InputError);
}

TEST_CASE("laplacian spectra of the regular corpus") {
  const EigenDecomposition k4 = laplacian_eigendecomposition(make_family({"complete", {4}}));
  check_values(k4.eigenvalues, {0, 4, 4, 4}, 1e-9);
  // E_0 projects onto constants.
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      CHECK(k4.idempotents[0](i, j) == doctest::Approx(0.25).epsilon(1e-9));
  check_atoms(local_spectrum(k4, 0), {{0.0, 0.25}, {4.0, 0.75}});

  const EigenDecomposition c6 = laplacian_eigendecomposition(make_family({"cycle", {6}}));
  check_values(c6.eigenvalues, {0, 1, 1, 3, 3, 4}, 1e-9);
  check_atoms(local_spectrum(c6, 0),
              {{0.0, 1.0 / 6}, {1.0, 1.0 / 3}, {3.0, 1.0 / 3}, {4.0, 1.0 / 6}});

  const EigenDecomposition k33 =
      laplacian_eigendecomposition(make_family({"complete_bipartite", {3, 3}}));
  check_values(k33.eigenvalues, {0, 3, 3, 3, 3, 6}, 1e-9);
  check_atoms(local_spectrum(k33, 0),
              {{0.0, 1.0 / 6}, {3.0, 2.0 / 3}, {6.0, 1.0 / 6}});
}

TEST_CASE("spectral zeta matches the closed form on the complete graph") {
  // (1-u^2)^{-1/2} (1-u)^{-1/4} (1-2u)^{-1/4} (1+u+2u^2)^{-3/4}
  const long L = 12;
  const ScalarSeries closed_form =
      binomial_power(rational_poly(L, {{2, -1}}), Rational(-1, 2)) *
      binomial_power(rational_poly(L, {{1, -1}}), Rational(-1, 4)) *
      binomial_power(rational_poly(L, {{1, -2}}), Rational(-1, 4)) *
      binomial_power(rational_poly(L, {{1, 1}, {2, 2}}), Rational(-3, 4));

  const Graph g = make_family({"complete", {4}});
  const FloatSeries z = zeta_spectral(g, 0, 0, L);
  CHECK(max_diff(z, to_float_series(closed_form)) < 1e-10);

  const FloatSeries d = zeta_local_determinant(g, 0, L);
  CHECK(max_diff(d, z) < 1e-10);
}

TEST_CASE("cycle zeta closed forms") {
  const long L = 13;
  const Graph g = make_family({"cycle", {6}});
  const ScalarSeries local = binomial_power(rational_poly(L, {{6, -1}}), Rational(-1, 3));
  CHECK(max_diff(zeta_local_determinant(g, 2, L), to_float_series(local)) < 1e-9);
  CHECK(max_diff(zeta_spectral(g, 2, 2, L), to_float_series(local)) < 1e-9);

  const ScalarSeries global = binomial_power(rational_poly(L, {{6, -1}}), Rational(-2));
  CHECK(zeta_global_determinant(g, L) == global);
}

TEST_CASE("global determinant zeta on the complete graph") {
  const Graph g = make_family({"complete", {4}});
  const ScalarSeries z = zeta_global_determinant(g, 6);
  const ScalarSeries lz = series_log(z);
  // Sum over the 4 vertices of N_3/3 = 4 * 6/3.
  CHECK(lz.coeff(3) == 8);
  CHECK(lz.coeff(1) == 0);
  CHECK(lz.coeff(2) == 0);
}

TEST_CASE("vertex transitivity of the petersen graph") {
  const Graph g = make_family({"petersen", {}});
  const FloatSeries ref = zeta_local_determinant(g, 0, 10);
  for (Vertex x = 1; x < 10; ++x) {
    CHECK(max_diff(zeta_local_determinant(g, x, 10), ref) < 1e-10);
  }
}

TEST_CASE("spectral routes refuse irregular graphs") {
  const Graph g = make_family({"bowtie", {}});
  CHECK_THROWS_AS(zeta_spectral(g, 0, 0, 6), AssumptionError);
  CHECK_THROWS_AS(zeta_local_determinant(g, 0, 6), AssumptionError);
  try {
    zeta_spectral(g, 0, 0, 6);
  } catch (const AssumptionError& e) {
    CHECK(e.kind() == AssumptionError::Kind::not_regular);
  }
}
