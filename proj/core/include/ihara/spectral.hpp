#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "ihara/geodesics.hpp"
#include "ihara/graph.hpp"
#include "ihara/matrix.hpp"
#include "ihara/series.hpp"

namespace ihara {

// Symmetric eigendecomposition by cyclic Jacobi rotations, plus the spectral
// idempotents obtained by clustering nearly equal eigenvalues. Floating
// point; tolerances are pinned here rather than left to callers.
struct EigenCluster {
  double value = 0;
  std::vector<std::size_t> members;  // indices into eigenvalues
};

struct EigenDecomposition {
  std::vector<double> eigenvalues;          // ascending
  Matrix<double> eigenvectors;              // orthonormal columns, same order
  std::vector<EigenCluster> clusters;
  std::vector<Matrix<double>> idempotents;  // one per cluster; they sum to I
};

// Input must be symmetric within 1e-12 (relative to its largest entry).
// Rotations run until the off-diagonal Frobenius mass drops below
// 1e-13 * ||input||_F; eigenvalues closer than cluster_tol * spectral
// diameter share a cluster.
EigenDecomposition eigendecompose(const Matrix<double>& symmetric,
                                  double cluster_tol = 1e-7);

EigenDecomposition laplacian_eigendecomposition(const Graph& g,
                                                double cluster_tol = 1e-7);

// Atoms (lambda, E_lambda(x, x)) of the spectral measure at a vertex;
// weights below 1e-10 are dropped. The weights of the full decomposition
// sum to 1.
using LocalSpectrum = std::vector<std::pair<double, double>>;

LocalSpectrum local_spectrum(const EigenDecomposition& decomp, std::size_t x);

// E_lambda(x, y) for each cluster: the two-point spectral measure.
std::vector<double> spectral_measure(const EigenDecomposition& decomp,
                                     std::size_t x, std::size_t y);

// Zeta of a (q+1)-regular simple graph between two vertices through the
// Laplacian spectral measure:
//   (1-u^2)^{-(q-1)/2 [x=x0]}
//   * exp(-sum_lambda E_lambda(x0,x) log(1 - (q+1-lambda)u + q u^2))
//   * exp(sum_{m>=3} R_m(x0,x)/m u^m)
FloatSeries zeta_spectral(const Graph& g, Vertex x0, Vertex x, long order,
                          const OracleLimits& limits = {});

// Same object at x = x0, assembled as a product of per-eigenvalue binomial
// powers with the local multiplicities as exponents.
FloatSeries zeta_local_determinant(const Graph& g, Vertex x0, long order,
                                   const OracleLimits& limits = {});

// Whole-graph zeta through the determinant formula, kept exact:
//   Z(u) = (1-u^2)^{chi} exp(-tr log(I - Au + Qu^2)),
// chi the Euler characteristic. The u^m coefficient of log Z equals
// (sum over vertices of N_m)/m.
ScalarSeries zeta_global_determinant(const Graph& g, long order);

}  // namespace ihara
