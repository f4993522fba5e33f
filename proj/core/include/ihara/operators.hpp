#pragma once

#include <string>
#include <vector>

#include "ihara/graph.hpp"
#include "ihara/matrix.hpp"
#include "ihara/series.hpp"

namespace ihara {

// Adjacency and friends as exact integer matrices. adjacency(x, y) counts
// half-edges from x to y, so a loop contributes 2 on the diagonal.
struct OperatorSet {
  Matrix<Int> adjacency;  // A
  Matrix<Int> valency;    // D, diagonal of degrees
  Matrix<Int> q;          // D - I
  Matrix<Int> laplacian;  // D - A
};

OperatorSet build_operators(const Graph& g);

// Geodesic path-count operators C_0..C_L from the three-term recursion
//   C_0 = I, C_1 = A, C_2 = A^2 - Q - I, C_m = C_{m-1} A - C_{m-2} Q.
// Only valid on simple graphs; entry (x, y) of C_m counts geodesic paths of
// length m from x to y.
std::vector<Matrix<Int>> geodesic_operators(const Graph& g, long max_length);

// Decomposition of the closed-geodesic operators N_m = B_m + R+_m, where B_m
// subtracts the degree-weighted cumulative path counts from C_m, R_m is the
// diagonal correction built from the Laplacian of the loop-count functions,
// and R+_m adds the even-length degree adjustment (first active at m = 4).
// Diagonal entries of closed[m] equal the closed-geodesic counts N_m(x).
struct ClosedOperatorDecomposition {
  std::vector<Matrix<Int>> corrected;      // B_m
  std::vector<Matrix<Int>> laplacian_part; // R_m (diagonal)
  std::vector<Matrix<Int>> parity_part;    // R+_m (diagonal)
  std::vector<Matrix<Int>> closed;         // N_m
};

ClosedOperatorDecomposition closed_operator_decomposition(
    const Graph& g, const std::vector<Matrix<Int>>& path_ops);

// I - Au + Qu^2 as a truncated matrix series.
RationalMatrixSeries bass_quadratic(const OperatorSet& ops, long order);

struct ResidualReport {
  std::string name;
  bool exact = false;       // residual identically zero
  double max_deviation = 0; // double rendering of the largest |entry|
};

// (sum C_m u^m)(I - Au + Qu^2) = (1 - u^2) I, and the cumulative variant
// (sum_m sum_{k<=m/2} C_{m-2k} u^m)(I - Au + Qu^2) = I.
std::vector<ResidualReport> path_series_identities(
    const Graph& g, const std::vector<Matrix<Int>>& path_ops);

// The two series identities satisfied by the decomposition: the B-sum against
// the quadratic, and the closed-operator sum against its rational closed form.
std::vector<ResidualReport> closed_series_identities(
    const Graph& g, const std::vector<Matrix<Int>>& path_ops,
    const ClosedOperatorDecomposition& decomp);

// Correction series produced when the logarithmic derivative of I - f(u),
// f(u) = Au - Qu^2, is rearranged past the non-commuting coefficients:
//   integrand  H(u) = u^2 sum_{n} (1/n) sum_{j=1}^{n-1} j f^{n-1-j} [A,Q] f^{j-1}
//   correction G(u) = integral of H
// Vanishes exactly on regular graphs, where [A, Q] = 0.
RationalMatrixSeries commutator_correction_integrand(const Graph& g, long order);
RationalMatrixSeries commutator_correction_series(const Graph& g, long order);

// Exact check of the rearrangement: f'(u)(I - f(u))^{-1} + d/du log(I - f(u))
// equals the integrand above. Computed at an internally raised order so the
// derivative is trustworthy through `order`.
ResidualReport commutator_identity_residual(const Graph& g, long order);

// Spectral-norm bound ||C_m|| <= alpha^m with alpha = (M + sqrt(M^2 + 4M))/2,
// M the maximum degree. Estimates are power-iteration values on C_m^T C_m.
struct NormBoundRow {
  long length = 0;
  double estimate = 0;
  double bound = 0;
  bool ok = false;
};

struct NormBoundReport {
  double alpha = 0;
  std::vector<NormBoundRow> rows;
  bool all_ok = false;
};

NormBoundReport norm_bound_check(const Graph& g,
                                 const std::vector<Matrix<Int>>& path_ops);

}  // namespace ihara
