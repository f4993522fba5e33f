#include "ihara/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

#include "ihara/errors.hpp"
#include "ihara/local_counts.hpp"
#include "ihara/operators.hpp"

namespace ihara {

namespace {

double offdiagonal_norm(const Matrix<double>& a) {
  double sum = 0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (i != j) sum += a(i, j) * a(i, j);
    }
  }
  return std::sqrt(sum);
}

void rotate(Matrix<double>& a, Matrix<double>& v, std::size_t p, std::size_t q) {
  const double apq = a(p, q);
  if (apq == 0.0) return;
  const double app = a(p, p);
  const double aqq = a(q, q);
  const double theta = (aqq - app) / (2.0 * apq);
  const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                   (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  const std::size_t n = a.rows();
  for (std::size_t k = 0; k < n; ++k) {
    if (k == p || k == q) continue;
    const double akp = a(k, p);
    const double akq = a(k, q);
    a(k, p) = a(p, k) = c * akp - s * akq;
    a(k, q) = a(q, k) = s * akp + c * akq;
  }
  a(p, p) = app - t * apq;
  a(q, q) = aqq + t * apq;
  a(p, q) = a(q, p) = 0.0;

  for (std::size_t k = 0; k < n; ++k) {
    const double vkp = v(k, p);
    const double vkq = v(k, q);
    v(k, p) = c * vkp - s * vkq;
    v(k, q) = s * vkp + c * vkq;
  }
}

}  // namespace

EigenDecomposition eigendecompose(const Matrix<double>& symmetric,
                                  double cluster_tol) {
  if (symmetric.rows() != symmetric.cols()) {
    throw InputError("eigendecompose: matrix is not square");
  }
  const std::size_t n = symmetric.rows();
  const double scale = std::max(1.0, max_abs_entry(symmetric));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (std::abs(symmetric(i, j) - symmetric(j, i)) > 1e-12 * scale) {
        throw InputError("eigendecompose: matrix is not symmetric");
      }
    }
  }

  Matrix<double> a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      a(i, j) = 0.5 * (symmetric(i, j) + symmetric(j, i));
    }
  }
  Matrix<double> v = Matrix<double>::identity(n);

  const double target = 1e-13 * frobenius_norm(a);
  const int max_sweeps = 100;
  int sweep = 0;
  while (offdiagonal_norm(a) > target) {
    if (++sweep > max_sweeps) {
      throw std::runtime_error("eigendecompose: Jacobi sweeps did not converge");
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        rotate(a, v, p, q);
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return a(i, i) < a(j, j);
  });

  EigenDecomposition decomp;
  decomp.eigenvalues.resize(n);
  decomp.eigenvectors = Matrix<double>(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    decomp.eigenvalues[j] = a(order[j], order[j]);
    for (std::size_t i = 0; i < n; ++i) {
      decomp.eigenvectors(i, j) = v(i, order[j]);
    }
  }

  if (n > 0) {
    const double diameter = decomp.eigenvalues.back() - decomp.eigenvalues.front();
    const double gap = cluster_tol * diameter;
    for (std::size_t j = 0; j < n; ++j) {
      if (decomp.clusters.empty() ||
          decomp.eigenvalues[j] - decomp.eigenvalues[decomp.clusters.back().members.back()] > gap) {
        decomp.clusters.push_back({});
      }
      decomp.clusters.back().members.push_back(j);
    }
    for (auto& cluster : decomp.clusters) {
      double sum = 0;
      for (std::size_t j : cluster.members) sum += decomp.eigenvalues[j];
      cluster.value = sum / static_cast<double>(cluster.members.size());
      Matrix<double> e(n, n);
      for (std::size_t j : cluster.members) {
        for (std::size_t r = 0; r < n; ++r) {
          const double vr = decomp.eigenvectors(r, j);
          if (vr == 0.0) continue;
          for (std::size_t c = 0; c < n; ++c) {
            e(r, c) += vr * decomp.eigenvectors(c, j);
          }
        }
      }
      decomp.idempotents.push_back(std::move(e));
    }
  }
  return decomp;
}

EigenDecomposition laplacian_eigendecomposition(const Graph& g,
                                                double cluster_tol) {
  return eigendecompose(to_double(build_operators(g).laplacian), cluster_tol);
}

LocalSpectrum local_spectrum(const EigenDecomposition& decomp, std::size_t x) {
  LocalSpectrum atoms;
  for (std::size_t c = 0; c < decomp.clusters.size(); ++c) {
    const double weight = decomp.idempotents[c](x, x);
    if (weight > 1e-10) {
      atoms.emplace_back(decomp.clusters[c].value, weight);
    }
  }
  return atoms;
}

std::vector<double> spectral_measure(const EigenDecomposition& decomp,
                                     std::size_t x, std::size_t y) {
  std::vector<double> weights;
  weights.reserve(decomp.clusters.size());
  for (const auto& e : decomp.idempotents) {
    weights.push_back(e(x, y));
  }
  return weights;
}

namespace {

// 1 - (q+1-lambda)u + q u^2 as a float series.
FloatSeries eigenvalue_quadratic(double lambda, long q, long order) {
  FloatSeries quad(order);
  quad.coeff(0) = 1.0;
  if (order >= 1) quad.coeff(1) = lambda - static_cast<double>(q + 1);
  if (order >= 2) quad.coeff(2) = static_cast<double>(q);
  return quad;
}

// (1-u^2)^{-(q-1)/2}, computed exactly and then converted.
FloatSeries diagonal_prefactor(long q, long order) {
  ScalarSeries base(order);
  base.coeff(0) = 1;
  if (order >= 2) base.coeff(2) = -1;
  return to_float_series(binomial_power(base, Rational(-(q - 1), 2)));
}

// exp(sum_{m>=3} R_m/m u^m), computed exactly and then converted.
FloatSeries correction_factor(const Graph& g, Vertex x0, long order,
                              const OracleLimits& limits) {
  const std::vector<Int> r = correction_sequence(g, x0, order, limits);
  ScalarSeries arg(order);
  for (long m = 3; m <= order; ++m) {
    arg.coeff(m) = Rational(r[static_cast<std::size_t>(m)]) / m;
  }
  return to_float_series(series_exp(arg));
}

void check_vertex(const Graph& g, Vertex x, const char* what) {
  if (x < 0 || x >= g.vertex_count()) {
    throw InputError(std::string(what) + " out of range");
  }
}

}  // namespace

FloatSeries zeta_spectral(const Graph& g, Vertex x0, Vertex x, long order,
                          const OracleLimits& limits) {
  require_simple(g, "spectral zeta");
  require_min_degree(g, 2, "spectral zeta");
  require_regular(g, "spectral zeta");
  check_vertex(g, x0, "base vertex");
  check_vertex(g, x, "target vertex");

  const long q = static_cast<long>(g.degree(x0)) - 1;
  const EigenDecomposition decomp = laplacian_eigendecomposition(g);
  const std::vector<double> weights =
      spectral_measure(decomp, static_cast<std::size_t>(x),
                       static_cast<std::size_t>(x0));

  FloatSeries log_sum(order);
  for (std::size_t c = 0; c < decomp.clusters.size(); ++c) {
    if (weights[c] == 0.0) continue;
    const FloatSeries lg =
        series_log(eigenvalue_quadratic(decomp.clusters[c].value, q, order));
    log_sum += scaled(lg, weights[c]);
  }
  FloatSeries zeta = series_exp(scaled(log_sum, -1.0));

  if (x == x0) {
    zeta = zeta * diagonal_prefactor(q, order);
    zeta = zeta * correction_factor(g, x0, order, limits);
  }
  return zeta;
}

FloatSeries zeta_local_determinant(const Graph& g, Vertex x0, long order,
                                   const OracleLimits& limits) {
  require_simple(g, "local determinant zeta");
  require_min_degree(g, 2, "local determinant zeta");
  require_regular(g, "local determinant zeta");
  check_vertex(g, x0, "base vertex");

  const long q = static_cast<long>(g.degree(x0)) - 1;
  const EigenDecomposition decomp = laplacian_eigendecomposition(g);
  const LocalSpectrum atoms =
      local_spectrum(decomp, static_cast<std::size_t>(x0));

  FloatSeries zeta(order);
  zeta.coeff(0) = 1.0;
  for (const auto& [lambda, multiplicity] : atoms) {
    zeta = zeta * binomial_power(eigenvalue_quadratic(lambda, q, order),
                                 -multiplicity);
  }
  zeta = zeta * diagonal_prefactor(q, order);
  zeta = zeta * correction_factor(g, x0, order, limits);
  return zeta;
}

ScalarSeries zeta_global_determinant(const Graph& g, long order) {
  require_simple(g, "global determinant zeta");
  require_min_degree(g, 2, "global determinant zeta");

  const OperatorSet ops = build_operators(g);
  const RationalMatrixSeries w = bass_quadratic(ops, order);
  const ScalarSeries tr = trace_series(series_log(w));

  ScalarSeries base(order);
  base.coeff(0) = 1;
  if (order >= 2) base.coeff(2) = -1;
  const long chi = g.vertex_count() - g.edge_count();
  return binomial_power(base, Rational(chi)) * series_exp(scaled(tr, Rational(-1)));
}

}  // namespace ihara
