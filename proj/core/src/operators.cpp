#include "ihara/operators.hpp"

#include <algorithm>
#include <cmath>

#include "ihara/errors.hpp"

namespace ihara {

namespace {

using MSeries = RationalMatrixSeries;

MSeries zero_series(std::size_t dim, long order) {
  return MSeries(order, Matrix<Rational>(dim, dim));
}

MSeries constant_term(const Matrix<Rational>& m, long order) {
  MSeries s(order, Matrix<Rational>(m.rows(), m.cols()));
  s.coeff(0) = m;
  return s;
}

// Multiplication by u^k.
MSeries shifted(const MSeries& a, long k) {
  MSeries out(a.order(), CoeffOps<Matrix<Rational>>::zero_like(a.coeff(0)));
  for (long i = 0; i + k <= a.order(); ++i) out.coeff(i + k) = a.coeff(i);
  return out;
}

MSeries scaled_left(const Matrix<Rational>& m, const MSeries& a) {
  MSeries out = a;
  for (long i = 0; i <= a.order(); ++i) out.coeff(i) = m * a.coeff(i);
  return out;
}

Rational max_abs_coeff(const MSeries& a) {
  Rational best(0);
  for (long i = 0; i <= a.order(); ++i) {
    Rational v = max_abs_entry(a.coeff(i));
    if (v > best) best = v;
  }
  return best;
}

ResidualReport residual_report(std::string name, const MSeries& difference) {
  ResidualReport r;
  r.name = std::move(name);
  Rational dev = max_abs_coeff(difference);
  r.exact = dev == 0;
  r.max_deviation = to_double(dev);
  return r;
}

// Laplacian of a per-vertex function given as the diagonal of a matrix:
// deg(x) h(x) - sum_{e in E_x} h(t(e)). Half-edge sum, so loops and multiple
// edges would be weighted correctly.
std::vector<Int> laplacian_of_diagonal(const Graph& g, const Matrix<Int>& m) {
  std::vector<Int> out(static_cast<std::size_t>(g.vertex_count()));
  for (Vertex x = 0; x < g.vertex_count(); ++x) {
    Int acc = Int(g.degree(x)) * m(static_cast<std::size_t>(x), static_cast<std::size_t>(x));
    for (HalfEdge e : g.out_edges(x)) {
      const std::size_t y = static_cast<std::size_t>(g.terminus(e));
      acc -= m(y, y);
    }
    out[static_cast<std::size_t>(x)] = acc;
  }
  return out;
}

}  // namespace

OperatorSet build_operators(const Graph& g) {
  const std::size_t n = static_cast<std::size_t>(g.vertex_count());
  OperatorSet ops{Matrix<Int>(n, n), Matrix<Int>(n, n), Matrix<Int>(n, n),
                  Matrix<Int>(n, n)};
  for (Vertex x = 0; x < g.vertex_count(); ++x) {
    for (HalfEdge e : g.out_edges(x))
      ops.adjacency(static_cast<std::size_t>(x),
                    static_cast<std::size_t>(g.terminus(e))) += 1;
    ops.valency(static_cast<std::size_t>(x), static_cast<std::size_t>(x)) =
        g.degree(x);
  }
  ops.q = ops.valency - Matrix<Int>::identity(n);
  ops.laplacian = ops.valency - ops.adjacency;
  return ops;
}

std::vector<Matrix<Int>> geodesic_operators(const Graph& g, long max_length) {
  require_simple(g, "geodesic operator recursion");
  if (max_length < 0) throw InputError("operator sequence length must be nonnegative");
  const OperatorSet ops = build_operators(g);
  const std::size_t n = static_cast<std::size_t>(g.vertex_count());
  std::vector<Matrix<Int>> c;
  c.reserve(static_cast<std::size_t>(max_length) + 1);
  c.push_back(Matrix<Int>::identity(n));
  if (max_length >= 1) c.push_back(ops.adjacency);
  if (max_length >= 2)
    c.push_back(ops.adjacency * ops.adjacency - ops.q - Matrix<Int>::identity(n));
  for (long m = 3; m <= max_length; ++m)
    c.push_back(c[static_cast<std::size_t>(m - 1)] * ops.adjacency -
                c[static_cast<std::size_t>(m - 2)] * ops.q);
  return c;
}

ClosedOperatorDecomposition closed_operator_decomposition(
    const Graph& g, const std::vector<Matrix<Int>>& path_ops) {
  if (path_ops.empty()) throw InputError("empty path operator sequence");
  const long max_length = static_cast<long>(path_ops.size()) - 1;
  const std::size_t n = static_cast<std::size_t>(g.vertex_count());
  const OperatorSet ops = build_operators(g);
  const Matrix<Int> q_minus_i = ops.q - Matrix<Int>::identity(n);

  ClosedOperatorDecomposition d;
  for (long m = 0; m <= max_length; ++m) {
    const auto& cm = path_ops[static_cast<std::size_t>(m)];
    Matrix<Int> b = cm;
    if (m >= 3) {
      Matrix<Int> cumulative(n, n);
      for (long j = 1; m - 2 * j >= 0; ++j)
        cumulative += path_ops[static_cast<std::size_t>(m - 2 * j)];
      b = cm - q_minus_i * cumulative;
    }

    Matrix<Int> r(n, n);
    if (m >= 3) {
      // ceil(m/2) - 1 terms; index j weights the Laplacian of the shorter
      // loop-count diagonal.
      const long terms = (m + 1) / 2 - 1;
      for (long j = 1; j <= terms; ++j) {
        std::vector<Int> lap =
            laplacian_of_diagonal(g, path_ops[static_cast<std::size_t>(m - 2 * j)]);
        for (std::size_t x = 0; x < n; ++x) r(x, x) += Int(j) * lap[x];
      }
    }

    Matrix<Int> r_plus = r;
    if (m >= 3 && m % 2 == 0) r_plus += q_minus_i;

    d.closed.push_back(b + r_plus);
    d.corrected.push_back(std::move(b));
    d.laplacian_part.push_back(std::move(r));
    d.parity_part.push_back(std::move(r_plus));
  }
  return d;
}

RationalMatrixSeries bass_quadratic(const OperatorSet& ops, long order) {
  const std::size_t n = ops.adjacency.rows();
  MSeries w = zero_series(n, order);
  w.coeff(0) = Matrix<Rational>::identity(n);
  if (order >= 1) w.coeff(1) = to_rational(ops.adjacency) * Rational(-1);
  if (order >= 2) w.coeff(2) = to_rational(ops.q);
  return w;
}

std::vector<ResidualReport> path_series_identities(
    const Graph& g, const std::vector<Matrix<Int>>& path_ops) {
  const long order = static_cast<long>(path_ops.size()) - 1;
  const std::size_t n = static_cast<std::size_t>(g.vertex_count());
  const OperatorSet ops = build_operators(g);
  const MSeries w = bass_quadratic(ops, order);

  MSeries path_series = zero_series(n, order);
  for (long m = 0; m <= order; ++m)
    path_series.coeff(m) = to_rational(path_ops[static_cast<std::size_t>(m)]);

  MSeries expected = zero_series(n, order);
  expected.coeff(0) = Matrix<Rational>::identity(n);
  if (order >= 2) expected.coeff(2) = Matrix<Rational>::identity(n) * Rational(-1);
  std::vector<ResidualReport> out;
  out.push_back(residual_report("path series against the quadratic",
                                path_series * w - expected));

  MSeries cumulative = zero_series(n, order);
  for (long m = 0; m <= order; ++m) {
    Matrix<Int> s(n, n);
    for (long k = 0; m - 2 * k >= 0; ++k)
      s += path_ops[static_cast<std::size_t>(m - 2 * k)];
    cumulative.coeff(m) = to_rational(s);
  }
  out.push_back(residual_report("cumulative path series against the quadratic",
                                cumulative * w - constant_term(Matrix<Rational>::identity(n), order)));
  return out;
}

std::vector<ResidualReport> closed_series_identities(
    const Graph& g, const std::vector<Matrix<Int>>& path_ops,
    const ClosedOperatorDecomposition& decomp) {
  const long order = static_cast<long>(path_ops.size()) - 1;
  const std::size_t n = static_cast<std::size_t>(g.vertex_count());
  const OperatorSet ops = build_operators(g);
  const MSeries w = bass_quadratic(ops, order);
  const Matrix<Rational> a = to_rational(ops.adjacency);
  const Matrix<Rational> q = to_rational(ops.q);
  const Matrix<Rational> q_minus_i =
      q - Matrix<Rational>::identity(n);

  // corrected-sum identity:
  // (sum_{m>=1} B_m u^m) W = Au - 2Qu^2 + (Q - I) W u^2
  MSeries corrected_sum = zero_series(n, order);
  for (long m = 1; m <= order; ++m)
    corrected_sum.coeff(m) = to_rational(decomp.corrected[static_cast<std::size_t>(m)]);

  MSeries rhs = zero_series(n, order);
  if (order >= 1) rhs.coeff(1) = a;
  if (order >= 2) rhs.coeff(2) = q * Rational(-2);
  rhs += shifted(scaled_left(q_minus_i, w), 2);

  std::vector<ResidualReport> out;
  out.push_back(residual_report("corrected path series against the quadratic",
                                corrected_sum * w - rhs));

  // closed-sum identity:
  // sum_{m>=1} N_m u^m = u(A - 2Qu) W^{-1} + (Q - I) u^2/(1-u^2) + sum_{m>=3} R_m u^m
  MSeries closed_sum = zero_series(n, order);
  for (long m = 1; m <= order; ++m)
    closed_sum.coeff(m) = to_rational(decomp.closed[static_cast<std::size_t>(m)]);

  MSeries numerator = zero_series(n, order);
  if (order >= 1) numerator.coeff(1) = a;
  if (order >= 2) numerator.coeff(2) = q * Rational(-2);
  MSeries expected = numerator * series_invert(w);
  for (long m = 2; m <= order; m += 2) expected.coeff(m) += q_minus_i;
  for (long m = 3; m <= order; ++m)
    expected.coeff(m) += to_rational(decomp.laplacian_part[static_cast<std::size_t>(m)]);

  out.push_back(residual_report("closed path series against the rational form",
                                closed_sum - expected));
  return out;
}

namespace {

MSeries f_series(const OperatorSet& ops, long order) {
  const std::size_t n = ops.adjacency.rows();
  MSeries f = zero_series(n, order);
  if (order >= 1) f.coeff(1) = to_rational(ops.adjacency);
  if (order >= 2) f.coeff(2) = to_rational(ops.q) * Rational(-1);
  return f;
}

}  // namespace

RationalMatrixSeries commutator_correction_integrand(const Graph& g, long order) {
  require_simple(g, "commutator correction");
  if (order < 0) throw InputError("series order must be nonnegative");
  const OperatorSet ops = build_operators(g);
  const std::size_t n = static_cast<std::size_t>(g.vertex_count());
  const Matrix<Rational> a = to_rational(ops.adjacency);
  const Matrix<Rational> q = to_rational(ops.q);
  const Matrix<Rational> commutator = a * q - q * a;

  MSeries out = zero_series(n, order);
  if (commutator.is_zero() || order < 2) return out;

  const MSeries f = f_series(ops, order);
  // f^a for all needed exponents; f has valuation >= 1.
  std::vector<MSeries> powers;
  powers.push_back(constant_term(Matrix<Rational>::identity(n), order));
  for (long p = 1; p <= order - 2; ++p) powers.push_back(powers.back() * f);

  // u^2 sum over n of (1/n) sum_{j=1}^{n-1} j f^{n-1-j} [A,Q] f^{j-1},
  // reindexed by the two exponents; the term with exponents (l, r) carries
  // weight (r+1)/(l+r+2) and valuation l+r+2.
  for (long l = 0; l + 2 <= order; ++l) {
    const MSeries left = scaled(powers[static_cast<std::size_t>(l)], commutator);
    for (long r = 0; l + r + 2 <= order; ++r) {
      const Rational weight(r + 1, l + r + 2);
      out += shifted(scaled(left * powers[static_cast<std::size_t>(r)], weight), 2);
    }
  }
  return out;
}

RationalMatrixSeries commutator_correction_series(const Graph& g, long order) {
  return series_integrate(commutator_correction_integrand(g, order));
}

ResidualReport commutator_identity_residual(const Graph& g, long order) {
  require_simple(g, "commutator identity");
  const long work_order = order + 1;
  const OperatorSet ops = build_operators(g);
  const std::size_t n = static_cast<std::size_t>(g.vertex_count());

  const MSeries f = f_series(ops, work_order);
  MSeries one_minus_f = constant_term(Matrix<Rational>::identity(n), work_order);
  one_minus_f -= f;

  MSeries f_prime = zero_series(n, work_order);
  f_prime.coeff(0) = to_rational(ops.adjacency);
  if (work_order >= 1) f_prime.coeff(1) = to_rational(ops.q) * Rational(-2);

  const MSeries lhs =
      f_prime * series_invert(one_minus_f) + series_derivative(series_log(one_minus_f));
  const MSeries rhs = commutator_correction_integrand(g, work_order);

  MSeries difference = lhs - rhs;
  return residual_report("commutator rearrangement",
                         difference.truncated(order));
}

namespace {

double spectral_norm_estimate(const Matrix<double>& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 0.0;
  std::vector<double> v(n, 1.0 / std::sqrt(static_cast<double>(n)));
  double estimate = 0.0;
  for (int iter = 0; iter < 10000; ++iter) {
    // w = M v, z = M^T w; for symmetric M this is one step on M^2.
    std::vector<double> w(n, 0.0), z(n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) w[i] += m(i, j) * v[j];
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < n; ++i) z[j] += m(i, j) * w[i];
    double wn = 0.0, zn = 0.0;
    for (double x : w) wn += x * x;
    for (double x : z) zn += x * x;
    const double next = std::sqrt(wn);
    if (zn == 0.0) return next;
    const double scale = 1.0 / std::sqrt(zn);
    for (std::size_t i = 0; i < n; ++i) v[i] = z[i] * scale;
    if (std::abs(next - estimate) <= 1e-9 * std::max(next, 1e-300)) return next;
    estimate = next;
  }
  return estimate;
}

}  // namespace

NormBoundReport norm_bound_check(const Graph& g,
                                 const std::vector<Matrix<Int>>& path_ops) {
  NormBoundReport report;
  const double m_deg = static_cast<double>(g.max_degree());
  report.alpha = (m_deg + std::sqrt(m_deg * m_deg + 4.0 * m_deg)) / 2.0;
  report.all_ok = true;
  for (std::size_t m = 0; m < path_ops.size(); ++m) {
    NormBoundRow row;
    row.length = static_cast<long>(m);
    row.estimate = spectral_norm_estimate(to_double(path_ops[m]));
    row.bound = (m == 0) ? 1.0 : std::pow(report.alpha, static_cast<double>(m));
    row.ok = row.estimate <= row.bound * (1.0 + 1e-6);
    report.all_ok = report.all_ok && row.ok;
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace ihara
