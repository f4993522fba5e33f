#include "ihara/verification.hpp"

#include <cmath>
#include <cstddef>
#include <sstream>

#include "ihara/errors.hpp"
#include "ihara/local_counts.hpp"
#include "ihara/matrix.hpp"
#include "ihara/operators.hpp"
#include "ihara/series.hpp"
#include "ihara/spectral.hpp"
#include "ihara/zeta.hpp"

namespace ihara {

std::string to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skip: return "skip";
  }
  return "unknown";
}

namespace {

constexpr const char* kNeedsMinDegree = "needs min degree 2";
constexpr const char* kNeedsSimple = "needs a simple graph";
constexpr const char* kNeedsRegular = "needs a regular simple graph";

std::string vertex_pair(Vertex x0, Vertex x) {
  std::ostringstream out;
  out << "(" << x0 << ", " << x << ")";
  return out.str();
}

ScalarSeries exp_count_series(const std::vector<Int>& counts, long order) {
  ScalarSeries arg(order);
  for (long m = 1; m <= order; ++m) {
    const auto& n = counts[static_cast<std::size_t>(m)];
    if (n != 0) arg.coeff(m) = Rational(n) / m;
  }
  return series_exp(arg);
}

double max_abs_diff(const FloatSeries& a, const FloatSeries& b) {
  double worst = 0;
  for (long k = 0; k <= a.order(); ++k) {
    worst = std::max(worst, std::abs(a.coeff(k) - b.coeff(k)));
  }
  return worst;
}

class Suite {
 public:
  Suite(const Graph& g, long order, const OracleLimits& limits)
      : g_(g), order_(order), limits_(limits) {
    report_.graph_name = g.name();
    report_.order = order;
  }

  VerificationReport run() {
    connectivity();
    loop_count_recursion();
    closed_counts_from_loop_counts();
    series_closed_forms();
    operator_checks();
    norm_bound();
    spectral_invariants();
    spectral_zeta_checks();
    global_determinant_check();

    for (const auto& check : report_.checks) {
      if (check.status == CheckStatus::fail) report_.all_pass = false;
    }
    return std::move(report_);
  }

 private:
  void add(const std::string& name, CheckStatus status, std::string detail) {
    report_.checks.push_back({name, status, std::move(detail)});
  }

  void pass(const std::string& name, std::string detail) {
    add(name, CheckStatus::pass, std::move(detail));
  }
  void fail(const std::string& name, std::string detail) {
    add(name, CheckStatus::fail, std::move(detail));
  }
  void skip(const std::string& name, std::string detail) {
    add(name, CheckStatus::skip, std::move(detail));
  }

  bool min_degree_ok() const { return g_.min_degree() >= 2; }

  // The whole framework assumes a connected graph; this is the one structural
  // property treated as a failure rather than a skip.
  void connectivity() {
    const ValidationReport v = validate(g_);
    std::ostringstream detail;
    detail << "min degree " << v.min_degree << ", max degree " << v.max_degree
           << ", euler characteristic " << v.euler_characteristic;
    if (!v.simple) detail << ", not simple";
    if (!v.connected) {
      fail("connectivity", "graph is not connected");
      return;
    }
    pass("connectivity", detail.str());
  }

  // Inclusion-exclusion between loops and closed geodesics, checked as a
  // residual at every vertex and length.
  void loop_count_recursion() {
    const char* name = "loop count recursion";
    for (Vertex x0 = 0; x0 < g_.vertex_count(); ++x0) {
      for (long m = 3; m <= order_; ++m) {
        const Int r = counting_recursion_residual(g_, x0, m, limits_);
        if (r != 0) {
          std::ostringstream detail;
          detail << "residual " << r << " at vertex " << x0 << ", length " << m;
          fail(name, detail.str());
          return;
        }
      }
    }
    pass(name, "residual 0 at every vertex, lengths 3..=" +
                   std::to_string(order_));
  }

  void closed_counts_from_loop_counts() {
    const char* name = "closed counts from loop counts";
    if (!min_degree_ok()) {
      skip(name, kNeedsMinDegree);
      return;
    }
    for (Vertex x0 = 0; x0 < g_.vertex_count(); ++x0) {
      const std::vector<Int> formula =
          closed_from_loop_counts(g_, x0, order_, limits_);
      const CountTable table = count_closed_geodesics(g_, x0, order_, limits_);
      for (long m = 1; m <= order_; ++m) {
        if (formula[static_cast<std::size_t>(m)] !=
            table.closed[static_cast<std::size_t>(m)]) {
          std::ostringstream detail;
          detail << "vertex " << x0 << ", length " << m << ": formula "
                 << formula[static_cast<std::size_t>(m)] << ", enumeration "
                 << table.closed[static_cast<std::size_t>(m)];
          fail(name, detail.str());
          return;
        }
      }
    }
    pass(name, "formula matches enumeration at every vertex");
  }

  void series_closed_forms() {
    const char* correction_name = "correction series rational form";
    const char* corrected_name = "corrected series rational form";
    const char* sum_name = "closed = corrected + correction";
    const char* closed_name = "closed series generating identity";
    if (!min_degree_ok()) {
      skip(correction_name, kNeedsMinDegree);
      skip(corrected_name, kNeedsMinDegree);
      skip(sum_name, kNeedsMinDegree);
      skip(closed_name, kNeedsMinDegree);
      return;
    }
    bool correction_ok = true;
    bool corrected_ok = true;
    bool sum_ok = true;
    bool closed_ok = true;
    Vertex witness = 0;
    for (Vertex x0 = 0; x0 < g_.vertex_count(); ++x0) {
      const LocalSeriesBundle bundle =
          local_series_bundle(g_, x0, order_, limits_);
      if (correction_series_rational_form(bundle) != bundle.correction_series)
        correction_ok = false;
      if (corrected_series_rational_form(bundle) != bundle.corrected_series)
        corrected_ok = false;
      if (bundle.corrected_series + bundle.correction_series !=
          bundle.closed_series)
        sum_ok = false;
      if (closed_series_rational_form(bundle) != bundle.closed_series)
        closed_ok = false;
      if (!(correction_ok && corrected_ok && sum_ok && closed_ok)) {
        witness = x0;
        break;
      }
    }
    const std::string ok_detail = "exact at every vertex";
    const std::string bad_detail = "mismatch at vertex " + std::to_string(witness);
    correction_ok ? pass(correction_name, ok_detail)
                  : fail(correction_name, bad_detail);
    corrected_ok ? pass(corrected_name, ok_detail)
                 : fail(corrected_name, bad_detail);
    sum_ok ? pass(sum_name, ok_detail) : fail(sum_name, bad_detail);
    closed_ok ? pass(closed_name, ok_detail) : fail(closed_name, bad_detail);
  }

  void operator_checks() {
    const char* recursion_name = "path operators match enumeration";
    const char* path_name = "path series identities";
    const char* closed_name = "closed operator identities";
    const char* diag_name = "closed operator diagonal matches enumeration";
    const char* commutator_name = "commutator rearrangement";
    const char* four_factor_name = "four-factor product";
    if (!g_.is_simple()) {
      skip(recursion_name, kNeedsSimple);
      skip(path_name, kNeedsSimple);
      skip(closed_name, kNeedsSimple);
      skip(diag_name, kNeedsSimple);
      skip(commutator_name, kNeedsSimple);
      skip(four_factor_name, kNeedsSimple);
      return;
    }

    const std::vector<Matrix<Int>> recursion_ops =
        geodesic_operators(g_, order_);
    const std::vector<Matrix<Int>> enumerated =
        geodesic_count_matrices(g_, order_, limits_);
    bool same = true;
    for (long m = 0; m <= order_ && same; ++m) {
      same = recursion_ops[static_cast<std::size_t>(m)] ==
             enumerated[static_cast<std::size_t>(m)];
    }
    same ? pass(recursion_name, "exact match for lengths 0..=" +
                                    std::to_string(order_))
         : fail(recursion_name, "recursion disagrees with enumeration");

    bool ok = true;
    std::string offender;
    for (const ResidualReport& r : path_series_identities(g_, recursion_ops)) {
      if (!r.exact) {
        ok = false;
        offender = r.name;
      }
    }
    ok ? pass(path_name, "residuals identically zero")
       : fail(path_name, "nonzero residual in " + offender);

    const ClosedOperatorDecomposition decomp =
        closed_operator_decomposition(g_, recursion_ops);
    ok = true;
    for (const ResidualReport& r :
         closed_series_identities(g_, recursion_ops, decomp)) {
      if (!r.exact) {
        ok = false;
        offender = r.name;
      }
    }
    ok ? pass(closed_name, "residuals identically zero")
       : fail(closed_name, "nonzero residual in " + offender);

    closed_diagonal_check(diag_name, decomp);

    const ResidualReport commutator = commutator_identity_residual(g_, order_);
    commutator.exact
        ? pass(commutator_name, "rearranged logarithmic derivative matches")
        : fail(commutator_name, "residual " + std::to_string(commutator.max_deviation));

    four_factor_check(four_factor_name, decomp);
  }

  void closed_diagonal_check(const char* name,
                             const ClosedOperatorDecomposition& decomp) {
    if (!min_degree_ok()) {
      skip(name, kNeedsMinDegree);
      return;
    }
    for (Vertex x0 = 0; x0 < g_.vertex_count(); ++x0) {
      const CountTable table = count_closed_geodesics(g_, x0, order_, limits_);
      for (long m = 1; m <= order_; ++m) {
        const auto& matrix = decomp.closed[static_cast<std::size_t>(m)];
        const auto x = static_cast<std::size_t>(x0);
        if (matrix(x, x) != table.closed[static_cast<std::size_t>(m)]) {
          std::ostringstream detail;
          detail << "vertex " << x0 << ", length " << m << ": operator "
                 << matrix(x, x) << ", enumeration "
                 << table.closed[static_cast<std::size_t>(m)];
          fail(name, detail.str());
          return;
        }
      }
    }
    pass(name, "diagonal equals enumerated closed counts");
  }

  // Product of the four closed-form factors against the exponentiated
  // closed-operator entries, at every vertex pair.
  void four_factor_check(const char* name,
                         const ClosedOperatorDecomposition& decomp) {
    if (!min_degree_ok()) {
      skip(name, kNeedsMinDegree);
      return;
    }
    const std::size_t n = static_cast<std::size_t>(g_.vertex_count());
    const OperatorSet ops = build_operators(g_);
    const RationalMatrixSeries log_w =
        series_log(bass_quadratic(ops, order_));
    const RationalMatrixSeries correction =
        commutator_correction_series(g_, order_);

    ScalarSeries one_minus_u2(order_);
    one_minus_u2.coeff(0) = 1;
    if (order_ >= 2) one_minus_u2.coeff(2) = -1;

    for (std::size_t x0 = 0; x0 < n; ++x0) {
      const long deg = static_cast<long>(g_.degree(static_cast<Vertex>(x0)));
      ScalarSeries arg(order_);
      for (long m = 3; m <= order_; ++m) {
        const Int& rm = decomp.laplacian_part[static_cast<std::size_t>(m)](x0, x0);
        if (rm != 0) arg.coeff(m) = Rational(rm) / m;
      }
      const ScalarSeries diagonal_factors =
          binomial_power(one_minus_u2, Rational(-(deg - 2), 2)) *
          series_exp(arg);
      for (std::size_t x = 0; x < n; ++x) {
        ScalarSeries product =
            series_exp(scaled(entry_series(log_w, x, x0), Rational(-1))) *
            series_exp(entry_series(correction, x, x0));
        if (x == x0) product = product * diagonal_factors;

        ScalarSeries closed_arg(order_);
        for (long m = 1; m <= order_; ++m) {
          const Int& nm = decomp.closed[static_cast<std::size_t>(m)](x, x0);
          if (nm != 0) closed_arg.coeff(m) = Rational(nm) / m;
        }
        if (product != series_exp(closed_arg)) {
          fail(name, "mismatch at vertex pair " +
                         vertex_pair(static_cast<Vertex>(x0),
                                     static_cast<Vertex>(x)));
          return;
        }
      }
    }
    pass(name, "exact at every vertex pair");
  }

  void norm_bound() {
    const char* name = "geodesic operator norm bound";
    const std::vector<Matrix<Int>> path_ops =
        g_.is_simple() ? geodesic_operators(g_, order_)
                       : geodesic_count_matrices(g_, order_, limits_);
    const NormBoundReport report = norm_bound_check(g_, path_ops);
    if (report.all_ok) {
      std::ostringstream detail;
      detail << "estimates within alpha^m, alpha = " << report.alpha;
      pass(name, detail.str());
    } else {
      fail(name, "norm estimate exceeds bound");
    }
  }

  void spectral_invariants() {
    const char* name = "spectral decomposition invariants";
    const EigenDecomposition decomp = laplacian_eigendecomposition(g_);
    const Matrix<double> lap = to_double(build_operators(g_).laplacian);
    const std::size_t n = lap.rows();
    const double scale = 1.0 + max_abs_entry(lap);

    Matrix<double> reconstructed(n, n);
    Matrix<double> projector_sum(n, n);
    for (std::size_t c = 0; c < decomp.clusters.size(); ++c) {
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          reconstructed(i, j) +=
              decomp.clusters[c].value * decomp.idempotents[c](i, j);
          projector_sum(i, j) += decomp.idempotents[c](i, j);
        }
      }
    }
    if (max_abs_entry(reconstructed - lap) > 1e-9 * scale) {
      fail(name, "reconstruction from idempotents drifts");
      return;
    }
    if (max_abs_entry(projector_sum - Matrix<double>::identity(n)) > 1e-9) {
      fail(name, "idempotents do not sum to the identity");
      return;
    }
    for (std::size_t a = 0; a < decomp.idempotents.size(); ++a) {
      for (std::size_t b = a + 1; b < decomp.idempotents.size(); ++b) {
        if (max_abs_entry(decomp.idempotents[a] * decomp.idempotents[b]) > 1e-8) {
          fail(name, "idempotents for distinct eigenvalues are not orthogonal");
          return;
        }
      }
    }
    if (!decomp.eigenvalues.empty() && decomp.eigenvalues.front() < -1e-9 * scale) {
      fail(name, "negative Laplacian eigenvalue");
      return;
    }
    for (std::size_t x = 0; x < n; ++x) {
      double total = 0;
      for (const auto& e : decomp.idempotents) {
        const double w = e(x, x);
        if (w < -1e-9 || w > 1.0 + 1e-9) {
          fail(name, "local multiplicity outside [0, 1]");
          return;
        }
        total += w;
      }
      if (std::abs(total - 1.0) > 1e-9) {
        fail(name, "local multiplicities do not sum to 1");
        return;
      }
    }
    pass(name, "reconstruction, completeness, orthogonality, multiplicities");
  }

  void spectral_zeta_checks() {
    const char* spectral_name = "spectral zeta vs counts";
    const char* local_name = "local determinant vs counts";
    const char* consistency_name = "local vs global determinant";
    if (!(g_.is_simple() && g_.is_regular() && min_degree_ok())) {
      skip(spectral_name, kNeedsRegular);
      skip(local_name, kNeedsRegular);
      skip(consistency_name, kNeedsRegular);
      return;
    }

    FloatSeries log_sum(order_);
    bool spectral_ok = true;
    bool local_ok = true;
    double spectral_worst = 0;
    double local_worst = 0;
    for (Vertex x0 = 0; x0 < g_.vertex_count(); ++x0) {
      const FloatSeries counts = to_float_series(
          exp_count_series(count_closed_geodesics(g_, x0, order_, limits_).closed,
                           order_));
      const FloatSeries spectral = zeta_spectral(g_, x0, x0, order_, limits_);
      const FloatSeries local = zeta_local_determinant(g_, x0, order_, limits_);
      spectral_worst = std::max(spectral_worst, max_abs_diff(spectral, counts));
      local_worst = std::max(local_worst, max_abs_diff(local, counts));
      if (max_abs_diff(spectral, local) > 1e-10) {
        spectral_ok = false;
      }
      log_sum += series_log(local);
    }
    spectral_ok = spectral_ok && spectral_worst <= 1e-8;
    local_ok = local_worst <= 1e-8;

    std::ostringstream spectral_detail;
    spectral_detail << "max deviation " << spectral_worst;
    spectral_ok ? pass(spectral_name, spectral_detail.str())
                : fail(spectral_name, spectral_detail.str());
    std::ostringstream local_detail;
    local_detail << "max deviation " << local_worst;
    local_ok ? pass(local_name, local_detail.str())
             : fail(local_name, local_detail.str());

    const FloatSeries global_log = to_float_series(
        series_log(zeta_global_determinant(g_, order_)));
    const double consistency = max_abs_diff(log_sum, global_log);
    std::ostringstream consistency_detail;
    consistency_detail << "max deviation " << consistency;
    consistency <= 1e-8 ? pass(consistency_name, consistency_detail.str())
                        : fail(consistency_name, consistency_detail.str());
  }

  void global_determinant_check() {
    const char* name = "global determinant vs count totals";
    if (!(g_.is_simple() && min_degree_ok())) {
      skip(name, g_.is_simple() ? kNeedsMinDegree : kNeedsSimple);
      return;
    }
    std::vector<Int> totals(static_cast<std::size_t>(order_) + 1, Int(0));
    for (Vertex v = 0; v < g_.vertex_count(); ++v) {
      const CountTable table = count_closed_geodesics(g_, v, order_, limits_);
      for (long m = 1; m <= order_; ++m) {
        totals[static_cast<std::size_t>(m)] +=
            table.closed[static_cast<std::size_t>(m)];
      }
    }
    const ScalarSeries from_counts = exp_count_series(totals, order_);
    const ScalarSeries from_determinant = zeta_global_determinant(g_, order_);
    from_counts == from_determinant
        ? pass(name, "exact agreement with enumerated totals")
        : fail(name, "determinant series differs from enumerated totals");
  }

  const Graph& g_;
  long order_;
  OracleLimits limits_;
  VerificationReport report_;
};

}  // namespace

VerificationReport run_verification(const Graph& g, long order,
                                    const OracleLimits& limits) {
  if (order < 1) throw InputError("verification order must be at least 1");
  Suite suite(g, order, limits);
  return suite.run();
}

}  // namespace ihara
