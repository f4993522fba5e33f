// Acceptance gate: one line per criterion, nonzero exit if any fail.
// argv[1] is the CLI binary (used by the last criterion).

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "ihara/families.hpp"
#include "ihara/geodesics.hpp"
#include "ihara/graph.hpp"
#include "ihara/graph_io.hpp"
#include "ihara/local_counts.hpp"
#include "ihara/operators.hpp"
#include "ihara/series.hpp"
#include "ihara/spectral.hpp"
#include "ihara/zeta.hpp"

using namespace ihara;
namespace fs = std::filesystem;

namespace {

constexpr Vertex kOrder = 12;

Graph triangle_double_edge() {
  return Graph("triangle_double_edge", 3, {{0, 1}, {1, 2}, {2, 0}, {0, 1}});
}

std::vector<Graph> simple_corpus() {
  return {make_family({"complete", {4}}),
          make_family({"cycle", {6}}),
          make_family({"petersen", {}}),
          make_family({"complete_bipartite", {3, 3}}),
          make_family({"bowtie", {}}),
          make_family({"tree_ball", {3, 3}}),
          make_family({"grid_ball", {2, 3}})};
}

std::vector<Graph> full_corpus() {
  std::vector<Graph> graphs = simple_corpus();
  graphs.push_back(triangle_double_edge());
  return graphs;
}

std::vector<Graph> min_degree_two_corpus() {
  std::vector<Graph> graphs;
  for (Graph& g : full_corpus())
    if (g.min_degree() >= 2) graphs.push_back(std::move(g));
  return graphs;
}

int failures = 0;

void report(int number, bool pass, const std::string& text) {
  std::printf("[%s] criterion %2d: %s\n", pass ? "PASS" : "FAIL", number, text.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

void run(int number, const std::string& label, const std::function<std::string()>& body) {
  try {
    const std::string note = body();
    report(number, true, label + (note.empty() ? "" : " (" + note + ")"));
  } catch (const std::exception& e) {
    report(number, false, label + ": " + e.what());
  }
}

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void expect(bool ok, const std::string& what) {
  if (!ok) throw Failure(what);
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

// Path operators to length 12, cached per graph; oracle matrices for the
// multigraph, the closed-form recursion for everything else.
std::map<std::string, std::vector<Matrix<Int>>> path_op_cache;

const std::vector<Matrix<Int>>& cached_path_ops(const Graph& g) {
  auto it = path_op_cache.find(g.name());
  if (it == path_op_cache.end()) {
    auto ops = g.is_simple() ? geodesic_operators(g, kOrder)
                             : geodesic_count_matrices(g, kOrder);
    it = path_op_cache.emplace(g.name(), std::move(ops)).first;
  }
  return it->second;
}

std::string seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.1f s", s);
  return buf;
}

int run_cli(const std::string& cli, const std::string& args, const std::string& out) {
  const std::string cmd = cli + " " + args + " > " + out + " 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void criterion_1() {
  run(1, "recursion operators equal enumerated path counts to length 12", [] {
    const auto start = std::chrono::steady_clock::now();
    int graphs = 0;
    for (const Graph& g : simple_corpus()) {
      const auto recursion = geodesic_operators(g, kOrder);
      const auto enumerated = geodesic_count_matrices(g, kOrder);
      expect(recursion.size() == enumerated.size(), g.name() + ": size mismatch");
      for (std::size_t m = 0; m < recursion.size(); ++m) {
        expect(recursion[m] == enumerated[m],
               g.name() + ": length " + std::to_string(m) + " differs");
      }
      path_op_cache[g.name()] = recursion;
      ++graphs;
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    expect(elapsed < 60.0, "took " + seconds(elapsed) + ", budget is 60 s");
    return std::to_string(graphs) + " graphs, " + seconds(elapsed);
  });
}

void criterion_2() {
  run(2, "closed counts from loop counts match enumeration; recursion residual zero", [] {
    for (const Graph& g : min_degree_two_corpus()) {
      for (Vertex x0 = 0; x0 < g.vertex_count(); ++x0) {
        const auto derived = closed_from_loop_counts(g, x0, kOrder);
        const CountTable table = count_closed_geodesics(g, x0, kOrder);
        for (Vertex m = 1; m <= kOrder; ++m) {
          expect(derived[m] == table.closed[m],
                 g.name() + ": vertex " + std::to_string(x0) + ", length " +
                     std::to_string(m));
        }
      }
    }
    for (const Graph& g : full_corpus()) {
      for (Vertex x0 = 0; x0 < g.vertex_count(); ++x0) {
        for (Vertex m = 3; m <= kOrder; ++m) {
          expect(counting_recursion_residual(g, x0, m) == 0,
                 g.name() + ": residual at vertex " + std::to_string(x0) +
                     ", length " + std::to_string(m));
        }
      }
    }
    return "6 formula graphs, residuals on all 8";
  });
}

void criterion_3() {
  run(3, "loop-to-closed generating identity exact to order 12", [] {
    for (const Graph& g : min_degree_two_corpus()) {
      for (Vertex x0 = 0; x0 < g.vertex_count(); ++x0) {
        const LocalSeriesBundle bundle = local_series_bundle(g, x0, kOrder);
        expect(closed_series_rational_form(bundle) == bundle.closed_series,
               g.name() + ": vertex " + std::to_string(x0));
      }
    }
    return "6 graphs, every vertex";
  });
}

void criterion_4() {
  run(4, "operator series identities exact to order 12 on simple graphs", [] {
    for (const Graph& g : simple_corpus()) {
      const auto& ops = cached_path_ops(g);
      for (const ResidualReport& r : path_series_identities(g, ops)) {
        expect(r.exact, g.name() + ": " + r.name);
      }
      const auto decomp = closed_operator_decomposition(g, ops);
      for (const ResidualReport& r : closed_series_identities(g, ops, decomp)) {
        expect(r.exact, g.name() + ": " + r.name);
      }
    }
    return "7 graphs, 4 identities each";
  });
}

void criterion_5() {
  run(5, "four-factor product equals the closed-geodesic exponential at every pair", [] {
    const long order = 10;
    for (const Graph& g : {make_family({"complete", {4}}),
                           make_family({"cycle", {6}}),
                           make_family({"bowtie", {}})}) {
      auto ops = cached_path_ops(g);
      ops.resize(static_cast<std::size_t>(order) + 1);
      const auto decomp = closed_operator_decomposition(g, ops);
      for (Vertex x0 = 0; x0 < g.vertex_count(); ++x0) {
        for (Vertex x = 0; x < g.vertex_count(); ++x) {
          ScalarSeries arg(order);
          for (long m = 1; m <= order; ++m) {
            arg.coeff(m) = Rational(decomp.closed[static_cast<std::size_t>(m)](
                               static_cast<std::size_t>(x),
                               static_cast<std::size_t>(x0))) /
                           Rational(m);
          }
          const FourFactorZeta z = zeta_four_factor(g, x0, x, order);
          expect(z.product == series_exp(arg),
                 g.name() + ": pair (" + std::to_string(x0) + ", " +
                     std::to_string(x) + ")");
        }
      }
      const ResidualReport r = commutator_identity_residual(g, order);
      expect(r.exact, g.name() + ": " + r.name);
    }
    return "3 graphs, all vertex pairs, order 10";
  });
}

void criterion_6() {
  run(6, "operator norms stay under the degree bound to length 12", [] {
    for (const Graph& g : full_corpus()) {
      const NormBoundReport report = norm_bound_check(g, cached_path_ops(g));
      for (const NormBoundRow& row : report.rows) {
        expect(row.ok, g.name() + ": length " + std::to_string(row.length) +
                           " estimate " + std::to_string(row.estimate) +
                           " exceeds " + std::to_string(row.bound));
      }
      expect(report.all_ok, g.name() + ": bound report not clean");
    }
    return "all 8 graphs";
  });
}

void criterion_7() {
  run(7, "spectral and local-determinant routes match enumeration on regular graphs", [] {
    const std::vector<Graph> regular = {make_family({"complete", {4}}),
                                        make_family({"cycle", {6}}),
                                        make_family({"petersen", {}}),
                                        make_family({"complete_bipartite", {3, 3}})};
    for (const Graph& g : regular) {
      for (Vertex x0 = 0; x0 < g.vertex_count(); ++x0) {
        const FloatSeries reference =
            to_float_series(zeta_from_counts(g, x0, kOrder));
        const double ds = max_diff(zeta_spectral(g, x0, x0, kOrder), reference);
        expect(ds <= 1e-8, g.name() + ": spectral deviation " + std::to_string(ds) +
                               " at vertex " + std::to_string(x0));
        const double dl = max_diff(zeta_local_determinant(g, x0, kOrder), reference);
        expect(dl <= 1e-8, g.name() + ": local determinant deviation " +
                               std::to_string(dl) + " at vertex " + std::to_string(x0));
      }
    }

    const Graph k4 = make_family({"complete", {4}});
    const ScalarSeries closed_form =
        binomial_power(rational_poly(kOrder, {{2, -1}}), Rational(-1, 2)) *
        binomial_power(rational_poly(kOrder, {{1, -1}}), Rational(-1, 4)) *
        binomial_power(rational_poly(kOrder, {{1, -2}}), Rational(-1, 4)) *
        binomial_power(rational_poly(kOrder, {{1, 1}, {2, 2}}), Rational(-3, 4));
    const FloatSeries z = zeta_spectral(k4, 0, 0, kOrder);
    const double dc = max_diff(z, to_float_series(closed_form));
    expect(dc <= 1e-10, "closed form deviation " + std::to_string(dc));

    const FloatSeries lz = series_log(z);
    expect(std::abs(3.0 * lz.coeff(3) - 6.0) <= 1e-8, "extracted length-3 count");
    expect(std::abs(4.0 * lz.coeff(4) - 6.0) <= 1e-8, "extracted length-4 count");
    return "4 graphs, every vertex, order 12";
  });
}

void criterion_8() {
  run(8, "whole-graph determinant zeta has the aggregated counts as log-coefficients", [] {
    for (const Graph& g : min_degree_two_corpus()) {
      if (!g.is_simple()) continue;
      const ScalarSeries z = zeta_global_determinant(g, kOrder);
      const ScalarSeries lz = series_log(z);
      std::vector<Int> totals(static_cast<std::size_t>(kOrder) + 1, Int(0));
      for (Vertex x0 = 0; x0 < g.vertex_count(); ++x0) {
        const CountTable table = count_closed_geodesics(g, x0, kOrder);
        for (Vertex m = 1; m <= kOrder; ++m) totals[m] += table.closed[m];
      }
      for (long m = 1; m <= kOrder; ++m) {
        expect(lz.coeff(m) ==
                   Rational(totals[static_cast<std::size_t>(m)]) / Rational(m),
               g.name() + ": log coefficient " + std::to_string(m));
      }
    }
    const ScalarSeries c6 = zeta_global_determinant(make_family({"cycle", {6}}), kOrder);
    expect(c6 == binomial_power(rational_poly(kOrder, {{6, -1}}), Rational(-2)),
           "cycle of length 6 closed form");
    return "5 graphs, exact";
  });
}

void criterion_9() {
  run(9, "root counts are stable under ball radius growth", [] {
    const std::vector<std::pair<FamilySpec, FamilySpec>> pairs = {
        {{"tree_ball", {3, 3}}, {"tree_ball", {3, 4}}},
        {{"grid_ball", {2, 3}}, {"grid_ball", {2, 4}}}};
    for (const auto& [small_spec, large_spec] : pairs) {
      const Graph small_ball = make_family(small_spec);
      const Graph large_ball = make_family(large_spec);
      const CountTable a = count_closed_geodesics(small_ball, 0, 3);
      const CountTable b = count_closed_geodesics(large_ball, 0, 3);
      for (Vertex m = 1; m <= 3; ++m) {
        expect(a.loops[m] == b.loops[m] && a.closed[m] == b.closed[m],
               small_ball.name() + " vs " + large_ball.name() + ": length " +
                   std::to_string(m));
      }
    }
    return "tree and grid balls, radius 3 vs 4";
  });
}

void criterion_10(const std::string& cli) {
  run(10, "verification command exits 0 on the corpus and 1 after corruption", [&cli] {
    expect(!cli.empty(), "CLI binary path not supplied");
    std::string tmpl = (fs::temp_directory_path() / "ihara-accept-XXXXXX").string();
    const char* dir = mkdtemp(tmpl.data());
    expect(dir != nullptr, "cannot create a scratch directory");
    const fs::path scratch(dir);

    for (const Graph& g : full_corpus()) {
      const std::string graph_path = (scratch / (g.name() + ".json")).string();
      const std::string out_path = (scratch / (g.name() + ".out")).string();
      write_graph_file(g, graph_path);
      const int code = run_cli(cli, "verify --graph " + graph_path, out_path);
      expect(code == 0, g.name() + ": verify exited " + std::to_string(code));
    }

    const Graph tree = make_family({"tree_ball", {3, 3}});
    auto edges = tree.edges();
    edges.back().second = edges.back().first;  // orphan the last leaf
    const std::string bad_path = (scratch / "corrupt.json").string();
    const std::string bad_out = (scratch / "corrupt.out").string();
    write_graph_file(Graph("corrupt", tree.vertex_count(), edges), bad_path);
    const int code = run_cli(cli, "verify --graph " + bad_path, bad_out);
    expect(code == 1, "corrupt fixture: verify exited " + std::to_string(code));
    expect(slurp(bad_out).find("[fail]") != std::string::npos,
           "corrupt fixture: no failing suite entry reported");

    std::error_code ec;
    fs::remove_all(scratch, ec);
    return "8 fixtures plus 1 corrupted";
  });
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10(cli);
  if (failures > 0) {
    std::printf("%d of 10 criteria failed\n", failures);
    return 1;
  }
  std::printf("all 10 criteria passed\n");
  return 0;
}
