#include <algorithm>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI/CLI.hpp>

#include "ihara/errors.hpp"
#include "ihara/families.hpp"
#include "ihara/geodesics.hpp"
#include "ihara/graph.hpp"
#include "ihara/graph_io.hpp"
#include "ihara/local_counts.hpp"
#include "ihara/report_io.hpp"
#include "ihara/spectral.hpp"
#include "ihara/verification.hpp"
#include "ihara/zeta.hpp"

namespace {

struct CommonOptions {
  std::string graph_path;
  std::string format = "json";
  std::string output_path;
  double oracle_work_cap = 1e9;
};

void add_common(CLI::App* cmd, CommonOptions& opts, bool needs_graph = true) {
  auto* graph = cmd->add_option("--graph", opts.graph_path, "graph JSON file");
  if (needs_graph) graph->required();
  cmd->add_option("--format", opts.format, "output format (json or csv)")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--output", opts.output_path,
                  "write the report to this file instead of stdout");
  cmd->add_option("--oracle-work-cap", opts.oracle_work_cap,
                  "maximum estimated enumeration steps before refusing")
      ->envname("IHARA_ORACLE_WORK_CAP");
}

ihara::OracleLimits limits_from(const CommonOptions& opts, long order) {
  ihara::OracleLimits limits;
  limits.work_cap = opts.oracle_work_cap;
  // The default length ceiling guards interactive use; the work cap is the
  // real budget, so let explicitly requested orders through.
  if (order > limits.max_length) limits.max_length = order;
  return limits;
}

void emit(const CommonOptions& opts, const std::string& content) {
  if (opts.output_path.empty()) {
    std::cout << content;
  } else {
    ihara::write_text_file(opts.output_path, content);
  }
}

ihara::Graph load_graph(const CommonOptions& opts) {
  return ihara::read_graph_file(opts.graph_path);
}

// Off-diagonal series report: the factorized product is the reference, the
// spectral route cross-checks it on regular graphs.
ihara::ZetaReport off_diagonal_report(const ihara::Graph& g, ihara::Vertex x0,
                                      ihara::Vertex x, long order,
                                      const std::vector<ihara::ZetaMethod>& methods,
                                      const ihara::OracleLimits& limits) {
  using ihara::ZetaMethod;
  ihara::ZetaReport report;
  report.graph_name = g.name();
  report.base_vertex = x0;
  report.target_vertex = x;
  report.order = order;

  for (ZetaMethod method : methods) {
    ihara::MethodSeries entry;
    entry.method = method;
    try {
      switch (method) {
        case ZetaMethod::four_factor:
          entry.exact = true;
          entry.rational = ihara::zeta_four_factor(g, x0, x, order, limits).product;
          entry.approx = ihara::to_float_series(entry.rational);
          break;
        case ZetaMethod::spectral:
          entry.approx = ihara::zeta_spectral(g, x0, x, order, limits);
          break;
        default:
          throw ihara::InputError(
              "method \"" + ihara::to_string(method) +
              "\" is defined at a single vertex; drop --target-vertex");
      }
    } catch (const ihara::AssumptionError& e) {
      entry.refused = true;
      entry.refusal_reason = e.what();
    }
    report.series.push_back(std::move(entry));
  }

  const ihara::MethodSeries* reference = nullptr;
  for (const auto& entry : report.series) {
    if (!entry.refused && entry.method == ZetaMethod::four_factor) reference = &entry;
  }
  if (reference != nullptr) {
    for (const auto& entry : report.series) {
      if (entry.refused || &entry == reference) continue;
      double worst = 0;
      for (long k = 0; k <= order; ++k) {
        worst = std::max(worst,
                         std::abs(entry.approx.coeff(k) - reference->approx.coeff(k)));
      }
      ihara::MethodComparison cmp;
      cmp.a = ihara::to_string(reference->method);
      cmp.b = ihara::to_string(entry.method);
      cmp.max_deviation = worst;
      cmp.exact = false;
      cmp.pass = worst <= 1e-8;
      report.comparisons.push_back(cmp);
      if (!cmp.pass) report.all_pass = false;
    }
  }
  return report;
}

int run_count(const CommonOptions& opts, std::int64_t vertex, long max_length,
              const std::string& what) {
  const ihara::Graph g = load_graph(opts);
  ihara::CountReport report;
  report.graph_name = g.name();
  report.table = ihara::count_closed_geodesics(g, vertex, max_length,
                                               limits_from(opts, max_length));
  report.include_loops = (what != "closed-geodesics");
  report.include_closed = (what != "geodesic-loops");
  emit(opts, opts.format == "json" ? to_json(report) : to_csv(report));
  return 0;
}

int run_series(const CommonOptions& opts, std::int64_t vertex,
               std::int64_t target_vertex, bool has_target, long order,
               const std::string& method_name) {
  const ihara::Graph g = load_graph(opts);
  const ihara::OracleLimits limits = limits_from(opts, order);

  std::vector<ihara::ZetaMethod> methods;
  if (method_name == "all") {
    methods = ihara::all_zeta_methods();
  } else {
    methods.push_back(ihara::zeta_method_from_string(method_name));
  }

  ihara::ZetaReport report;
  if (has_target && target_vertex != vertex) {
    if (method_name == "all") {
      methods = {ihara::ZetaMethod::four_factor, ihara::ZetaMethod::spectral};
    }
    report = off_diagonal_report(g, vertex, target_vertex, order, methods, limits);
  } else {
    report = ihara::compare_methods(g, vertex, order, methods, limits);
  }
  emit(opts, opts.format == "json" ? to_json(report) : to_csv(report));
  return report.all_pass ? 0 : 1;
}

int run_spectrum(const CommonOptions& opts, std::int64_t vertex) {
  const ihara::Graph g = load_graph(opts);
  const ihara::SpectrumReport report = ihara::make_spectrum_report(g, vertex);
  emit(opts, opts.format == "json" ? to_json(report) : to_csv(report));
  return 0;
}

int run_verify(const CommonOptions& opts, long order) {
  const ihara::Graph g = load_graph(opts);
  const ihara::VerificationReport report =
      ihara::run_verification(g, order, limits_from(opts, order));
  std::cout << to_text_table(report);
  if (!opts.output_path.empty()) {
    ihara::write_text_file(opts.output_path, opts.format == "json"
                                                 ? to_json(report)
                                                 : to_csv(report));
  }
  return report.all_pass ? 0 : 1;
}

int run_family(const CommonOptions& opts, const std::string& kind,
               const std::vector<std::int64_t>& params, const std::string& name,
               const std::string& output) {
  ihara::FamilySpec spec;
  spec.kind = kind;
  spec.params.assign(params.begin(), params.end());
  ihara::Graph g = ihara::make_family(spec);
  if (!name.empty()) g = ihara::Graph(name, g.vertex_count(), g.edges());
  const std::string path = output.empty() ? g.name() + ".json" : output;
  ihara::write_graph_file(g, path);
  std::cout << "wrote " << path << " (" << g.vertex_count() << " vertices, "
            << g.edge_count() << " edges)\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"generalized Ihara zeta functions of bounded-degree graphs"};
  app.require_subcommand(1);

  CommonOptions count_opts;
  std::int64_t count_vertex = 0;
  long count_max_length = 10;
  std::string count_what = "all";
  auto* count_cmd =
      app.add_subcommand("count", "closed geodesic and geodesic loop counts");
  add_common(count_cmd, count_opts);
  count_cmd->add_option("--vertex", count_vertex, "base vertex");
  count_cmd->add_option("--max-length", count_max_length, "largest length counted")
      ->check(CLI::PositiveNumber);
  count_cmd->add_option("--what", count_what, "which counts to emit")
      ->check(CLI::IsMember({"closed-geodesics", "geodesic-loops", "all"}));

  CommonOptions series_opts;
  std::int64_t series_vertex = 0;
  std::int64_t series_target = 0;
  long series_order = 10;
  std::string series_method = "all";
  auto* series_cmd =
      app.add_subcommand("series", "zeta series by one or all methods");
  add_common(series_cmd, series_opts);
  series_cmd->add_option("--vertex", series_vertex, "base vertex");
  auto* target_opt = series_cmd->add_option("--target-vertex", series_target,
                                            "target vertex of the two-variable zeta");
  series_cmd->add_option("--order", series_order, "truncation order")
      ->check(CLI::PositiveNumber);
  series_cmd->add_option(
      "--method", series_method,
      "counts, loop_series, four_factor, spectral, local_det, global_det, or all");

  CommonOptions spectrum_opts;
  std::int64_t spectrum_vertex = 0;
  auto* spectrum_cmd = app.add_subcommand(
      "spectrum", "Laplacian eigenvalues and the local spectrum at a vertex");
  add_common(spectrum_cmd, spectrum_opts);
  spectrum_cmd->add_option("--vertex", spectrum_vertex, "vertex for the local spectrum");

  CommonOptions verify_opts;
  long verify_order = 10;
  auto* verify_cmd =
      app.add_subcommand("verify", "run the full identity suite against the graph");
  add_common(verify_cmd, verify_opts);
  verify_cmd->add_option("--order", verify_order, "truncation order")
      ->check(CLI::PositiveNumber);

  CommonOptions family_opts;
  std::string family_kind;
  std::vector<std::int64_t> family_params;
  std::string family_name;
  std::string family_output;
  auto* family_cmd = app.add_subcommand("family", "generate a named graph family");
  family_cmd->add_option("--kind", family_kind, "family kind")
      ->required()
      ->check(CLI::IsMember(ihara::family_kinds()));
  family_cmd->add_option("--params", family_params, "family parameters");
  family_cmd->add_option("--name", family_name, "override the generated name");
  family_cmd->add_option("--output", family_output,
                         "output path (default <name>.json)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // help/version exit clean, bad flags are config errors
  }

  try {
    if (count_cmd->parsed()) {
      return run_count(count_opts, count_vertex, count_max_length, count_what);
    }
    if (series_cmd->parsed()) {
      return run_series(series_opts, series_vertex, series_target,
                        target_opt->count() > 0, series_order, series_method);
    }
    if (spectrum_cmd->parsed()) {
      return run_spectrum(spectrum_opts, spectrum_vertex);
    }
    if (verify_cmd->parsed()) {
      return run_verify(verify_opts, verify_order);
    }
    if (family_cmd->parsed()) {
      return run_family(family_opts, family_kind, family_params, family_name,
                        family_output);
    }
  } catch (const ihara::WorkCapError& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return 2;
  } catch (const ihara::AssumptionError& e) {
    std::cerr << "not applicable: " << e.what() << "\n";
    return 2;
  } catch (const ihara::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
