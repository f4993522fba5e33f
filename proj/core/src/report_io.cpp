#include "ihara/report_io.hpp"

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <nlohmann/json.hpp>

#include "ihara/errors.hpp"
#include "ihara/numbers.hpp"

namespace ihara {

namespace {

using json = nlohmann::ordered_json;

std::string float17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

json rational_pair(const Rational& r) {
  return json::array({numerator(r).str(), denominator(r).str()});
}

json scalar_coeffs(const ScalarSeries& s) {
  json coeffs = json::array();
  for (long k = 0; k <= s.order(); ++k) coeffs.push_back(rational_pair(s.coeff(k)));
  return coeffs;
}

json float_coeffs(const FloatSeries& s) {
  json coeffs = json::array();
  for (long k = 0; k <= s.order(); ++k) coeffs.push_back(s.coeff(k));
  return coeffs;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

Rational rational_from_pair(const json& pair) {
  if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() ||
      !pair[1].is_string()) {
    throw InputError("series coefficient must be a [\"num\", \"den\"] pair");
  }
  Int num;
  Int den;
  try {
    num = Int(pair[0].get<std::string>());
    den = Int(pair[1].get<std::string>());
  } catch (const std::runtime_error&) {
    throw InputError("series coefficient is not a decimal integer pair");
  }
  if (den == 0) throw InputError("series coefficient has zero denominator");
  return Rational(num, den);
}

}  // namespace

ReportFormat report_format_from_string(const std::string& name) {
  if (name == "json") return ReportFormat::json;
  if (name == "csv") return ReportFormat::csv;
  throw InputError("unknown report format \"" + name + "\" (expected json or csv)");
}

std::string series_to_json(const ScalarSeries& s) {
  json j;
  j["order"] = s.order();
  j["coeffs"] = scalar_coeffs(s);
  return dump(j);
}

ScalarSeries series_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("invalid series JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("order") || !j.contains("coeffs") ||
      !j["order"].is_number_integer() || !j["coeffs"].is_array()) {
    throw InputError("series JSON needs integer \"order\" and array \"coeffs\"");
  }
  const long order = j["order"].get<long>();
  if (order < 0 || j["coeffs"].size() != static_cast<std::size_t>(order) + 1) {
    throw InputError("series JSON coefficient count does not match its order");
  }
  ScalarSeries s(order);
  for (long k = 0; k <= order; ++k) {
    s.coeff(k) = rational_from_pair(j["coeffs"][static_cast<std::size_t>(k)]);
  }
  return s;
}

std::string series_to_json(const FloatSeries& s) {
  json j;
  j["order"] = s.order();
  j["coeffs"] = float_coeffs(s);
  return dump(j);
}

std::string matrix_series_to_json(const RationalMatrixSeries& s) {
  json j;
  j["order"] = s.order();
  json coeffs = json::array();
  for (long k = 0; k <= s.order(); ++k) {
    const auto& m = s.coeff(k);
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
      json row = json::array();
      for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(rational_pair(m(i, c)));
      rows.push_back(std::move(row));
    }
    coeffs.push_back(std::move(rows));
  }
  j["coeffs"] = std::move(coeffs);
  return dump(j);
}

std::string to_json(const CountReport& report) {
  json j;
  j["graph"] = report.graph_name;
  j["vertex"] = report.table.base_vertex;
  j["max_length"] = report.table.max_length;
  if (report.include_loops) {
    json loops = json::array();
    for (const Int& c : report.table.loops) loops.push_back(c.str());
    j["geodesic_loops"] = std::move(loops);
  }
  if (report.include_closed) {
    json closed = json::array();
    for (const Int& n : report.table.closed) closed.push_back(n.str());
    j["closed_geodesics"] = std::move(closed);
  }
  return dump(j);
}

std::string to_csv(const CountReport& report) {
  std::ostringstream out;
  out << "length";
  if (report.include_loops) out << ",geodesic_loops";
  if (report.include_closed) out << ",closed_geodesics";
  out << "\n";
  for (std::size_t m = 0; m < report.table.loops.size(); ++m) {
    out << m;
    if (report.include_loops) out << "," << report.table.loops[m];
    if (report.include_closed) out << "," << report.table.closed[m];
    out << "\n";
  }
  return out.str();
}

SpectrumReport make_spectrum_report(const Graph& g, Vertex x) {
  if (x < 0 || x >= g.vertex_count()) throw InputError("vertex out of range");
  const EigenDecomposition decomp = laplacian_eigendecomposition(g);
  SpectrumReport report;
  report.graph_name = g.name();
  report.vertex = x;
  report.eigenvalues = decomp.eigenvalues;
  report.local_spectrum = local_spectrum(decomp, static_cast<std::size_t>(x));
  return report;
}

std::string to_json(const SpectrumReport& report) {
  json j;
  j["graph"] = report.graph_name;
  j["vertex"] = report.vertex;
  j["laplacian_eigenvalues"] = report.eigenvalues;
  json local = json::array();
  for (const auto& [value, weight] : report.local_spectrum) {
    local.push_back({{"eigenvalue", value}, {"multiplicity", weight}});
  }
  j["local_spectrum"] = std::move(local);
  return dump(j);
}

std::string to_csv(const SpectrumReport& report) {
  std::ostringstream out;
  out << "eigenvalue,local_multiplicity\n";
  for (const auto& [value, weight] : report.local_spectrum) {
    out << float17(value) << "," << float17(weight) << "\n";
  }
  return out.str();
}

std::string to_json(const ZetaReport& report) {
  json j;
  j["graph"] = report.graph_name;
  j["vertex"] = report.base_vertex;
  j["target_vertex"] = report.target_vertex;
  j["order"] = report.order;
  json series = json::object();
  for (const MethodSeries& entry : report.series) {
    json node;
    if (entry.refused) {
      node["refused"] = true;
      node["reason"] = entry.refusal_reason;
    } else {
      node["exact"] = entry.exact;
      node["coeffs"] =
          entry.exact ? scalar_coeffs(entry.rational) : float_coeffs(entry.approx);
    }
    series[to_string(entry.method)] = std::move(node);
  }
  j["series"] = std::move(series);
  json comparisons = json::array();
  for (const MethodComparison& cmp : report.comparisons) {
    comparisons.push_back({{"a", cmp.a},
                           {"b", cmp.b},
                           {"max_deviation", cmp.max_deviation},
                           {"exact", cmp.exact},
                           {"pass", cmp.pass}});
  }
  j["comparisons"] = std::move(comparisons);
  j["all_pass"] = report.all_pass;
  return dump(j);
}

std::string to_csv(const ZetaReport& report) {
  std::ostringstream out;
  out << "index";
  for (const MethodSeries& entry : report.series) {
    if (entry.refused) continue;
    out << "," << to_string(entry.method);
  }
  out << "\n";
  for (long k = 0; k <= report.order; ++k) {
    out << k;
    for (const MethodSeries& entry : report.series) {
      if (entry.refused) continue;
      if (entry.exact) {
        out << "," << to_fraction_string(entry.rational.coeff(k));
      } else {
        out << "," << float17(entry.approx.coeff(k));
      }
    }
    out << "\n";
  }
  return out.str();
}

std::string to_json(const VerificationReport& report) {
  json j;
  j["graph"] = report.graph_name;
  j["order"] = report.order;
  json checks = json::array();
  for (const CheckResult& check : report.checks) {
    checks.push_back({{"name", check.name},
                      {"status", to_string(check.status)},
                      {"detail", check.detail}});
  }
  j["checks"] = std::move(checks);
  j["all_pass"] = report.all_pass;
  return dump(j);
}

std::string to_csv(const VerificationReport& report) {
  std::ostringstream out;
  out << "check,status,detail\n";
  for (const CheckResult& check : report.checks) {
    out << csv_escape(check.name) << "," << to_string(check.status) << ","
        << csv_escape(check.detail) << "\n";
  }
  return out.str();
}

std::string to_text_table(const VerificationReport& report) {
  std::size_t width = 0;
  for (const CheckResult& check : report.checks) {
    width = std::max(width, check.name.size());
  }
  std::ostringstream out;
  out << "verification of " << report.graph_name << " (order " << report.order
      << ")\n";
  for (const CheckResult& check : report.checks) {
    out << "  " << std::left << std::setw(static_cast<int>(width) + 2)
        << check.name << std::setw(0) << "[" << to_string(check.status) << "]";
    if (!check.detail.empty()) out << "  " << check.detail;
    out << "\n";
  }
  out << (report.all_pass ? "all checks passed" : "FAILURES PRESENT") << "\n";
  return out.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot open file for writing: " + path);
  out << content;
  if (!out) throw InputError("failed while writing: " + path);
}

}  // namespace ihara
