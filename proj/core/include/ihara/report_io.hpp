#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ihara/geodesics.hpp"
#include "ihara/graph.hpp"
#include "ihara/series.hpp"
#include "ihara/spectral.hpp"
#include "ihara/verification.hpp"
#include "ihara/zeta.hpp"

namespace ihara {

// Serialization of the report objects the CLI emits. Rationals are rendered
// losslessly: JSON stores ["numerator", "denominator"] decimal-string pairs,
// CSV stores "num/den"; floats are written with 17 significant digits.
enum class ReportFormat { json, csv };

ReportFormat report_format_from_string(const std::string& name);

std::string series_to_json(const ScalarSeries& s);
ScalarSeries series_from_json(const std::string& text);
std::string series_to_json(const FloatSeries& s);
std::string matrix_series_to_json(const RationalMatrixSeries& s);

struct CountReport {
  std::string graph_name;
  CountTable table;
  bool include_loops = true;
  bool include_closed = true;
};

std::string to_json(const CountReport& report);
std::string to_csv(const CountReport& report);

struct SpectrumReport {
  std::string graph_name;
  Vertex vertex = 0;
  std::vector<double> eigenvalues;                        // with multiplicity
  std::vector<std::pair<double, double>> local_spectrum;  // (value, weight)
};

SpectrumReport make_spectrum_report(const Graph& g, Vertex x);
std::string to_json(const SpectrumReport& report);
std::string to_csv(const SpectrumReport& report);

std::string to_json(const ZetaReport& report);
// One row per coefficient index, one column per method that produced output.
std::string to_csv(const ZetaReport& report);

std::string to_json(const VerificationReport& report);
std::string to_csv(const VerificationReport& report);
// Fixed-width pass/fail table for terminal output.
std::string to_text_table(const VerificationReport& report);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace ihara
