#pragma once

#include <string>
#include <vector>

#include "strtherm/ensemble.hpp"
#include "strtherm/equilibrium.hpp"
#include "strtherm/pipeline.hpp"

namespace strtherm {

/// Bumped whenever a field is added, renamed or removed from the report.
inline constexpr int kReportVersion = 1;

std::string report_json(const AnalysisResult& r);
std::string report_csv_header();
std::string report_csv_row(const AnalysisResult& r);
std::string report_human(const AnalysisResult& r);
std::string render_report(const AnalysisResult& r, OutputFormat format);

/// Observed distribution: CSV with header "C,N_count" or a JSON array of {c, n}.
std::string histogram_csv(const Histogram& h);
std::string histogram_json(const Histogram& h);

/// Model curve: CSV with header "C,N_normal,N_binomial".
std::string curves_csv(const std::vector<CurvePoint>& curve);

std::string summary_csv(const std::vector<SummaryRow>& rows);
std::string summary_human(const std::vector<SummaryRow>& rows);

/// Shortest round-trip decimal form; "nan"/"inf" for non-finite values.
std::string format_number(double value);

}  // namespace strtherm
