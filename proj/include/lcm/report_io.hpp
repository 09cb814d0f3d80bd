#pragma once

#include <string>
#include <vector>

#include "lcm/bounds_catalog.hpp"
#include "lcm/report.hpp"

namespace lcmkit {

enum class Format { Text, Csv, Json };

// "text", "csv" or "json"; anything else throws std::invalid_argument.
Format format_from_string(const std::string& s);

// Elapsed time is written only when timing is set; otherwise it is 0 so that
// output does not depend on the machine or the worker count.
std::string report_text(const BoundReport& r, bool timing = false);

inline constexpr const char* kCsvHeader = "check_id,params,lhs_log,rhs_log,verdict,elapsed_ms";
// One row, no newline. lhs_log and rhs_log hold enclosure midpoints; empty for divisibility checks.
std::string report_csv(const BoundReport& r, bool timing = false);

// One JSON object on one line (JSON Lines).
std::string report_json(const BoundReport& r, bool timing = false);
// Inverse of report_json; throws std::invalid_argument on malformed input.
BoundReport report_from_json(const std::string& line);

std::string summary_text(const ScanSummary& s);
std::string summary_json(const ScanSummary& s);

std::string probe_text(const ProbeSeries& s);
std::string probe_csv(const ProbeSeries& s);
std::string probe_json(const ProbeSeries& s);
ProbeSeries probe_from_json(const std::string& text);

}  // namespace lcmkit
