#pragma once

// Text and JSON forms of classification reports. The JSON block sits between
// marker lines so that scripts can cut it out of the human-readable output.

#include <frontcalc/classifier.hpp>

#include <json.hpp>

#include <string>
#include <string_view>

namespace frontcalc {

inline constexpr std::string_view kReportBegin = "--- BEGIN REPORT ---";
inline constexpr std::string_view kReportEnd = "--- END REPORT ---";

struct ReportDocument {
  /// "pedal" or "legendrian" (or "none" when no pipeline applied).
  std::string pipeline;
  ClassificationReport report;

  friend bool operator==(const ReportDocument&, const ReportDocument&) = default;
};

nlohmann::ordered_json to_json(const ReportDocument& doc);
/// Throws std::invalid_argument on malformed input.
ReportDocument report_from_json(const nlohmann::ordered_json& j);

/// Marker lines around the pretty-printed JSON.
std::string emit_report_block(const ReportDocument& doc);
/// Finds the first block in `text`.
ReportDocument parse_report_block(std::string_view text);

std::string human_report(const ReportDocument& doc);

Verdict verdict_from_string(std::string_view s);
PedalRoute route_from_string(std::string_view s);

}  // namespace frontcalc
