#pragma once

#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>

#include "pie/identities.hpp"

namespace pie {

enum class ReportFormat { Json, Csv, Text };

std::optional<ReportFormat> parse_report_format(std::string_view text);

/// Sorted keys, two-space indent, trailing line feed. An empty list is "[]".
std::string reports_to_json(std::span<const IdentityReport> reports);

/// Header line followed by one row per report.
std::string reports_to_csv(std::span<const IdentityReport> reports);

/// One "PASS|FAIL tag ..." line per report.
std::string reports_to_text(std::span<const IdentityReport> reports);

std::string render_reports(std::span<const IdentityReport> reports, ReportFormat format);

/// Writes the rendered reports; returns false if the stream fails.
bool emit_report(std::span<const IdentityReport> reports, ReportFormat format, std::ostream& sink);

}  // namespace pie
