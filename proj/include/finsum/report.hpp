#pragma once

// Human, JSON and CSV renderings of check, scan and series results.
//
// JSON schema
//   checks: [{"id", "h", "k", "lhs", "rhs", "pass"}]
//   scans:  [{"id", "mode", "range": {"h_min", "h_max", "k_min", "k_max"},
//             "checked", "failures": [check...], "aborted", "elapsed_ms",
//             "observations": {name: text}}]
//   series: {"kind", "h", "k", "approx", "exact", "abs_error", "depth"}
// Rationals are always strings "p/q" (or "n"). h and k are JSON integers,
// or decimal strings when they do not fit in 64 bits.
//
// CSV columns: identity,h,k,lhs,rhs,pass. A scan emits one row per failure.

#include <optional>
#include <span>
#include <string>
#include <string_view>

#include <json.hpp>

#include "finsum/registry.hpp"
#include "finsum/series.hpp"

namespace finsum {

enum class OutputFormat { Human, Json, Csv };

std::optional<OutputFormat> parse_output_format(std::string_view name);
std::string_view to_string(OutputFormat format);

nlohmann::json to_json(const CheckReport& report);
CheckReport check_report_from_json(const nlohmann::json& j);

/// With include_timing == false, elapsed_ms is written as 0 so that the
/// output depends only on the scanned data.
nlohmann::json to_json(const ScanReport& report, bool include_timing = true);
ScanReport scan_report_from_json(const nlohmann::json& j);

nlohmann::json to_json(const SeriesResult& result);

std::string render_checks(std::span<const CheckReport> reports, OutputFormat format);
std::string render_scans(std::span<const ScanReport> reports, OutputFormat format, bool include_timing = true);
std::string render_series(std::span<const SeriesResult> results, OutputFormat format);

}  // namespace finsum
