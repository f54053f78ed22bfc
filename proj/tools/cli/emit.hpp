#pragma once

// Deterministic text renderers: RFC 4180 CSV, SVG 1.1 polyline plots, JSON records.

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "config.hpp"
#include "kakeya/bounds.hpp"
#include "kakeya/optimizer.hpp"
#include "kakeya/oracle.hpp"

namespace kakeya::cli {

// %.17g: enough digits to round-trip any double
std::string format_real(double x);

// %.<digits>g
std::string format_digits(double x, int digits);

std::string csv_field(const std::string& text);
std::string to_csv(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows);
std::string to_csv(const OutputTable& table);

// Polyline of column y_col against column x_col (or the row index when x_col < 0).
std::string to_svg(const OutputTable& table, int x_col, int y_col);

nlohmann::ordered_json to_json(const bounds::BoundParams<double>& params);
nlohmann::ordered_json to_json(const bounds::BoundBreakdown<double>& breakdown);
nlohmann::ordered_json to_json(const oracle::CheckReport& report);
nlohmann::ordered_json to_json(const opt::SearchBox& box);
nlohmann::ordered_json to_json(const opt::OptimizationResult& result);
nlohmann::ordered_json to_json(const OutputTable& table);

void write_text(const std::filesystem::path& path, const std::string& text);

}  // namespace kakeya::cli
