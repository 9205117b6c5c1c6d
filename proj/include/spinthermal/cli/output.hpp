#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "spinthermal/cli/config.hpp"

namespace spinthermal::cli {

/// Rectangular numeric result. Values print with 12 significant digits
/// unless fixed_decimals >= 0.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  int fixed_decimals = -1;
};

/// "nan", "inf", "-inf" for non-finite values; '.' decimal separator always.
std::string format_number(double value, int fixed_decimals = -1);

/// Header row plus one line per row, comma-separated, LF endings.
std::string render_csv(const Table& table);

/// {"meta": <meta>, "rows": [{column: value, ...}, ...]}; non-finite values become null.
std::string render_json(const Table& table, const nlohmann::json& meta);

/// Fully resolved configuration as JSON (the `meta` block).
nlohmann::json config_to_json(const RunConfig& config);

}  // namespace spinthermal::cli
