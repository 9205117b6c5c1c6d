#include "spinthermal/cli/output.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace spinthermal::cli {

std::string format_number(double value, int fixed_decimals) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  if (fixed_decimals >= 0)
    std::snprintf(buf, sizeof buf, "%.*f", fixed_decimals, value);
  else
    std::snprintf(buf, sizeof buf, "%.12g", value);
  // snprintf honours LC_NUMERIC; the output format does not.
  for (char* p = buf; *p; ++p)
    if (*p == ',') *p = '.';
  std::string out(buf);
  if (out == "-0") out = "0";
  return out;
}

std::string render_csv(const Table& table) {
  std::ostringstream os;
  for (std::size_t i = 0; i < table.columns.size(); ++i) os << (i ? "," : "") << table.columns[i];
  os << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << format_number(row[i], table.fixed_decimals);
    os << '\n';
  }
  return os.str();
}

namespace {

nlohmann::json json_number(double value, int fixed_decimals) {
  if (!std::isfinite(value)) return nullptr;
  // Round-trip through the text form so JSON and CSV carry the same digits.
  return std::strtod(format_number(value, fixed_decimals).c_str(), nullptr);
}

}  // namespace

std::string render_json(const Table& table, const nlohmann::json& meta) {
  nlohmann::ordered_json doc;
  doc["meta"] = meta;
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json record = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size(); ++i)
      record[table.columns[i]] = json_number(row[i], table.fixed_decimals);
    rows.push_back(std::move(record));
  }
  doc["rows"] = std::move(rows);
  return doc.dump(2) + "\n";
}

nlohmann::json config_to_json(const RunConfig& c) {
  nlohmann::json meta;
  meta["command"] = std::string(to_string(c.command));
  meta["T"] = c.T ? nlohmann::json(*c.T) : nlohmann::json(nullptr);
  meta["format"] = std::string(to_string(c.format));
  if (c.command != Command::Verify) {
    const ModelSpec& m = c.model;
    nlohmann::json model;
    model["model"] = std::string(spinthermal::to_string(m.kind));
    if (m.kind == ModelKind::GeneralXYZ) {
      model["J1"] = m.couplings[0];
      model["J2"] = m.couplings[1];
      model["J3"] = m.couplings[2];
      model["B1"] = m.fields[0];
      model["B2"] = m.fields[1];
      model["B3"] = m.fields[2];
    } else {
      model["J"] = m.J;
      if (m.kind != ModelKind::XX) model["delta"] = m.delta;
      if (m.kind == ModelKind::XXZField) model["B"] = m.B;
    }
    meta["model"] = model;
  }
  auto axes = nlohmann::json::array();
  for (const auto& a : c.axes)
    axes.push_back({{"var", std::string(spinthermal::to_string(a.var))}, {"min", a.min}, {"max", a.max}, {"steps", a.steps}});
  meta["axes"] = axes;
  meta["columns"] = c.columns;
  return meta;
}

}  // namespace spinthermal::cli
