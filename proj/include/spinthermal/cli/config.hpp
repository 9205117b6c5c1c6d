#pragma once

// Run configuration for the spinthermal command-line tool.
//
// File format: UTF-8, one `key = value` per line, `[section]` headers,
// blank lines and lines starting with '#' or ';' ignored.
//
//   command = sweep            # root section: command, T, workers
//   T = 1
//   [model]                    # model, J, delta (alias Δ), B, J1..J3, B1..B3, T
//   model = xxzfield
//   J = 1
//   delta = 1
//   B = 2
//   [axis1]                    # also [axis2]: var, min, max, steps
//   var = T
//   min = 0.02
//   max = 4
//   steps = 200
//   [output]                   # path, format (csv|json), columns
//   format = csv

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "spinthermal/errors.hpp"
#include "spinthermal/spin_model.hpp"
#include "spinthermal/sweep.hpp"

namespace spinthermal::cli {

enum class Command { Eig, Thermal, Concurrence, Critical, Sweep, Verify };
enum class OutputFormat { Csv, Json };

std::string_view to_string(Command c);
std::optional<Command> parse_command(std::string_view name);
std::string_view to_string(OutputFormat f);

struct RunConfig {
  Command command = Command::Verify;
  ModelSpec model;
  std::optional<double> T;
  std::vector<SweepAxis> axes;
  std::vector<std::string> columns;  // sweep only; empty selects axes + C
  std::string out_path;              // empty writes to stdout
  OutputFormat format = OutputFormat::Csv;
  unsigned workers = 0;

  bool operator==(const RunConfig&) const = default;
};

class ConfigError : public Error {
 public:
  enum class Kind { Parse, Validation, UnknownKey };

  ConfigError(Kind kind, int line, std::string field, const std::string& message);

  Kind kind() const { return kind_; }
  int line() const { return line_; }  // 0 when not tied to a file line
  const std::string& field() const { return field_; }

 private:
  Kind kind_;
  int line_;
  std::string field_;
};

/// Keys are "section.key" with an empty section for root keys ("command").
struct RawConfig {
  struct Entry {
    std::string value;
    int line = 0;
  };
  std::map<std::string, Entry> entries;

  /// Overrides (e.g. from command-line flags) always win. Key is validated.
  void set(const std::string& key, std::string value);
};

RawConfig read_raw(std::string_view text);
RunConfig resolve(const RawConfig& raw);
inline RunConfig parse_config(std::string_view text) { return resolve(read_raw(text)); }

/// Canonical text form; parse_config(serialize(c)) == c.
std::string serialize(const RunConfig& config);

}  // namespace spinthermal::cli
