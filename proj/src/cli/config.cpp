#include "spinthermal/cli/config.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

namespace spinthermal::cli {

std::string_view to_string(Command c) {
  switch (c) {
    case Command::Eig: return "eig";
    case Command::Thermal: return "thermal";
    case Command::Concurrence: return "concurrence";
    case Command::Critical: return "critical";
    case Command::Sweep: return "sweep";
    case Command::Verify: return "verify";
  }
  return "?";
}

std::optional<Command> parse_command(std::string_view name) {
  for (Command c : {Command::Eig, Command::Thermal, Command::Concurrence, Command::Critical,
                    Command::Sweep, Command::Verify})
    if (to_string(c) == name) return c;
  return std::nullopt;
}

std::string_view to_string(OutputFormat f) { return f == OutputFormat::Json ? "json" : "csv"; }

namespace {

std::string describe(ConfigError::Kind kind, int line, const std::string& message) {
  std::string prefix;
  switch (kind) {
    case ConfigError::Kind::Parse: prefix = "parse error"; break;
    case ConfigError::Kind::Validation: prefix = "invalid config"; break;
    case ConfigError::Kind::UnknownKey: prefix = "unknown key"; break;
  }
  if (line > 0) prefix += " (line " + std::to_string(line) + ")";
  return prefix + ": " + message;
}

const std::map<std::string, std::set<std::string>>& allowed_keys() {
  static const std::map<std::string, std::set<std::string>> keys = {
      {"", {"command", "T", "workers"}},
      {"model", {"model", "J", "delta", "B", "J1", "J2", "J3", "B1", "B2", "B3", "T"}},
      {"axis1", {"var", "min", "max", "steps"}},
      {"axis2", {"var", "min", "max", "steps"}},
      {"output", {"path", "format", "columns"}},
  };
  return keys;
}

std::string canonical_key(std::string_view key) {
  if (key == "Δ" || key == "Delta") return "delta";
  return std::string(key);
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

// Splits "section.key"; root keys have no dot.
std::pair<std::string, std::string> split_key(const std::string& full) {
  const auto dot = full.find('.');
  if (dot == std::string::npos) return {"", full};
  return {full.substr(0, dot), full.substr(dot + 1)};
}

void check_known(const std::string& section, const std::string& key, int line) {
  const auto& keys = allowed_keys();
  const auto it = keys.find(section);
  if (it == keys.end())
    throw ConfigError(ConfigError::Kind::UnknownKey, line, section, "unknown section [" + section + "]");
  if (!it->second.contains(key)) {
    const std::string name = section.empty() ? key : section + "." + key;
    throw ConfigError(ConfigError::Kind::UnknownKey, line, name, "'" + name + "' is not a recognised key");
  }
}

class Resolver {
 public:
  explicit Resolver(const RawConfig& raw) : raw_(raw) {}

  const RawConfig::Entry* find(const std::string& key) const {
    const auto it = raw_.entries.find(key);
    return it == raw_.entries.end() ? nullptr : &it->second;
  }

  [[noreturn]] void fail(const std::string& key, const std::string& message) const {
    const auto* e = find(key);
    throw ConfigError(ConfigError::Kind::Validation, e ? e->line : 0, key, message);
  }

  std::optional<double> real(const std::string& key) const {
    const auto* e = find(key);
    if (!e) return std::nullopt;
    double value = 0.0;
    const char* first = e->value.data();
    const char* last = first + e->value.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || !std::isfinite(value))
      fail(key, "'" + key + "' must be a finite real number, got '" + e->value + "'");
    return value;
  }

  double required_real(const std::string& key) const {
    if (auto v = real(key)) return *v;
    fail(key, "missing required field '" + key + "'");
  }

  std::optional<long> integer(const std::string& key) const {
    const auto* e = find(key);
    if (!e) return std::nullopt;
    long value = 0;
    const char* first = e->value.data();
    const char* last = first + e->value.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) fail(key, "'" + key + "' must be an integer, got '" + e->value + "'");
    return value;
  }

  std::optional<std::string> text(const std::string& key) const {
    const auto* e = find(key);
    return e ? std::optional(e->value) : std::nullopt;
  }

 private:
  const RawConfig& raw_;
};

ModelSpec resolve_model(const Resolver& r) {
  const auto name = r.text("model.model");
  if (!name) r.fail("model.model", "missing required field 'model.model'");
  ModelKind kind;
  try {
    kind = parse_model_kind(*name);
  } catch (const std::invalid_argument&) {
    r.fail("model.model", "'model.model' must be one of xx, xxz, xxzfield, xyz; got '" + *name + "'");
  }
  switch (kind) {
    case ModelKind::XX: return ModelSpec::xx(r.required_real("model.J"));
    case ModelKind::XXZ: return ModelSpec::xxz(r.required_real("model.J"), r.required_real("model.delta"));
    case ModelKind::XXZField:
      return ModelSpec::xxz_field(r.required_real("model.J"), r.required_real("model.delta"),
                                  r.required_real("model.B"));
    case ModelKind::GeneralXYZ:
      return ModelSpec::xyz({r.required_real("model.J1"), r.required_real("model.J2"), r.required_real("model.J3")},
                            {r.real("model.B1").value_or(0.0), r.real("model.B2").value_or(0.0),
                             r.real("model.B3").value_or(0.0)});
  }
  return {};
}

SweepAxis resolve_axis(const Resolver& r, const std::string& section) {
  SweepAxis axis;
  const auto var = r.text(section + ".var");
  if (!var) r.fail(section + ".var", "missing required field '" + section + ".var'");
  try {
    axis.var = parse_sweep_var(*var);
  } catch (const std::invalid_argument&) {
    r.fail(section + ".var", "'" + section + ".var' must be one of T, J, delta, B; got '" + *var + "'");
  }
  axis.min = r.required_real(section + ".min");
  axis.max = r.required_real(section + ".max");
  const auto steps = r.integer(section + ".steps");
  if (!steps) r.fail(section + ".steps", "missing required field '" + section + ".steps'");
  if (*steps < 2) r.fail(section + ".steps", "'" + section + ".steps' must be >= 2");
  if (*steps > 10'000'000) r.fail(section + ".steps", "'" + section + ".steps' is too large");
  axis.steps = static_cast<int>(*steps);
  if (!(axis.min < axis.max)) r.fail(section + ".max", "'" + section + ".min' must be < '" + section + ".max'");
  return axis;
}

std::vector<std::string> split_columns(std::string_view list) {
  std::vector<std::string> out;
  while (!list.empty()) {
    const auto comma = list.find(',');
    const auto item = trim(list.substr(0, comma));
    if (!item.empty()) out.emplace_back(canonical_key(item));
    if (comma == std::string_view::npos) break;
    list.remove_prefix(comma + 1);
  }
  return out;
}

std::string format_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

ConfigError::ConfigError(Kind kind, int line, std::string field, const std::string& message)
    : Error(describe(kind, line, message)), kind_(kind), line_(line), field_(std::move(field)) {}

void RawConfig::set(const std::string& key, std::string value) {
  auto [section, name] = split_key(key);
  name = canonical_key(name);
  check_known(section, name, 0);
  entries[section.empty() ? name : section + "." + name] = {std::move(value), 0};
}

RawConfig read_raw(std::string_view text) {
  RawConfig raw;
  std::string section;
  std::istringstream in{std::string(text)};
  std::string buffer;
  int line_no = 0;
  while (std::getline(in, buffer)) {
    ++line_no;
    const std::string_view line = trim(buffer);
    if (line.empty() || line.front() == '#' || line.front() == ';') continue;

    if (line.front() == '[') {
      if (line.back() != ']')
        throw ConfigError(ConfigError::Kind::Parse, line_no, "", "unterminated section header");
      section = std::string(trim(line.substr(1, line.size() - 2)));
      if (section.empty() || !allowed_keys().contains(section))
        throw ConfigError(ConfigError::Kind::UnknownKey, line_no, section, "unknown section [" + section + "]");
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string_view::npos)
      throw ConfigError(ConfigError::Kind::Parse, line_no, "",
                        "expected 'key = value', got '" + std::string(line) + "'");
    const std::string key = canonical_key(trim(line.substr(0, eq)));
    const std::string value(trim(line.substr(eq + 1)));
    if (key.empty()) throw ConfigError(ConfigError::Kind::Parse, line_no, "", "empty key");
    if (value.empty()) throw ConfigError(ConfigError::Kind::Parse, line_no, key, "missing value for '" + key + "'");
    check_known(section, key, line_no);
    raw.entries[section.empty() ? key : section + "." + key] = {value, line_no};
  }
  return raw;
}

RunConfig resolve(const RawConfig& raw) {
  const Resolver r(raw);
  RunConfig config;

  const auto command = r.text("command");
  if (!command) r.fail("command", "missing required field 'command'");
  const auto parsed = parse_command(*command);
  if (!parsed) r.fail("command", "unknown command '" + *command + "'");
  config.command = *parsed;

  // T may appear at the root or in [model]; the root value wins.
  if (auto t = r.real("model.T")) config.T = t;
  if (auto t = r.real("T")) config.T = t;
  const std::string t_key = r.find("T") ? "T" : "model.T";

  if (auto w = r.integer("workers")) {
    if (*w < 0) r.fail("workers", "'workers' must be >= 0");
    config.workers = static_cast<unsigned>(*w);
  }

  if (auto path = r.text("output.path")) config.out_path = *path;
  if (auto format = r.text("output.format")) {
    if (*format == "csv") config.format = OutputFormat::Csv;
    else if (*format == "json") config.format = OutputFormat::Json;
    else r.fail("output.format", "'output.format' must be csv or json, got '" + *format + "'");
  }

  if (config.command == Command::Verify) return config;

  config.model = resolve_model(r);

  switch (config.command) {
    case Command::Thermal:
      if (!config.T) r.fail("T", "missing required field 'T'");
      if (*config.T < 0.0) r.fail(t_key, "'T' must be >= 0");
      break;
    case Command::Concurrence:
      if (!config.T) r.fail("T", "missing required field 'T'");
      if (*config.T <= 0.0) r.fail(t_key, "'T' must be > 0");
      break;
    case Command::Sweep: {
      if (!r.find("axis1.var") && !r.find("axis1.min"))
        r.fail("axis1", "sweep requires an [axis1] section");
      config.axes.push_back(resolve_axis(r, "axis1"));
      bool has_axis2 = false;
      for (const auto& [key, entry] : raw.entries) has_axis2 |= key.starts_with("axis2.");
      if (has_axis2) config.axes.push_back(resolve_axis(r, "axis2"));
      if (config.axes.size() == 2 && config.axes[0].var == config.axes[1].var)
        r.fail("axis2.var", "sweep axes must be distinct");
      const bool t_axis = std::any_of(config.axes.begin(), config.axes.end(),
                                      [](const SweepAxis& a) { return a.var == SweepVar::T; });
      if (!t_axis && !config.T) r.fail("T", "missing required field 'T' (or sweep over T)");
      if (config.T && *config.T <= 0.0) r.fail(t_key, "'T' must be > 0");
      if (auto cols = r.text("output.columns")) {
        config.columns = split_columns(*cols);
        const auto known = sweep_columns();
        for (const auto& c : config.columns)
          if (std::find(known.begin(), known.end(), c) == known.end())
            r.fail("output.columns", "unknown output column '" + c + "'");
        if (config.columns.empty()) r.fail("output.columns", "'output.columns' is empty");
      }
      break;
    }
    default:
      break;
  }
  return config;
}

std::string serialize(const RunConfig& c) {
  std::ostringstream os;
  os << "command = " << to_string(c.command) << '\n';
  if (c.T) os << "T = " << format_real(*c.T) << '\n';
  if (c.workers) os << "workers = " << c.workers << '\n';

  if (c.command != Command::Verify) {
    const ModelSpec& m = c.model;
    os << "\n[model]\nmodel = " << spinthermal::to_string(m.kind) << '\n';
    if (m.kind == ModelKind::GeneralXYZ) {
      for (int i = 0; i < 3; ++i) os << 'J' << i + 1 << " = " << format_real(m.couplings[i]) << '\n';
      for (int i = 0; i < 3; ++i) os << 'B' << i + 1 << " = " << format_real(m.fields[i]) << '\n';
    } else {
      os << "J = " << format_real(m.J) << '\n';
      if (m.kind != ModelKind::XX) os << "delta = " << format_real(m.delta) << '\n';
      if (m.kind == ModelKind::XXZField) os << "B = " << format_real(m.B) << '\n';
    }
  }

  for (std::size_t i = 0; i < c.axes.size(); ++i) {
    const SweepAxis& a = c.axes[i];
    os << "\n[axis" << i + 1 << "]\nvar = " << spinthermal::to_string(a.var) << "\nmin = " << format_real(a.min)
       << "\nmax = " << format_real(a.max) << "\nsteps = " << a.steps << '\n';
  }

  os << "\n[output]\nformat = " << to_string(c.format) << '\n';
  if (!c.out_path.empty()) os << "path = " << c.out_path << '\n';
  if (!c.columns.empty()) {
    os << "columns = ";
    for (std::size_t i = 0; i < c.columns.size(); ++i) os << (i ? "," : "") << c.columns[i];
    os << '\n';
  }
  return os.str();
}

}  // namespace spinthermal::cli
