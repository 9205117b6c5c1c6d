// spinthermal: thermal pairwise entanglement of three-qubit Heisenberg rings.
//
//   spinthermal <command> [--config PATH] [--model xx|xxz|xxzfield|xyz]
//               [--J v] [--delta v] [--B v] [--T v] [--out PATH] [--format csv|json]
//
// Flags override values from the config file.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "spinthermal/cli/config.hpp"
#include "spinthermal/cli/run.hpp"

namespace cli = spinthermal::cli;

int main(int argc, char** argv) {
  CLI::App app{"Thermal pairwise entanglement in three-qubit Heisenberg rings"};
  app.set_version_flag("--version", "spinthermal 0.1.0");

  std::string command;
  std::string config_path;
  app.add_option("command", command, "eig | thermal | concurrence | critical | sweep | verify")->required();
  app.add_option("--config", config_path, "INI-style run configuration")->check(CLI::ExistingFile);

  // Flag name -> config key.
  const std::vector<std::pair<std::string, std::string>> overrides = {
      {"model", "model.model"}, {"J", "model.J"},   {"delta", "model.delta"}, {"B", "model.B"},
      {"J1", "model.J1"},       {"J2", "model.J2"}, {"J3", "model.J3"},       {"B1", "model.B1"},
      {"B2", "model.B2"},       {"B3", "model.B3"}, {"T", "T"},               {"out", "output.path"},
      {"format", "output.format"}, {"columns", "output.columns"}, {"workers", "workers"},
  };
  std::vector<std::string> values(overrides.size());
  for (std::size_t i = 0; i < overrides.size(); ++i)
    app.add_option("--" + overrides[i].first, values[i]);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::kExitConfigError;
  }

  try {
    cli::RawConfig raw;
    if (!config_path.empty()) {
      std::ifstream in(config_path, std::ios::binary);
      std::ostringstream text;
      text << in.rdbuf();
      raw = cli::read_raw(text.str());
    }
    raw.set("command", command);
    for (std::size_t i = 0; i < overrides.size(); ++i)
      if (app.count("--" + overrides[i].first)) raw.set(overrides[i].second, values[i]);
    const cli::RunConfig config = cli::resolve(raw);
    return cli::run(config, std::cout, std::cerr);
  } catch (const cli::ConfigError& e) {
    std::cerr << "spinthermal: " << (config_path.empty() ? "" : config_path + ": ") << e.what() << '\n';
    return cli::kExitConfigError;
  }
}
