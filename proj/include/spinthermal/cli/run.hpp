#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "spinthermal/cli/config.hpp"
#include "spinthermal/cli/output.hpp"

namespace spinthermal::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitVerifyFailed = 1,
  kExitConfigError = 2,
  kExitNumericError = 3,
};

/// Result table for every command except verify.
Table compute_table(const RunConfig& config);

/// One golden-value comparison performed by `verify`.
struct Check {
  std::string name;
  std::string origin;  // where the expected value comes from
  double observed = 0.0;
  double expected = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

std::vector<Check> run_verification();
std::string format_report(const std::vector<Check>& checks);

/// Executes a resolved configuration. Results go to config.out_path, or to
/// `out` when no path is set; diagnostics go to `err`. Returns an ExitCode.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace spinthermal::cli
