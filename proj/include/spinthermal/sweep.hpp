#pragma once

// Parameter sweeps over T, J, delta and B, producing one record per grid
// point in grid order (first axis outermost).

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "spinthermal/spin_model.hpp"

namespace spinthermal {

enum class SweepVar { T, J, Delta, B };

std::string_view to_string(SweepVar var);
/// Accepts T, J, delta (or Δ), B. Throws std::invalid_argument.
SweepVar parse_sweep_var(std::string_view name);

/// Inclusive linear grid min .. max with `steps` points.
struct SweepAxis {
  SweepVar var = SweepVar::T;
  double min = 0.0;
  double max = 1.0;
  int steps = 2;

  double value(int i) const;
  bool operator==(const SweepAxis&) const = default;
};

struct SweepConfig {
  ModelSpec model;
  double T = 1.0;  // used unless T is an axis
  std::vector<SweepAxis> axes;
  unsigned workers = 0;  // 0: hardware concurrency
};

/// Outputs at one grid point. C is the exact-diagonalization concurrence,
/// C_closed the closed form (NaN for the general XYZ ring). Tc is the
/// critical temperature of the field-free ferromagnetic ring (0 when the
/// ring is never thermally entangled, NaN where no closed form exists).
struct SweepRecord {
  double T = 0.0;
  double J = 0.0;
  double delta = 0.0;
  double B = 0.0;
  double C = 0.0;
  double C_closed = 0.0;
  double witness = 0.0;
  double Z = 0.0;
  double Tc = 0.0;

  /// Column by name; throws std::invalid_argument for unknown names.
  double get(std::string_view column) const;
};

/// All names accepted by SweepRecord::get, in canonical order.
std::span<const std::string_view> sweep_columns();

/// Throws InvalidGrid for empty, reversed or duplicate axes, more than two
/// axes, T <= 0 anywhere on the grid, or non-T axes on the general XYZ ring.
void validate(const SweepConfig& config);

SweepRecord evaluate_point(const ModelSpec& spec, double T);

std::vector<SweepRecord> sweep(const SweepConfig& config);

}  // namespace spinthermal
