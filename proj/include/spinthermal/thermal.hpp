#pragma once

// Gibbs states of the three-qubit rings and their two-qubit reductions.
// Units: Boltzmann constant k = 1.

#include <limits>

#include "spinthermal/linalg.hpp"
#include "spinthermal/spin_model.hpp"

namespace spinthermal {

/// Temperature with the derived x = J/T and z = exp(x).
struct ThermalPoint {
  double T = 0.0;
  double beta = std::numeric_limits<double>::infinity();
  double x = 0.0;
  double z = 1.0;

  /// Throws InvalidTemperature for T < 0 or non-finite T.
  static ThermalPoint from(double T, double J);
};

/// Reduced-state parameters: rho_12 = 2/(3Z) [[u,0,0,0],[0,w,y,0],[0,y,w,0],[0,0,0,v]].
/// The field-free models have u == v.
struct XStateParams {
  double u = 0.0;
  double v = 0.0;
  double w = 0.0;
  double y = 0.0;
  double Z = 1.0;

  /// 2(u + v + 2w) / (3Z); equals 1 for a valid state.
  double trace() const { return 2.0 * (u + v + 2.0 * w) / (3.0 * Z); }
  ComplexMatrix matrix() const;
};

/// Z = sum_k exp(-E_k / T) from the numeric spectrum. Throws InvalidTemperature for T <= 0.
double partition_function(const ModelSpec& spec, double T);

/// ln Z, finite for any T > 0 (energies are shifted by E_min first).
double log_partition_function(const ModelSpec& spec, double T);

/// exp(-H/T)/Z for T > 0; for T == 0 the equal mixture over the degenerate
/// ground level. Throws InvalidTemperature for T < 0.
ComplexMatrix gibbs_density(const ModelSpec& spec, double T);

/// Traces out one site (1..3) of an 8x8 state. The remaining two qubits keep
/// their relative order, so tracing site 2 yields the (1,3) pair.
ComplexMatrix partial_trace(const ComplexMatrix& rho, int traced_site);

inline ComplexMatrix partial_trace_site3(const ComplexMatrix& rho) { return partial_trace(rho, 3); }

/// Closed-form (u, v, w, y, Z). Throws UnsupportedModel for GeneralXYZ and
/// InvalidTemperature for T <= 0. Values overflow for extreme |J|/T or |B|/T;
/// use scaled_xstate_params there.
XStateParams xstate_params(const ModelSpec& spec, double T);

/// Same quantities all multiplied by exp(-log_scale), so the largest
/// Boltzmann factor is 1. Ratios (and hence the concurrence) are unchanged.
struct ScaledXState {
  XStateParams params;
  double log_scale = 0.0;
};
ScaledXState scaled_xstate_params(const ModelSpec& spec, double T);

}  // namespace spinthermal
