#pragma once

// Entanglement-region witnesses, critical points and zero-temperature limits.
//
// Witnesses are the sign-carrying parts of the closed-form concurrences:
//   XX:        -f(z) = 1 - 4z^3 - 3z^2            (z = exp(J/T))
//   XXZ:       f(delta, z) = |y| - v
//   XXZ + B:   y^2 - uv = h cosh(2B/T) - g
// A state is entangled exactly when its witness is positive.

#include <cmath>
#include <optional>

#include "spinthermal/errors.hpp"

namespace spinthermal {

struct RegionVerdict {
  bool entangled = false;
  double witness = 0.0;
};

/// Critical point of a ferromagnetic ring: entangled for z < z_c.
/// tc_per_J is T_c / |J| = 1 / |x_c|.
struct CriticalPoint {
  double z_c = 0.0;
  double x_c = 0.0;
  double tc_per_J = 0.0;

  double critical_temperature(double J) const { return std::abs(J) * tc_per_J; }
};

/// z_0 = 4^(-1/3): the df/d(delta) = 0 point.
inline const double kZ0 = std::cbrt(0.25);

/// Anisotropy at or beyond which evaluations are treated as the delta -> -inf asymptote.
inline constexpr double kAsymptoticDelta = -50.0;

/// 4z^3 + 3z^2 - 1
double xx_polynomial(double z);
RegionVerdict xx_region(double z);
/// Unique positive root of 4z^3 + 3z^2 - 1, by bisection on [0.1, 1].
CriticalPoint xx_critical();

/// f(delta, z) = z^{2 delta}|z^-2 - z| - 3/2 - z^{2 delta + 1} - z^{2 delta - 2}/2
double xxz_witness(double delta, double z);
/// Analytic derivative of xxz_witness with respect to delta.
double xxz_witness_ddelta(double delta, double z);
RegionVerdict xxz_region(double delta, double z);

/// Root of f(delta, z) in (1e-9, z_0). Returns nullopt for delta >= 1, where
/// no entanglement exists; throws NoRoot when f has no sign change in range.
std::optional<CriticalPoint> xxz_critical(double delta);

/// delta_z = ln(3 / (z^-2 - 4z)) / (2 ln z), the zero of f(., z).
/// Throws OutOfDomain unless 0 < z < z_0.
double delta_boundary(double z);
/// Same with z = exp(J/T).
double delta_boundary(double J, double T);

double field_g(double delta, double z);
double field_h(double delta, double z);
/// Witness h(delta, z) cosh(2 beta B) - g(delta, z).
RegionVerdict field_region(double delta, double z, double beta_B);

/// Positive root of z^6 - 8z^3 - 2, i.e. (4 + 3 sqrt 2)^(1/3).
double xxx_field_threshold();

enum class FieldCase {
  NeverEntangled,           // h <= 0
  EntangledForStrongField,  // h > 0, h - g <= 0
  EntangledForAnyField,     // h - g > 0
};

/// g, h and h - g at delta = -1/2 as functions of p = z^-3.
struct FieldCurves {
  double p = 0.0;
  double g = 0.0;
  double h = 0.0;
  double hmg = 0.0;
  FieldCase field_case = FieldCase::NeverEntangled;
};

inline const double kHalfFieldP1 = 2.5 + 1.5 * std::sqrt(5.0);
inline constexpr double kHalfFieldP2 = 7.0;

FieldCurves field_curves_half(double p);

/// T -> 0 limit of the concurrence of the antiferromagnetic XXZ ring in a
/// uniform field: 1/3 above the level crossing delta = |B|/J - 1/2, 2/9 on
/// it (within 1e-9) and 0 below. At B == 0 the ground level is the fourfold
/// (or larger) block psi_1,2,4,5 and the limit is 0. Throws OutOfDomain for J <= 0.
double zero_temperature_concurrence(double delta, double B, double J = 1.0);

/// Bisection on a bracketing interval [lo, hi] to absolute width tol.
/// Throws NoRoot if f(lo) and f(hi) have the same sign.
template <class F>
double bisect(F&& f, double lo, double hi, double tol = 1e-12, int max_iter = 200) {
  double f_lo = f(lo);
  const double f_hi = f(hi);
  if (f_lo == 0.0) return lo;
  if (f_hi == 0.0) return hi;
  if ((f_lo > 0.0) == (f_hi > 0.0)) throw NoRoot("bisect: no sign change on the bracket");
  for (int i = 0; i < max_iter && hi - lo > tol; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double f_mid = f(mid);
    if (f_mid == 0.0) return mid;
    if ((f_mid > 0.0) == (f_lo > 0.0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace spinthermal
