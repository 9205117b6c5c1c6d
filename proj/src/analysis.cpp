#include "spinthermal/analysis.hpp"

#include <string>

namespace spinthermal {

double xx_polynomial(double z) { return 4.0 * z * z * z + 3.0 * z * z - 1.0; }

RegionVerdict xx_region(double z) {
  if (!(z > 0.0)) throw OutOfDomain("xx_region: z must be > 0");
  const double witness = -xx_polynomial(z);
  // For z >= 1 (J >= 0) the witness is negative, so no separate branch is needed.
  return {witness > 0.0, witness};
}

namespace {

CriticalPoint from_root(double z_c) {
  const double x_c = std::log(z_c);
  return {z_c, x_c, 1.0 / std::abs(x_c)};
}

}  // namespace

CriticalPoint xx_critical() { return from_root(bisect(xx_polynomial, 0.1, 1.0)); }

double xxz_witness(double delta, double z) {
  if (!(z > 0.0)) throw OutOfDomain("xxz_witness: z must be > 0");
  const double inv2 = 1.0 / (z * z);
  // Factor z^{2 delta} out so that huge powers meet a single finite bracket.
  const double bracket = std::abs(inv2 - z) - z - 0.5 * inv2;
  return std::pow(z, 2.0 * delta) * bracket - 1.5;
}

double xxz_witness_ddelta(double delta, double z) {
  const double inv2 = 1.0 / (z * z);
  const double bracket = std::abs(inv2 - z) - z - 0.5 * inv2;
  return 2.0 * std::log(z) * std::pow(z, 2.0 * delta) * bracket;
}

RegionVerdict xxz_region(double delta, double z) {
  const double witness = xxz_witness(delta, z);
  return {witness > 0.0, witness};
}

std::optional<CriticalPoint> xxz_critical(double delta) {
  if (delta >= 1.0) return std::nullopt;
  constexpr double lo = 1e-9;
  if (!(xxz_witness(delta, lo) > 0.0))
    throw NoRoot("xxz_critical: f(delta, z) has no sign change in (1e-9, z0) for delta = " +
                 std::to_string(delta));
  return from_root(bisect([delta](double z) { return xxz_witness(delta, z); }, lo, kZ0));
}

double delta_boundary(double z) {
  if (!(z > 0.0) || z >= kZ0)
    throw OutOfDomain("delta_boundary: requires 0 < z < 4^(-1/3), got z = " + std::to_string(z));
  const double beta_J = std::log(z);
  return std::log(3.0 / (1.0 / (z * z) - 4.0 * z)) / (2.0 * beta_J);
}

double delta_boundary(double J, double T) {
  if (!(T > 0.0)) throw OutOfDomain("delta_boundary: T must be > 0");
  return delta_boundary(std::exp(J / T));
}

double field_g(double delta, double z) {
  const double z3 = z * z * z;
  return 0.25 * (9.0 + std::pow(z, 4.0 * (delta - 1.0)) * (2.0 * z3 * z3 + 8.0 * z3 - 1.0));
}

double field_h(double delta, double z) {
  const double inv2 = 1.0 / (z * z);
  const double z2d = std::pow(z, 2.0 * delta);
  return 0.5 * z2d * (z2d * (inv2 - z) * (inv2 - z) - (6.0 * z + 3.0 * inv2));
}

RegionVerdict field_region(double delta, double z, double beta_B) {
  if (!(z > 0.0)) throw OutOfDomain("field_region: z must be > 0");
  const double witness = field_h(delta, z) * std::cosh(2.0 * beta_B) - field_g(delta, z);
  return {witness > 0.0, witness};
}

double xxx_field_threshold() { return std::cbrt(4.0 + 3.0 * std::sqrt(2.0)); }

FieldCurves field_curves_half(double p) {
  if (!(p > 0.0)) throw OutOfDomain("field_curves_half: p must be > 0");
  FieldCurves c;
  c.p = p;
  c.h = 0.5 * (p * p - 5.0 * p - 5.0);
  c.g = 0.25 * (11.0 + 8.0 * p - p * p);
  c.hmg = 0.25 * (3.0 * p * p - 18.0 * p - 21.0);
  if (c.h <= 0.0)
    c.field_case = FieldCase::NeverEntangled;
  else if (c.hmg <= 0.0)
    c.field_case = FieldCase::EntangledForStrongField;
  else
    c.field_case = FieldCase::EntangledForAnyField;
  return c;
}

double zero_temperature_concurrence(double delta, double B, double J) {
  if (!(J > 0.0)) throw OutOfDomain("zero_temperature_concurrence: requires J > 0");
  constexpr double tol = 1e-9;
  if (std::abs(B) < tol) return 0.0;
  const double s = delta - (std::abs(B) / J - 0.5);
  if (std::abs(s) <= tol) return 2.0 / 9.0;
  return s > 0.0 ? 1.0 / 3.0 : 0.0;
}

}  // namespace spinthermal
