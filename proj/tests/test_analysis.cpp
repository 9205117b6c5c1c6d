#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "spinthermal/analysis.hpp"
#include "spinthermal/concurrence.hpp"

using namespace spinthermal;

namespace {

const double kLn7 = std::log(7.0);
const double kLn4 = std::log(4.0);

// Sum of absolute terms of f(delta, z); sets the scale of its rounding error.
double xxz_witness_scale(double d, double z) {
  return std::pow(z, 2.0 * d) * (std::abs(1.0 / (z * z) - z) + z + 0.5 / (z * z)) + 1.5;
}

}  // namespace

TEST(XXRegion, Examples) {
  EXPECT_TRUE(xx_region(0.2).entangled);
  EXPECT_LE(std::abs(xx_polynomial(0.4554)), 1e-3);
  EXPECT_FALSE(xx_region(1.5).entangled);
  EXPECT_FALSE(xx_region(1.0).entangled);
  for (double z : {0.05, 0.3, 0.6, 0.9}) EXPECT_EQ(xx_region(z).entangled, xx_region(z).witness > 0.0);
}

TEST(XXCritical, Constants) {
  const CriticalPoint cp = xx_critical();
  EXPECT_NEAR(cp.z_c, 0.45542, 1e-4);
  EXPECT_NEAR(cp.x_c, -0.7866, 1e-3);
  EXPECT_NEAR(cp.tc_per_J, 1.27128, 1e-4);
  EXPECT_NEAR(cp.z_c, std::exp(cp.x_c), 1e-15);
  EXPECT_NEAR(cp.tc_per_J * std::abs(cp.x_c), 1.0, 1e-15);
  EXPECT_LE(std::abs(xx_polynomial(cp.z_c)), 1e-11);
  EXPECT_DOUBLE_EQ(cp.critical_temperature(-2.0), 2.0 * cp.tc_per_J);
}

TEST(XXZRegion, Examples) {
  EXPECT_LE(std::abs(xxz_region(-0.5, std::pow(7.0, -1.0 / 3.0)).witness), 1e-10);
  for (double d : {1.0, 1.5, 4.0})
    for (double z : {0.01, 0.3, 0.7, 0.99}) EXPECT_FALSE(xxz_region(d, z).entangled) << d << " " << z;
  for (double z = 0.02; z < 3.0; z += 0.01) EXPECT_EQ(xxz_region(0.0, z).entangled, xx_region(z).entangled) << z;
}

TEST(XXZRegion, AntiferromagneticNeverEntangled) {
  for (double d : {-3.0, -1.0, 0.0, 0.5, 2.0})
    for (double z : {1.01, 1.5, 4.0, 50.0}) EXPECT_FALSE(xxz_region(d, z).entangled);
}

TEST(XXZWitness, ValueAtStationaryPoint) {
  // z0^-2 = 4 z0 cancels the Delta dependence. The doubled form z^(2d-2) - 4 z^(2d+1) - 3 sits at -3.
  for (double d : {-5.0, -1.0, 0.0, 0.7, 3.0}) {
    EXPECT_NEAR(xxz_witness(d, kZ0), -1.5, 1e-10) << d;
    EXPECT_NEAR(std::pow(kZ0, 2 * d - 2) - 4 * std::pow(kZ0, 2 * d + 1) - 3.0, -3.0, 1e-10) << d;
  }
  EXPECT_NEAR(kZ0, 0.62996, 1e-5);
}

TEST(XXZWitness, DerivativeMatchesFiniteDifference) {
  const double h = 1e-6;
  for (double d : {-2.0, -0.5, 0.5})
    for (double z : {0.2, kZ0, 0.9}) {
      const double fd = (xxz_witness(d + h, z) - xxz_witness(d - h, z)) / (2.0 * h);
      EXPECT_NEAR(xxz_witness_ddelta(d, z), fd, 1e-6 * std::max(1.0, std::abs(fd)));
    }
  EXPECT_NEAR(xxz_witness_ddelta(0.3, kZ0), 0.0, 1e-12);
  EXPECT_NEAR((xxz_witness(0.3 + h, kZ0) - xxz_witness(0.3 - h, kZ0)) / (2.0 * h), 0.0, 1e-6);
}

TEST(XXZWitness, MonotoneInAnisotropy) {
  for (double z : {0.1, 0.4, 0.6}) {  // below z0: decreasing
    double prev = xxz_witness(-3.0, z);
    for (double d = -2.9; d <= 2.0; d += 0.1) {
      const double f = xxz_witness(d, z);
      EXPECT_LT(f, prev) << z << " " << d;
      prev = f;
    }
  }
  for (double z : {0.66, 0.8, 0.95}) {  // above z0: increasing
    double prev = xxz_witness(-3.0, z);
    for (double d = -2.9; d <= 2.0; d += 0.1) {
      const double f = xxz_witness(d, z);
      EXPECT_GT(f, prev) << z << " " << d;
      prev = f;
    }
  }
}

TEST(XXZCritical, SpecialAnisotropies) {
  const auto half_neg = xxz_critical(-0.5);
  ASSERT_TRUE(half_neg.has_value());
  EXPECT_NEAR(half_neg->tc_per_J, 3.0 / kLn7, 1e-6);
  EXPECT_NEAR(half_neg->tc_per_J, 1.5417, 1e-3);

  const auto half_pos = xxz_critical(0.5);
  ASSERT_TRUE(half_pos.has_value());
  EXPECT_NEAR(half_pos->z_c, 0.298, 1e-3);
  const double zc = half_pos->z_c;
  EXPECT_NEAR(4.0 * zc * zc * zc + 3.0 * zc - 1.0, 0.0, 1e-10);

  const auto asymptotic = xxz_critical(kAsymptoticDelta);
  ASSERT_TRUE(asymptotic.has_value());
  EXPECT_NEAR(asymptotic->tc_per_J, 3.0 / kLn4, 1e-2);
  EXPECT_NEAR(asymptotic->tc_per_J, 2.164, 1e-2);

  EXPECT_NEAR(xxz_critical(0.0)->z_c, xx_critical().z_c, 1e-10);
  EXPECT_FALSE(xxz_critical(1.0).has_value());
  EXPECT_FALSE(xxz_critical(2.5).has_value());
}

TEST(XXZCritical, DecreasesWithAnisotropy) {
  double prev = xxz_critical(-10.0)->tc_per_J;
  for (double d = -9.5; d < 0.95; d += 0.5) {
    const double tc = xxz_critical(d)->tc_per_J;
    EXPECT_LT(tc, prev) << d;
    prev = tc;
  }
}

TEST(DeltaBoundary, Limits) {
  EXPECT_NEAR(delta_boundary(1e-100), 1.0, 1e-2);
  EXPECT_LT(delta_boundary(1e-100), 1.0);
  // Divergence at z0 is logarithmic.
  double prev = delta_boundary(kZ0 - 1e-6);
  for (double eps : {1e-9, 1e-12}) {
    const double d = delta_boundary(kZ0 - eps);
    EXPECT_LT(d, prev);
    prev = d;
  }
  EXPECT_LT(delta_boundary(kZ0 - 1e-9), -20.0);
  EXPECT_THROW(delta_boundary(kZ0), OutOfDomain);
  EXPECT_THROW(delta_boundary(0.0), OutOfDomain);
  EXPECT_THROW(delta_boundary(0.9), OutOfDomain);
}

TEST(DeltaBoundary, ZeroOfWitness) {
  for (double z : {0.05, 0.2, 0.4, 0.6}) EXPECT_NEAR(xxz_witness(delta_boundary(z), z), 0.0, 1e-9) << z;
  EXPECT_DOUBLE_EQ(delta_boundary(-1.0, 2.0), delta_boundary(std::exp(-0.5)));
}

TEST(DeltaBoundary, ZeroAnisotropyMeetsXXBoundary) {
  const double z = bisect([](double t) { return delta_boundary(t); }, 0.1, kZ0 - 1e-6);
  EXPECT_NEAR(std::log(z), xx_critical().x_c, 1e-3);
  EXPECT_NEAR(std::log(z), -0.7866, 1e-3);
}

TEST(FieldRegion, Examples) {
  for (double bb : {0.0, 1.0, 5.0, 30.0}) EXPECT_FALSE(field_region(1.0, 1.5, bb).entangled) << bb;
  const double z = 2.5, z3 = z * z * z;
  EXPECT_GT(std::cosh(6.0), (z3 + 2.0) * (z3 + 2.0) / (z3 * z3 - 8.0 * z3 - 2.0));
  EXPECT_TRUE(field_region(1.0, z, 3.0).entangled);
  for (double d : {-2.0, -0.5, 0.0, 0.5})
    for (double zz = 0.05; zz < 3.0; zz += 0.05)
      EXPECT_EQ(field_region(d, zz, 0.0).entangled, xxz_region(d, zz).entangled) << d << " " << zz;
}

TEST(FieldRegion, EvenInField) {
  for (double bb : {0.2, 1.0, 4.0}) EXPECT_EQ(field_region(0.3, 0.5, bb).witness, field_region(0.3, 0.5, -bb).witness);
}

TEST(XXXFieldThreshold, Root) {
  const double r = xxx_field_threshold();
  EXPECT_NEAR(r, 2.02, 1e-2);
  EXPECT_NEAR(std::pow(r, 6) - 8.0 * std::pow(r, 3) - 2.0, 0.0, 1e-9);
  EXPECT_NEAR(r * r * r, 4.0 + 3.0 * std::sqrt(2.0), 1e-9);
  // Below the threshold no field helps; above it a strong field does.
  EXPECT_LE(field_h(1.0, r - 1e-3), 0.0);
  EXPECT_GT(field_h(1.0, r + 1e-3), 0.0);
}

TEST(FieldCurves, ParabolaClosedForms) {
  for (double p : {0.5, 2.0, 6.0, 7.0, 12.0}) {
    const FieldCurves c = field_curves_half(p);
    EXPECT_NEAR(c.h, 0.5 * (p * p - 5.0 * p - 5.0), 1e-10 * p * p);
    EXPECT_NEAR(c.g, 0.25 * (11.0 + 8.0 * p - p * p), 1e-10 * p * p);
    EXPECT_NEAR(c.hmg, 0.25 * (3.0 * p * p - 18.0 * p - 21.0), 1e-10 * p * p);
  }
}

TEST(FieldCurves, Cases) {
  EXPECT_EQ(field_curves_half(2.0).field_case, FieldCase::NeverEntangled);
  EXPECT_EQ(field_curves_half(6.0).field_case, FieldCase::EntangledForStrongField);
  EXPECT_EQ(field_curves_half(8.0).field_case, FieldCase::EntangledForAnyField);
  EXPECT_NEAR(kHalfFieldP1, 2.5 + 1.5 * std::sqrt(5.0), 0.0);
  EXPECT_NEAR(field_curves_half(kHalfFieldP1).h, 0.0, 1e-9);
  EXPECT_EQ(field_curves_half(kHalfFieldP2).hmg, 0.0);
  const double zc = xxz_critical(-0.5)->z_c;
  EXPECT_NEAR(1.0 / (zc * zc * zc), kHalfFieldP2, 1e-9);
}

TEST(ZeroTemperature, PiecewiseLimits) {
  EXPECT_EQ(zero_temperature_concurrence(1.0, 1.0), 1.0 / 3.0);
  EXPECT_EQ(zero_temperature_concurrence(0.5, 1.0), 2.0 / 9.0);
  EXPECT_EQ(zero_temperature_concurrence(0.0, 1.0), 0.0);
  EXPECT_EQ(zero_temperature_concurrence(1.0, -1.0), 1.0 / 3.0);
  EXPECT_EQ(zero_temperature_concurrence(1.5, 2.0, 1.0), 2.0 / 9.0);
  // With the field in units of J.
  EXPECT_EQ(zero_temperature_concurrence(0.5, 2.0, 2.0), 2.0 / 9.0);
  EXPECT_EQ(zero_temperature_concurrence(1.0, 0.0), 0.0);
  EXPECT_THROW(zero_temperature_concurrence(1.0, 1.0, -1.0), OutOfDomain);
}

TEST(ZeroTemperature, MatchesGroundLevelConcurrence) {
  for (double d : {-1.0, 0.0, 0.5, 1.0, 2.0})
    for (double B : {0.5, 1.0, 2.0}) {
      const ModelSpec s = ModelSpec::xxz_field(1.0, d, B);
      EXPECT_NEAR(concurrence_numeric(s, 0.0).C, zero_temperature_concurrence(d, B), 1e-9) << d << " " << B;
    }
}

TEST(RegionPredicates, AgreeWithClosedForms) {
  std::mt19937_64 rng(31337);
  std::uniform_real_distribution<double> uJ(-2.0, 2.0), uD(-3.0, 2.0), uB(-3.0, 3.0), uT(0.05, 5.0);
  int compared = 0;
  for (int i = 0; i < 10000; ++i) {
    const double J = uJ(rng), d = uD(rng), B = uB(rng), T = uT(rng);
    const double z = std::exp(J / T);
    if (i % 2 == 0) {
      const RegionVerdict v = xxz_region(d, z);
      if (std::abs(v.witness) <= 1e-10 * xxz_witness_scale(d, z)) continue;
      EXPECT_EQ(v.entangled, concurrence_closed_form(ModelSpec::xxz(J, d), T) > 0.0)
          << "J=" << J << " delta=" << d << " T=" << T;
    } else {
      const RegionVerdict v = field_region(d, z, B / T);
      const double scale = std::abs(field_h(d, z)) * std::cosh(2.0 * B / T) + std::abs(field_g(d, z));
      if (std::abs(v.witness) <= 1e-10 * scale) continue;
      EXPECT_EQ(v.entangled, concurrence_closed_form(ModelSpec::xxz_field(J, d, B), T) > 0.0)
          << "J=" << J << " delta=" << d << " B=" << B << " T=" << T;
    }
    ++compared;
  }
  EXPECT_GT(compared, 9900);
}

TEST(Bisect, FindsRootAndRejectsMissingBracket) {
  EXPECT_NEAR(bisect([](double x) { return x * x - 2.0; }, 0.0, 2.0), std::sqrt(2.0), 1e-12);
  EXPECT_THROW(bisect([](double x) { return x * x + 1.0; }, -1.0, 1.0), NoRoot);
}
