#include <gtest/gtest.h>

#include <cmath>

#include "spinthermal/analysis.hpp"
#include "spinthermal/errors.hpp"
#include "spinthermal/sweep.hpp"

using namespace spinthermal;

namespace {

SweepConfig config_for(ModelSpec model, std::vector<SweepAxis> axes, double T = 1.0) {
  SweepConfig c;
  c.model = model;
  c.axes = std::move(axes);
  c.T = T;
  c.workers = 1;
  return c;
}

}  // namespace

TEST(SweepAxis, InclusiveLinearGrid) {
  const SweepAxis a{SweepVar::T, 0.1, 0.7, 7};
  EXPECT_DOUBLE_EQ(a.value(0), 0.1);
  EXPECT_DOUBLE_EQ(a.value(3), 0.4);
  EXPECT_EQ(a.value(6), 0.7);
}

TEST(SweepVarNames, ParseAndPrint) {
  EXPECT_EQ(parse_sweep_var("delta"), SweepVar::Delta);
  EXPECT_EQ(parse_sweep_var("Δ"), SweepVar::Delta);
  EXPECT_EQ(parse_sweep_var("B"), SweepVar::B);
  EXPECT_EQ(to_string(SweepVar::Delta), "delta");
  EXPECT_THROW(parse_sweep_var("x"), std::invalid_argument);
}

TEST(SweepValidate, RejectsBadGrids) {
  const ModelSpec field = ModelSpec::xxz_field(1.0, 1.0, 1.0);
  EXPECT_THROW(sweep(config_for(field, {})), InvalidGrid);
  EXPECT_THROW(sweep(config_for(field, {{SweepVar::T, 2.0, 1.0, 5}})), InvalidGrid);
  EXPECT_THROW(sweep(config_for(field, {{SweepVar::T, 1.0, 1.0, 5}})), InvalidGrid);
  EXPECT_THROW(sweep(config_for(field, {{SweepVar::T, 0.5, 1.0, 1}})), InvalidGrid);
  EXPECT_THROW(sweep(config_for(field, {{SweepVar::T, 0.0, 1.0, 5}})), InvalidGrid);
  EXPECT_THROW(sweep(config_for(field, {{SweepVar::B, 0.0, 1.0, 5}, {SweepVar::B, 0.0, 1.0, 5}})), InvalidGrid);
  EXPECT_THROW(sweep(config_for(field, {{SweepVar::B, 0, 1, 2}, {SweepVar::J, 0, 1, 2}, {SweepVar::T, 1, 2, 2}})),
               InvalidGrid);
  EXPECT_THROW(sweep(config_for(field, {{SweepVar::B, 0.0, 1.0, 5}}, 0.0)), InvalidGrid);
  EXPECT_THROW(sweep(config_for(ModelSpec::xx(1.0), {{SweepVar::Delta, 0.0, 1.0, 5}})), InvalidGrid);
  EXPECT_THROW(sweep(config_for(ModelSpec::xxz(1.0, 0.0), {{SweepVar::B, 0.0, 1.0, 5}})), InvalidGrid);
  EXPECT_THROW(sweep(config_for(ModelSpec::xyz({1, 1, 1}, {}), {{SweepVar::J, 0.0, 1.0, 5}})), InvalidGrid);
  EXPECT_NO_THROW(sweep(config_for(ModelSpec::xyz({1, 1, 1}, {}), {{SweepVar::T, 0.5, 1.0, 3}})));
}

TEST(Sweep, FirstAxisOutermost) {
  const auto rows = sweep(config_for(ModelSpec::xxz_field(1.0, 0.5, 0.0),
                                     {{SweepVar::B, -1.0, 1.0, 3}, {SweepVar::J, 0.5, 1.5, 2}}, 0.7));
  ASSERT_EQ(rows.size(), 6u);
  const double expect_b[] = {-1, -1, 0, 0, 1, 1};
  const double expect_j[] = {0.5, 1.5, 0.5, 1.5, 0.5, 1.5};
  for (std::size_t i = 0; i < 6; ++i) {
    EXPECT_DOUBLE_EQ(rows[i].B, expect_b[i]);
    EXPECT_DOUBLE_EQ(rows[i].J, expect_j[i]);
    EXPECT_DOUBLE_EQ(rows[i].T, 0.7);
    EXPECT_DOUBLE_EQ(rows[i].delta, 0.5);
  }
}

TEST(Sweep, SameResultForAnyWorkerCount) {
  SweepConfig c = config_for(ModelSpec::xxz_field(1.0, 1.0, 0.0), {{SweepVar::B, -2.0, 2.0, 9}, {SweepVar::T, 0.1, 2.0, 7}});
  const auto serial = sweep(c);
  for (unsigned w : {2u, 3u, 8u, 0u}) {
    c.workers = w;
    const auto parallel = sweep(c);
    ASSERT_EQ(parallel.size(), serial.size());
    for (std::size_t i = 0; i < serial.size(); ++i)
      for (auto col : sweep_columns()) {
        const double a = serial[i].get(col), b = parallel[i].get(col);
        EXPECT_TRUE(a == b || (std::isnan(a) && std::isnan(b))) << col << " at " << i;
      }
  }
}

TEST(Sweep, RecordColumns) {
  const SweepRecord r = evaluate_point(ModelSpec::xx(-1.0), 0.5);
  EXPECT_NEAR(r.C, r.C_closed, 1e-10);
  EXPECT_GT(r.witness, 0.0);
  EXPECT_NEAR(r.Tc, xx_critical().tc_per_J, 1e-15);
  EXPECT_EQ(evaluate_point(ModelSpec::xx(1.0), 0.5).Tc, 0.0);
  EXPECT_TRUE(std::isnan(evaluate_point(ModelSpec::xxz_field(1.0, 1.0, 1.0), 0.5).Tc));
  const SweepRecord g = evaluate_point(ModelSpec::xyz({1.0, 0.5, 0.2}, {}), 0.5);
  EXPECT_TRUE(std::isnan(g.C_closed));
  EXPECT_TRUE(std::isnan(g.witness));
  EXPECT_THROW(r.get("lambda"), std::invalid_argument);
}

TEST(Sweep, CriticalTemperatureFallsWithAnisotropy) {
  const auto rows = sweep(config_for(ModelSpec::xxz(-1.0, 0.0), {{SweepVar::Delta, -10.0, 1.0, 111}}));
  for (std::size_t i = 1; i < rows.size(); ++i) EXPECT_LE(rows[i].Tc, rows[i - 1].Tc) << rows[i].delta;
  EXPECT_NEAR(rows.front().Tc, 2.164, 1e-2);
  EXPECT_EQ(rows.back().Tc, 0.0);
}

TEST(Sweep, FieldInducedMaximum) {
  const auto rows = sweep(config_for(ModelSpec::xxz_field(1.0, 1.0, 2.0), {{SweepVar::T, 0.02, 4.0, 200}}));
  EXPECT_LT(rows.front().C, 1e-3);
  std::size_t peak = 0;
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (rows[i].C > rows[peak].C) peak = i;
  EXPECT_GT(peak, 0u);
  EXPECT_LT(peak, rows.size() - 1);
  EXPECT_GT(rows[peak].C, rows.front().C + 1e-3);
}

TEST(Sweep, FerromagneticHalfPlaneUnentangledAndEvenInField) {
  const auto rows = sweep(config_for(ModelSpec::xxz_field(0.0, 1.0, 0.0),
                                     {{SweepVar::B, -3.0, 3.0, 31}, {SweepVar::J, -3.0, 3.0, 31}}, 1.0));
  for (const auto& r : rows) {
    if (r.J < 0.0) {
      EXPECT_EQ(r.C, 0.0) << "B=" << r.B << " J=" << r.J;
      EXPECT_EQ(r.C_closed, 0.0);
    }
  }
  // Row index b*31 + j; B -> -B maps b -> 30 - b.
  for (std::size_t b = 0; b < 31; ++b)
    for (std::size_t j = 0; j < 31; ++j)
      EXPECT_NEAR(rows[b * 31 + j].C, rows[(30 - b) * 31 + j].C, 1e-10);
}
