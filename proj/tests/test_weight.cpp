#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "szego_lab/grid.hpp"
#include "szego_lab/weight.hpp"

using namespace szego_lab;

TEST(EvalWeight, Examples) {
  EXPECT_EQ(eval_weight(WeightSpec::constant(1.0), 1.234), 1.0);
  EXPECT_NEAR(eval_weight(WeightSpec::expcos(), 0.0), std::numbers::e, 1e-15);
  EXPECT_NEAR(eval_weight(WeightSpec::szego_a(0.5), std::numbers::pi), 2.25, 1e-15);
}

TEST(EvalWeight, ConstructionGuards) {
  EXPECT_THROW(WeightSpec::constant(0.0), std::invalid_argument);
  EXPECT_THROW(WeightSpec::constant(-1.0), std::invalid_argument);
  EXPECT_THROW(WeightSpec::szego_a(1.0), std::invalid_argument);
}

TEST(NuWeightTest, Examples) {
  EXPECT_EQ(make_nu_weight(WeightSpec::constant(1.0), 2.0)(0.3), 1.0);
  EXPECT_DOUBLE_EQ(make_nu_weight(WeightSpec::constant(4.0), 2.0)(0.3), 0.25);
  EXPECT_NEAR(make_nu_weight(WeightSpec::expcos(), 2.0)(0.0), 0.36787944117144233, 1e-15);
  EXPECT_THROW(make_nu_weight(WeightSpec::expcos(), 1.0), std::invalid_argument);
}

TEST(NuWeightTest, DualityAtQEqualsTwo) {
  for (const auto& w : {WeightSpec::expcos(), WeightSpec::szego_a({0.3, -0.6}), WeightSpec::constant(3.0)}) {
    const NuWeight nu = make_nu_weight(w, 2.0);
    for (int k = 0; k < 64; ++k) {
      const double th = 2 * std::numbers::pi * k / 64;
      EXPECT_NEAR(nu(th) * eval_weight(w, th), 1.0, 1e-14);
    }
  }
}

TEST(WeightProperties, PositiveWithBoundedLog) {
  for (const auto& w : {WeightSpec::expcos(), WeightSpec::szego_a({0.9, 0.0}), WeightSpec::constant(1e-3)}) {
    for (int k = 0; k < 1024; ++k) {
      const double v = eval_weight(w, 2 * std::numbers::pi * k / 1024);
      EXPECT_GT(v, 0.0);
      EXPECT_TRUE(std::isfinite(std::log(v)));
    }
  }
}

TEST(SzegoCondition, Examples) {
  const auto disk = ConformalPair::disk();
  EXPECT_EQ(validate_szego_condition(make_boundary_grid(disk, WeightSpec::constant(1.0), 256)), 0.0);
  EXPECT_NEAR(validate_szego_condition(make_boundary_grid(disk, WeightSpec::expcos(), 256)), 0.0, 1e-13);
  // mean value of log|1 - a e^{it}|^2 vanishes for |a| < 1
  const double ref = oracle::periodic_quad([](double t) { return std::log(std::norm(1.0 - 0.5 * std::polar(1.0, t))); });
  EXPECT_NEAR(ref, 0.0, 1e-13);
  EXPECT_NEAR(validate_szego_condition(make_boundary_grid(disk, WeightSpec::szego_a(0.5), 1024)), ref, 1e-13);
}
