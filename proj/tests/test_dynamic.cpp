//------------------------------------------------------------------------------
//
//   Copyright 2026 The extropy-measures Authors
//
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//
//       http://www.apache.org/licenses/LICENSE-2.0
//
//   Unless required by applicable law or agreed to in writing, software
//   distributed under the License is distributed on an "AS IS" BASIS,
//   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//   See the License for the specific language governing permissions and
//   limitations under the License.
//
//------------------------------------------------------------------------------

#include "extropy/dynamic.hpp"
#include "extropy/families.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

namespace extropy {
namespace {

DistributionModel expo(double r)
{
  return make_model(ExponentialParams{r});
}
DistributionModel weib(double k, double s)
{
  return make_model(WeibullParams{k, s});
}
DistributionModel unif(double lo, double hi)
{
  return make_model(UniformParams{lo, hi});
}

double closed_relative(double l, double m)
{
  return 0.25 * (l + m - 4.0 * l * m / (l + m));
}

TEST(ResidualMeasures, ExponentialIsMemoryless)
{
  for (double t : {0.0, 0.7, 3.0})
  {
    EXPECT_NEAR(residual_extropy(expo(2.0), t).value, -0.5, 1e-10);
    EXPECT_NEAR(residual_inaccuracy(expo(1.0), expo(2.0), t).value, -1.0 / 3.0, 1e-10);
    EXPECT_NEAR(residual_relative(expo(1.0), expo(2.0), t).value, 1.0 / 12.0, 1e-10);
    EXPECT_NEAR(residual_divergence(expo(1.0), expo(2.0), t).value, -1.0 / 12.0, 1e-10);
  }
}

TEST(ResidualMeasures, ZeroTimeIsStatic)
{
  auto const w = weib(1.5, 2.0);
  auto const v = weib(2.0, 3.0);
  EXPECT_NEAR(residual_extropy(w, 0.0).value, extropy(w).value, 1e-12);
  EXPECT_NEAR(residual_relative(w, v, 0.0).value, relative_extropy(w, v).value, 1e-10);
}

TEST(ResidualMeasures, WeibullAgainstOracle)
{
  double const t  = 0.5;
  double const st = oracle::weibull_survival(t, 2.0, 1.0);
  double const ref = -0.5 * oracle::simpson(
                                [&](double x) {
                                  double f = oracle::weibull_pdf(x, 2.0, 1.0) / st;
                                  return f * f;
                                },
                                t, 9.0);
  auto const r = residual_extropy(weib(2.0, 1.0), t);
  EXPECT_NEAR(r.value, ref, 1e-9);
  EXPECT_NEAR(r.value, -0.413919885604700, 1e-9);
}

TEST(ResidualMeasures, RelativeExpWeibullAgainstOracle)
{
  double const t   = 0.3;
  double const sx  = std::exp(-t);
  double const sy  = oracle::weibull_survival(t, 2.0, 1.0);
  double const ref = 0.5 * oracle::simpson(
                               [&](double x) {
                                 double d = oracle::exp_pdf(x, 1.0) / sx - oracle::weibull_pdf(x, 2.0, 1.0) / sy;
                                 return d * d;
                               },
                               t, 40.0, 2000000);
  double const v = residual_relative(expo(1.0), weib(2.0, 1.0), t).value;
  EXPECT_NEAR(v, ref, 1e-8);
  EXPECT_NEAR(v, 0.0392110658704051, 1e-9);
}

TEST(ResidualMeasures, UnderflowIsReported)
{
  EXPECT_THROW(residual_extropy(unif(0.0, 1.0), 1.0), DenominatorUnderflow);
  EXPECT_THROW(residual_relative(expo(1.0), expo(2.0), 40.0), DenominatorUnderflow);
  EXPECT_THROW(past_extropy(expo(1.0), 0.0), DenominatorUnderflow);
  try
  {
    residual_extropy(unif(0.0, 1.0), 2.0);
    FAIL();
  }
  catch (Error const &e)
  {
    EXPECT_EQ(e.category(), ErrorCategory::numerical);
  }
}

TEST(PastMeasures, ReferenceValues)
{
  EXPECT_NEAR(past_extropy(unif(0.0, 1.0), 1.0).value, -0.5, 1e-12);
  EXPECT_NEAR(past_inaccuracy(unif(0.0, 1.0), unif(0.0, 1.0), 0.5).value, -1.0, 1e-12);
  EXPECT_NEAR(past_relative(unif(0.0, 1.0), unif(0.0, 2.0), 0.5).value, 0.0, 1e-12);
  EXPECT_NEAR(past_extropy(expo(1.0), 2.0).value, -0.328258821374833, 1e-10);
  EXPECT_NEAR(past_relative(expo(1.0), expo(2.0), 1.0).value, 0.0385097631050008, 1e-10);
  // uniform past density is constant, so its divergence against anything on [0, t] with
  // the same normalised mass vanishes only for identical shapes; here only the X side is flat
  double const t  = 0.5;
  double const fx = t;
  double const fy = 1.0 - std::exp(-t);
  double const ref = 0.5 * oracle::simpson(
                               [&](double x) {
                                 double u = 1.0 / fx;
                                 return (u - std::exp(-x) / fy) * u;
                               },
                               0.0, t);
  EXPECT_NEAR(past_divergence(unif(0.0, 1.0), expo(1.0), t).value, ref, 1e-10);
}

TEST(PastMeasures, LimitIsStatic)
{
  auto const u = unif(0.0, 3.0);
  EXPECT_NEAR(past_inaccuracy(u, u, 3.0).value, extropy(u).value, 1e-12);
  auto const w = weib(2.0, 1.0);
  EXPECT_NEAR(past_extropy(w, 50.0).value, extropy(w).value, 1e-9);
}

TEST(PastMeasures, CrhMatchesClosedForms)
{
  for (auto conv : {AtomConvention::absolutely_continuous, AtomConvention::with_atom})
  {
    bool const atom = conv == AtomConvention::with_atom;
    ConstantReversedHazardParams px{1.0, 2.0, atom};
    ConstantReversedHazardParams py{0.5, 2.0, atom};
    auto const cf = crh_past_measures(px, py, 1.0);
    auto const x  = make_model(px);
    auto const y  = make_model(py);
    EXPECT_NEAR(past_extropy(x, 1.0).value, cf.past_extropy_x, 1e-8);
    EXPECT_NEAR(past_extropy(y, 1.0).value, cf.past_extropy_y, 1e-8);
    EXPECT_NEAR(past_inaccuracy(x, y, 1.0).value, cf.past_inaccuracy, 1e-8);
    EXPECT_NEAR(past_divergence(x, y, 1.0).value, cf.past_divergence, 1e-8);
    EXPECT_NEAR(past_relative(x, y, 1.0).value, cf.past_relative, 1e-8);
  }
}

// Random pairs from three families, used by the sum-rule properties.
struct PairGen
{
  std::mt19937_64 rng{20260101};

  DistributionModel draw()
  {
    std::uniform_real_distribution<double> u(0.5, 3.0);
    switch (rng() % 3)
    {
    case 0: return expo(u(rng));
    case 1: return weib(u(rng), u(rng));
    default: return make_model(ConstantReversedHazardParams{u(rng), 2.0 + u(rng), false});
    }
  }
};

TEST(DynamicProperties, SumRulesOnRandomPairs)
{
  PairGen g;
  // absolute error control only, so that 10 abs_tol is the meaningful bound
  QuadratureSpec q;
  q.rel_tol = 1e-14;
  double const     tol = 10.0 * q.abs_tol;
  for (int i = 0; i < 25; ++i)
  {
    auto const   x  = g.draw();
    auto const   y  = g.draw();
    double const t  = 0.2 + 0.1 * (i % 5);
    SCOPED_TRACE(x.name + " vs " + y.name);

    double const dr = residual_relative(x, y, t, q).value;
    EXPECT_GE(dr, -tol);
    EXPECT_NEAR(dr, residual_divergence(x, y, t, q).value + residual_divergence(y, x, t, q).value, tol);
    EXPECT_NEAR(dr,
                2.0 * residual_inaccuracy(x, y, t, q).value - residual_extropy(x, t, q).value -
                    residual_extropy(y, t, q).value,
                tol);
    EXPECT_NEAR(residual_divergence(x, y, t, q).value,
                residual_inaccuracy(x, y, t, q).value - residual_extropy(x, t, q).value, tol);

    double const dp = past_relative(x, y, t, q).value;
    EXPECT_GE(dp, -tol);
    EXPECT_NEAR(dp, past_divergence(x, y, t, q).value + past_divergence(y, x, t, q).value, tol);
    EXPECT_NEAR(dp,
                2.0 * past_inaccuracy(x, y, t, q).value - past_extropy(x, t, q).value -
                    past_extropy(y, t, q).value,
                tol);
    EXPECT_NEAR(past_divergence(x, y, t, q).value,
                past_inaccuracy(x, y, t, q).value - past_extropy(x, t, q).value, tol);
  }
}

TEST(DynamicProperties, SumRuleVerdict)
{
  auto const v = sum_rule_checks(expo(1.0), weib(2.0, 1.0), TimeGrid::linspace(0.2, 1.6, 4));
  EXPECT_TRUE(v.holds) << v.max_abs_residual;
  EXPECT_EQ(v.per_point.size(), 16u);
  EXPECT_EQ(v.per_point[3].label, "past_triple");
}

TEST(HazardRepresentation, ConstantHazard)
{
  auto const h = [](double) { return 3.0; };
  for (double t : {0.0, 0.4, 2.0})
  {
    EXPECT_NEAR(hazard_repr_inaccuracy(1.5, h, t), -1.5 * 3.0 / (2.0 * 4.5), 1e-8);
    EXPECT_NEAR(hazard_repr_relative(1.5, h, t), closed_relative(1.5, 3.0), 1e-8);
    EXPECT_NEAR(hazard_repr_divergence(1.5, h, t), residual_divergence(expo(1.5), expo(3.0), t).value, 1e-8);
  }
  EXPECT_NEAR(hazard_repr_relative(2.0, [](double) { return 2.0; }, 1.0), 0.0, 1e-9);
}

TEST(HazardRepresentation, WeibullHazard)
{
  for (auto [k, s] : {std::pair{2.0, 1.0}, std::pair{0.8, 1.5}})
  {
    auto const y = weib(k, s);
    for (double t : {0.0, 0.4, 1.1})
    {
      SCOPED_TRACE(y.name + " t=" + std::to_string(t));
      EXPECT_NEAR(hazard_repr_inaccuracy(1.0, y.hazard, t), residual_inaccuracy(expo(1.0), y, t).value, 1e-6);
      EXPECT_NEAR(hazard_repr_relative(1.0, y.hazard, t), residual_relative(expo(1.0), y, t).value, 1e-6);
      EXPECT_NEAR(hazard_repr_residual_extropy(y.hazard, t), residual_extropy(y, t).value, 1e-6);
    }
  }
  EXPECT_THROW(hazard_repr_inaccuracy(0.0, [](double) { return 1.0; }, 0.0), InvalidParameter);
}

TEST(TimeGridTest, Validation)
{
  EXPECT_THROW(TimeGrid({}), InsufficientGrid);
  EXPECT_THROW(TimeGrid({0.5, 0.5}), InvalidParameter);
  EXPECT_THROW(TimeGrid({-1.0, 0.5}), InvalidParameter);
  auto const g = TimeGrid::linspace(0.0, 2.0, 11);
  EXPECT_EQ(g.size(), 11u);
  EXPECT_DOUBLE_EQ(g.fd_step(), 2e-4);
  EXPECT_DOUBLE_EQ(TimeGrid({0.1, 0.2}, 1e-3).fd_step(), 1e-3);
}

TEST(Ode, ExponentialPairIsExact)
{
  auto const grid = TimeGrid::linspace(0.1, 3.0, 10);
  auto const v    = ode_check_relative(expo(1.0), expo(2.0), grid);
  EXPECT_TRUE(v.holds);
  EXPECT_LE(v.max_abs_residual, 1e-6);
  EXPECT_EQ(v.per_point.size(), 10u);
  auto const w = ode_check_divergence(expo(1.0), expo(2.0), grid);
  EXPECT_LE(w.max_abs_residual, 1e-6);
}

TEST(Ode, SumSquareFormFailsOnExponentials)
{
  // rhs differs from the derived one by 2 h_X h_Y = 4 here
  auto const v = ode_check_relative(expo(1.0), expo(2.0), TimeGrid::linspace(0.1, 1.0, 5), {}, OdeForm::sum_square);
  EXPECT_FALSE(v.holds);
  EXPECT_NEAR(v.max_abs_residual, 4.0, 1e-6);
}

TEST(Ode, SelfPairIsTrivial)
{
  auto const w = weib(2.0, 1.0);
  auto const v = ode_check_relative(w, w, TimeGrid::linspace(0.1, 1.5, 5));
  EXPECT_TRUE(v.holds);
  EXPECT_LE(v.max_abs_residual, 1e-9);
  EXPECT_LE(ode_check_divergence(w, w, TimeGrid::linspace(0.1, 1.5, 5)).max_abs_residual, 1e-9);
}

TEST(Ode, MixedPairsHold)
{
  auto const grid = TimeGrid::linspace(0.0, 1.8, 10);
  for (auto const &[x, y] : {std::pair{expo(1.0), weib(2.0, 1.0)}, std::pair{weib(1.5, 2.0), weib(2.0, 3.0)},
                             std::pair{expo(0.5), expo(3.0)}})
  {
    SCOPED_TRACE(x.name + " vs " + y.name);
    auto const r = ode_check_relative(x, y, grid);
    EXPECT_TRUE(r.holds) << r.max_abs_residual;
    auto const d = ode_check_divergence(x, y, grid);
    EXPECT_TRUE(d.holds) << d.max_abs_residual;
  }
}

TEST(Bounds, ExponentialPair)
{
  auto const v = bound_checks(expo(1.0), expo(2.0), TimeGrid::linspace(0.1, 2.0, 8), {},
                              {.nondecreasing_relative = true, .hazard_order_with_dfr = true});
  ASSERT_EQ(v.size(), 3u);
  EXPECT_TRUE(v[0].holds);
  EXPECT_TRUE(v[0].hypothesis_met);
  // log-derivative of a constant is 0 <= 3
  EXPECT_TRUE(v[1].holds);
  for (auto const &p : v[1].per_point)
  {
    EXPECT_NEAR(p.lhs, 0.0, 1e-6);
    EXPECT_NEAR(p.rhs, 3.0, 1e-12);
  }
  // h_X = 1 < h_Y = 2, so the declared hr premise is not observed
  EXPECT_FALSE(v[1].hypothesis_met);
  EXPECT_FALSE(v[2].holds);
}

TEST(Bounds, SelfPair)
{
  auto const w = weib(2.0, 1.0);
  auto const v = bound_checks(w, w, TimeGrid::linspace(0.1, 1.0, 5));
  EXPECT_TRUE(v[0].holds);
  for (auto const &p : v[0].per_point)
  {
    EXPECT_NEAR(p.lhs, 0.0, 1e-9);
    EXPECT_NEAR(p.rhs, 0.0, 1e-12);
  }
}

TEST(Bounds, LogDerivativeEqualityForwardDirection)
{
  auto const x    = weib(1.5, 2.0);
  auto const y    = weib(2.0, 3.0);
  auto const grid = TimeGrid::linspace(0.2, 1.5, 8);
  auto const rate = [&](double s) { return x.hazard(s) + y.hazard(s); };
  auto const curve = [&](double s) { return 0.7 / (x.survival(s) * y.survival(s)); };
  EXPECT_TRUE(log_derivative_check(curve, rate, grid, 0.0, true).holds);
  // d_r for this pair does not scale like 1/(S_X S_Y), so equality must fail
  auto const dr = [&](double s) { return residual_relative(x, y, s).value; };
  EXPECT_FALSE(log_derivative_check(dr, rate, grid, 0.0, true).holds);
}

TEST(Monotonicity, ExponentialsAreACounterexample)
{
  // decreasing densities, h_Y > h_X everywhere, yet d_r is flat
  auto const v = monotonicity_check(expo(1.0), expo(2.0), TimeGrid::linspace(0.0, 2.0, 6));
  EXPECT_TRUE(v.hypothesis_met);
  EXPECT_FALSE(v.holds);
}

TEST(Constancy, Characterizations)
{
  auto const grid = TimeGrid::linspace(0.0, 2.0, 10);
  auto const x    = expo(1.0);
  auto const ex   = series(grid, [&](double t) { return residual_inaccuracy(x, expo(2.0), t).value; });
  EXPECT_TRUE(constancy_detector(ex, 1e-6));
  auto const ew = series(grid, [&](double t) { return residual_inaccuracy(x, weib(2.0, 1.0), t).value; });
  EXPECT_FALSE(constancy_detector(ew, 1e-3));
  auto const dw = series(grid, [&](double t) { return residual_divergence(x, weib(2.0, 1.0), t).value; });
  EXPECT_FALSE(constancy_detector(dw, 1e-3));
  EXPECT_TRUE(constancy_detector({{0, 1.0}, {1, 1.0}, {2, 1.0}}, 0.0));
  EXPECT_THROW(constancy_detector({{0, 1.0}, {1, 1.0}}, 1.0), InsufficientGrid);
}

TEST(Orderings, ExponentialPair)
{
  auto const v = dynamic_orderings(expo(1.0), expo(2.0), TimeGrid::linspace(0.2, 2.0, 6));
  EXPECT_EQ(v.hr, Order::greater);  // h_X < h_Y
  EXPECT_EQ(v.rex, Order::greater);  // -1/4 > -1/2
  EXPECT_EQ(v.red, Order::less);
  EXPECT_TRUE(v.rex_red_equivalent);
  EXPECT_TRUE(v.pex_ped_equivalent);
}

TEST(Orderings, SelfPairTies)
{
  auto const w = weib(2.0, 1.0);
  auto const v = dynamic_orderings(w, w, TimeGrid::linspace(0.2, 1.0, 4));
  for (Order o : {v.hr, v.rh, v.rex, v.red, v.pex, v.ped})
  {
    EXPECT_EQ(o, Order::equal);
  }
}

TEST(Orderings, WeibullPairEquivalences)
{
  auto const v = dynamic_orderings(weib(1.5, 2.0), weib(2.0, 3.0), TimeGrid::linspace(0.1, 3.0, 10));
  EXPECT_TRUE(v.rex_red_equivalent);
  EXPECT_TRUE(v.pex_ped_equivalent);
  EXPECT_EQ(v.per_point.size(), 10u);
}

TEST(Decompositions, HoldOnThreePairs)
{
  std::vector<std::pair<DistributionModel, DistributionModel>> pairs{
      {expo(1.0), expo(2.0)},
      {expo(1.0), weib(2.0, 1.0)},
      {weib(1.5, 2.0), make_model(ConstantReversedHazardParams{1.0, 3.0, false})}};
  for (auto const &[x, y] : pairs)
  {
    for (double t : {0.2, 0.5, 0.9, 1.4, 2.0})
    {
      SCOPED_TRACE(x.name + " vs " + y.name + " t=" + std::to_string(t));
      auto const v = global_decompositions(x, y, t);
      EXPECT_TRUE(v.holds) << v.max_abs_residual;
      EXPECT_EQ(v.per_point.size(), 3u);
    }
  }
}

TEST(Decompositions, UnweightedDivergenceFormFails)
{
  auto const v = global_decompositions(expo(1.0), weib(2.0, 1.0), 0.5, {}, DecompositionForm::unweighted);
  EXPECT_FALSE(v.holds);
  EXPECT_LE(std::abs(v.per_point[0].lhs - v.per_point[0].rhs), 1e-8);
  EXPECT_GT(std::abs(v.per_point[1].lhs - v.per_point[1].rhs), 1e-3);
}

TEST(Decompositions, SelfPairReducesToExtropySplit)
{
  auto const   w = weib(2.0, 1.0);
  double const t = 0.7;
  double const F = w.cdf(t);
  double const S = w.survival(t);
  EXPECT_NEAR(extropy(w).value, F * F * past_extropy(w, t).value + S * S * residual_extropy(w, t).value, 1e-9);
  EXPECT_TRUE(global_decompositions(w, w, t).holds);
}

}  // namespace
}  // namespace extropy
