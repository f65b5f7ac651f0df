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

#include "extropy/measures.hpp"

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

TEST(Extropy, ReferenceValues)
{
  EXPECT_NEAR(extropy(expo(2.0)).value, -0.5, 1e-10);
  EXPECT_NEAR(extropy(make_model(UniformParams{0.0, 1.0})).value, -0.5, 1e-10);

  // brute-force trapezoid oracle on [0, 8]
  double const oracle = -0.5 * oracle::trapezoid(
                                   [](double x) {
                                     double f = oracle::weibull_pdf(x, 2.0, 1.0);
                                     return f * f;
                                   },
                                   0.0, 8.0, 2000000);
  auto const r = extropy(weib(2.0, 1.0));
  EXPECT_NEAR(r.value, oracle, 1e-9);
  EXPECT_NEAR(r.value, -0.313328534328875, 1e-10);
  EXPECT_EQ(r.id, MeasureId::extropy);
  EXPECT_TRUE(std::isfinite(r.diagnostics.truncation_point));
  EXPECT_LE(r.diagnostics.error_estimate, 1e-9);
}

TEST(Extropy, NegativeDensityIsInvalid)
{
  auto d = expo(1.0);
  d.pdf  = [](double x) { return x < 0.5 ? -1.0 : 1.0; };
  EXPECT_THROW(extropy(d), InvalidModel);
}

TEST(Inaccuracy, ReferenceValues)
{
  EXPECT_NEAR(extropy_inaccuracy(expo(1.0), expo(1.0)).value, -0.25, 1e-10);
  EXPECT_NEAR(extropy_inaccuracy(expo(1.0), expo(2.0)).value, -1.0 / 3.0, 1e-10);

  auto r = extropy_inaccuracy(make_model(UniformParams{0.0, 1.0}), make_model(UniformParams{2.0, 3.0}));
  EXPECT_EQ(r.value, 0.0);
  EXPECT_TRUE(r.disjoint_supports);
}

TEST(Relative, ReferenceValues)
{
  EXPECT_NEAR(relative_extropy(expo(1.0), expo(2.0)).value, 0.0833, 5e-5);
  EXPECT_NEAR(relative_extropy(expo(2.0), expo(5.0)).value, 0.32143, 5e-6);
  EXPECT_NEAR(relative_extropy(weib(1.5, 2.0), weib(1.5, 2.0)).value, 0.0, 1e-15);

  double const r = relative_extropy(weib(1.5, 2.0), weib(2.0, 3.0)).value;
  EXPECT_NEAR(r, 0.0341400088662751, 1e-9);
  EXPECT_NEAR(r, 0.03414, 5e-7);
}

TEST(Divergence, ReferenceValuesAndAsymmetry)
{
  EXPECT_NEAR(extropy_divergence(expo(1.0), expo(1.0)).value, 0.0, 1e-15);
  EXPECT_NEAR(extropy_divergence(expo(1.0), expo(2.0)).value, -1.0 / 12.0, 1e-10);
  EXPECT_NEAR(extropy_divergence(expo(2.0), expo(1.0)).value, 1.0 / 6.0, 1e-10);
}

TEST(Decompose, SplitIdentity)
{
  auto d = decompose_relative(expo(1.0), expo(2.0));
  EXPECT_NEAR(d.divergence_fg, -1.0 / 12.0, 1e-10);
  EXPECT_NEAR(d.divergence_gf, 1.0 / 6.0, 1e-10);
  EXPECT_NEAR(d.relative, 1.0 / 12.0, 1e-10);

  auto z = decompose_relative(weib(2.0, 1.0), weib(2.0, 1.0));
  EXPECT_NEAR(z.divergence_fg, 0.0, 1e-15);
  EXPECT_NEAR(z.divergence_gf, 0.0, 1e-15);
  EXPECT_NEAR(z.relative, 0.0, 1e-15);
}

FamilyParams random_family(std::mt19937_64 &rng)
{
  std::uniform_real_distribution<double> u(0.0, 1.0);
  switch (rng() % 4)
  {
  case 0: return ExponentialParams{0.3 + 3.0 * u(rng)};
  case 1: return WeibullParams{1.0 + 2.0 * u(rng), 0.5 + 2.5 * u(rng)};
  case 2:
  {
    double lo = 2.0 * u(rng);
    return UniformParams{lo, lo + 0.5 + 3.0 * u(rng)};
  }
  default: return ConstantReversedHazardParams{0.5 + 2.0 * u(rng), 1.0 + 3.0 * u(rng)};
  }
}

TEST(StaticProperties, RandomPairs)
{
  QuadratureSpec const q;
  std::mt19937_64      rng(2024);
  for (int i = 0; i < 40; ++i)
  {
    auto const px = random_family(rng);
    auto const py = random_family(rng);
    auto const x  = make_model(px);
    auto const y  = make_model(py);
    SCOPED_TRACE(x.name + " vs " + y.name);

    double const jx  = extropy(x, q).value;
    double const jy  = extropy(y, q).value;
    double const xi  = extropy_inaccuracy(x, y, q).value;
    auto const   dec = decompose_relative(x, y, q);
    double const dyx = relative_extropy(y, x, q).value;

    EXPECT_GE(dec.relative, -10 * q.abs_tol);
    EXPECT_LE(std::abs(dec.relative - dyx), 10 * q.abs_tol);
    EXPECT_LE(dec.residual(), 10 * q.abs_tol);
    EXPECT_LE(std::abs(dec.relative - (2 * xi - jx - jy)), 10 * q.abs_tol);

    // additive model: J(Y) = J(X) + c forces J(g|f) = J(f|g) - c, so d = 2 J(f|g) - c
    double const c = jy - jx;
    EXPECT_LE(std::abs(dec.divergence_gf - (dec.divergence_fg - c)), 10 * q.abs_tol);
    EXPECT_LE(std::abs(dec.relative - (2 * dec.divergence_fg - c)), 10 * q.abs_tol);

    auto const v = compare_static_ordering(x, y, q);
    EXPECT_TRUE(v.identity_holds);
    EXPECT_TRUE(v.equivalence_holds);
    EXPECT_TRUE(v.nonnegativity_holds);
  }
}

TEST(StaticOrdering, ExponentialPair)
{
  auto v = compare_static_ordering(expo(1.0), expo(2.0));
  EXPECT_NEAR(v.extropy_x, -0.25, 1e-10);
  EXPECT_NEAR(v.extropy_y, -0.5, 1e-10);
  EXPECT_EQ(v.extropy_order, Order::greater);
  EXPECT_EQ(v.divergence_order, Order::less);
  EXPECT_NEAR(v.divergence_gf, 1.0 / 6.0, 1e-10);
  EXPECT_TRUE(v.identity_holds);
  EXPECT_TRUE(v.equivalence_holds);
  EXPECT_TRUE(v.nonnegativity_holds);

  auto same = compare_static_ordering(weib(2.0, 1.0), weib(2.0, 1.0));
  EXPECT_EQ(same.extropy_order, Order::equal);
  EXPECT_EQ(same.divergence_order, Order::equal);
}

TEST(Perturbation, ExponentialMatchesClosedForm)
{
  PerturbationQuery pq{exponential_rate_family(), 2.0, 0.01, std::nullopt};
  auto const        r = perturbation_approx(pq);
  double const      closed =
      0.25 * (2.0 + 2.01) - 2.0 * 2.01 / (2.0 + 2.01);
  EXPECT_NEAR(r.exact, closed, 1e-12);
  EXPECT_NEAR(r.approx / r.exact, 1.0, 0.01);
  // integral of (df/dlambda)^2 is 1/(4 lambda)
  EXPECT_NEAR(r.approx, 0.01 * 0.01 / (8.0 * 2.0), 1e-10);
}

TEST(Perturbation, ZeroIncrement)
{
  auto r = perturbation_approx({exponential_rate_family(), 2.0, 0.0, std::nullopt});
  EXPECT_EQ(r.approx, 0.0);
  EXPECT_NEAR(r.exact, 0.0, 1e-15);
}

TEST(Perturbation, RatioTendsToOneAsIncrementShrinks)
{
  double previous = std::numeric_limits<double>::infinity();
  for (double delta : {0.2, 0.05, 0.01})
  {
    auto r   = perturbation_approx({exponential_rate_family(), 2.0, delta, std::nullopt});
    double g = std::abs(r.exact / (delta * delta / 16.0) - 1.0);
    EXPECT_LT(g, previous);
    previous = g;
  }
  EXPECT_LT(previous, 0.01);
}

TEST(Perturbation, ArgumentReadingDiffers)
{
  // (d/dx f)^2 integrates to lambda^3 / 2 for an exponential
  auto r = perturbation_approx({exponential_rate_family(), 2.0, 0.01, std::nullopt}, {},
                               DerivativeReading::argument);
  EXPECT_NEAR(r.approx, 0.5 * 0.01 * 0.01 * 4.0, 1e-8);
}

TEST(Perturbation, WeibullShapeFamily)
{
  auto r = perturbation_approx({weibull_shape_family(1.0), 2.0, 0.01, std::nullopt});
  EXPECT_NEAR(r.approx / r.exact, 1.0, 0.02);
}

TEST(Perturbation, DomainViolation)
{
  EXPECT_THROW(perturbation_approx({exponential_rate_family(), 0.5, -1.0, std::nullopt}),
               InvalidParameter);
}

}  // namespace
}  // namespace extropy
