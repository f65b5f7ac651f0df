#pragma once
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

#include "extropy/distribution.hpp"
#include "extropy/error.hpp"
#include "extropy/format.hpp"
#include "extropy/sample_batch.hpp"
#include "extropy/sampler.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

namespace extropy {

struct ExponentialParams
{
  double rate = 1.0;
};

/// pdf (k/scale)(x/scale)^(k-1) exp(-(x/scale)^k).
struct WeibullParams
{
  double shape = 1.0;
  double scale = 1.0;
};

/**
 * Constant reversed hazard family: F(x) = exp(a(x-b)) on [0, b].
 *
 * The cdf jumps by exp(-ab) at 0. With `include_atom` the jump is carried as
 * a point mass that enters every measure over a range containing 0; without it
 * the measures see only the absolutely continuous part, whose density
 * integrates to 1 - exp(-ab).
 */
struct ConstantReversedHazardParams
{
  double a            = 1.0;
  double b            = 1.0;
  bool   include_atom = false;
};

struct UniformParams
{
  double lo = 0.0;
  double hi = 1.0;
};

using FamilyParams =
    std::variant<ExponentialParams, WeibullParams, ConstantReversedHazardParams, UniformParams>;

/// How the constant reversed hazard atom at 0 is treated.
enum class AtomConvention
{
  absolutely_continuous,  ///< ignore the atom (default)
  with_atom,              ///< include the atom at 0 in every integral
};

inline void validate(ExponentialParams const &p)
{
  if (!(p.rate > 0) || !std::isfinite(p.rate))
  {
    throw InvalidParameter("exponential rate must be positive");
  }
}
inline void validate(WeibullParams const &p)
{
  if (!(p.shape > 0) || !(p.scale > 0) || !std::isfinite(p.shape) || !std::isfinite(p.scale))
  {
    throw InvalidParameter("weibull shape and scale must be positive");
  }
}
inline void validate(ConstantReversedHazardParams const &p)
{
  if (!(p.a > 0) || !(p.b > 0) || !std::isfinite(p.a) || !std::isfinite(p.b))
  {
    throw InvalidParameter("constant reversed hazard a and b must be positive");
  }
}
inline void validate(UniformParams const &p)
{
  if (!(p.hi > p.lo) || !std::isfinite(p.lo) || !std::isfinite(p.hi))
  {
    throw InvalidParameter("uniform requires lo < hi");
  }
}
inline void validate(FamilyParams const &p)
{
  std::visit([](auto const &v) { validate(v); }, p);
}

inline std::string describe(ExponentialParams const &p)
{
  return "exponential(rate=" + format_real(p.rate) + ")";
}
inline std::string describe(WeibullParams const &p)
{
  return "weibull(shape=" + format_real(p.shape) + ",scale=" + format_real(p.scale) + ")";
}
inline std::string describe(ConstantReversedHazardParams const &p)
{
  return "crh(a=" + format_real(p.a) + ",b=" + format_real(p.b) +
         (p.include_atom ? ",atom)" : ")");
}
inline std::string describe(UniformParams const &p)
{
  return "uniform(lo=" + format_real(p.lo) + ",hi=" + format_real(p.hi) + ")";
}
inline std::string describe(FamilyParams const &p)
{
  return std::visit([](auto const &v) { return describe(v); }, p);
}

inline DistributionModel make_model(ExponentialParams const &p)
{
  validate(p);
  double const rate = p.rate;
  DistributionModel d;
  d.name     = describe(p);
  d.pdf      = [rate](double x) { return x < 0 ? 0.0 : rate * std::exp(-rate * x); };
  d.cdf      = [rate](double x) { return x <= 0 ? 0.0 : -std::expm1(-rate * x); };
  d.survival = [rate](double x) { return x <= 0 ? 1.0 : std::exp(-rate * x); };
  d.hazard   = [rate](double x) { return x < 0 ? 0.0 : rate; };
  d.reversed_hazard = [rate](double x) {
    return x <= 0 ? std::numeric_limits<double>::infinity() : rate / std::expm1(rate * x);
  };
  d.quantile = [rate](double u) { return -std::log1p(-u) / rate; };
  d.support  = {0.0, std::numeric_limits<double>::infinity()};
  return d;
}

inline DistributionModel make_model(WeibullParams const &p)
{
  validate(p);
  double const k = p.shape;
  double const s = p.scale;
  DistributionModel d;
  d.name = describe(p);
  d.pdf  = [k, s](double x) {
    if (x < 0)
    {
      return 0.0;
    }
    double const z = x / s;
    return (k / s) * std::pow(z, k - 1.0) * std::exp(-std::pow(z, k));
  };
  d.cdf      = [k, s](double x) { return x <= 0 ? 0.0 : -std::expm1(-std::pow(x / s, k)); };
  d.survival = [k, s](double x) { return x <= 0 ? 1.0 : std::exp(-std::pow(x / s, k)); };
  d.hazard   = [k, s](double x) { return x < 0 ? 0.0 : (k / s) * std::pow(x / s, k - 1.0); };
  d.reversed_hazard = [k, s](double x) {
    if (x <= 0)
    {
      return std::numeric_limits<double>::infinity();
    }
    double const zk = std::pow(x / s, k);
    return (k / s) * std::pow(x / s, k - 1.0) * std::exp(-zk) / -std::expm1(-zk);
  };
  d.quantile = [k, s](double u) { return s * std::pow(-std::log1p(-u), 1.0 / k); };
  d.support  = {0.0, std::numeric_limits<double>::infinity()};
  return d;
}

inline DistributionModel make_model(ConstantReversedHazardParams const &p)
{
  validate(p);
  double const a = p.a;
  double const b = p.b;
  DistributionModel d;
  d.name = describe(p);
  d.pdf  = [a, b](double x) { return (x < 0 || x > b) ? 0.0 : a * std::exp(a * (x - b)); };
  d.cdf  = [a, b](double x) {
    if (x < 0)
    {
      return 0.0;
    }
    return x >= b ? 1.0 : std::exp(a * (x - b));
  };
  d.survival = [a, b](double x) {
    if (x < 0)
    {
      return 1.0;
    }
    return x >= b ? 0.0 : -std::expm1(a * (x - b));
  };
  d.hazard = [a, b](double x) {
    if (x < 0)
    {
      return 0.0;
    }
    if (x >= b)
    {
      return std::numeric_limits<double>::infinity();
    }
    return a * std::exp(a * (x - b)) / -std::expm1(a * (x - b));
  };
  d.reversed_hazard = [a, b](double x) { return (x < 0 || x > b) ? 0.0 : a; };
  d.quantile        = [a, b](double u) { return std::max(0.0, b + std::log(u) / a); };
  d.support         = {0.0, b};
  d.atom_at_lo      = p.include_atom ? std::exp(-a * b) : 0.0;
  return d;
}

inline DistributionModel make_model(UniformParams const &p)
{
  validate(p);
  double const lo = p.lo;
  double const hi = p.hi;
  double const w  = hi - lo;
  DistributionModel d;
  d.name     = describe(p);
  d.pdf      = [lo, hi, w](double x) { return (x < lo || x > hi) ? 0.0 : 1.0 / w; };
  d.cdf      = [lo, hi, w](double x) { return x <= lo ? 0.0 : (x >= hi ? 1.0 : (x - lo) / w); };
  d.survival = [lo, hi, w](double x) { return x <= lo ? 1.0 : (x >= hi ? 0.0 : (hi - x) / w); };
  d.hazard   = [lo, hi](double x) {
    if (x < lo)
    {
      return 0.0;
    }
    return x >= hi ? std::numeric_limits<double>::infinity() : 1.0 / (hi - x);
  };
  d.reversed_hazard = [lo, hi](double x) {
    if (x > hi)
    {
      return 0.0;
    }
    return x <= lo ? std::numeric_limits<double>::infinity() : 1.0 / (x - lo);
  };
  d.quantile = [lo, w](double u) { return lo + u * w; };
  d.support  = {lo, hi};
  return d;
}

inline DistributionModel make_model(FamilyParams const &p)
{
  return std::visit([](auto const &v) { return make_model(v); }, p);
}

/**
 * Parses "name:p1,p2,..." into family parameters. Accepted names:
 * exp|exponential:rate, weibull:shape,scale, crh:a,b, uniform:lo,hi.
 */
inline FamilyParams parse_family(std::string const &text,
                                 AtomConvention atoms = AtomConvention::absolutely_continuous)
{
  auto const colon = text.find(':');
  if (colon == std::string::npos)
  {
    throw InvalidParameter("family spec '" + text + "' must look like name:params");
  }
  std::string const   name = text.substr(0, colon);
  std::vector<double> args;
  std::stringstream   ss(text.substr(colon + 1));
  std::string         item;
  while (std::getline(ss, item, ','))
  {
    try
    {
      std::size_t used = 0;
      args.push_back(std::stod(item, &used));
      if (used != item.size())
      {
        throw std::invalid_argument(item);
      }
    }
    catch (std::exception const &)
    {
      throw InvalidParameter("family spec '" + text + "': bad number '" + item + "'");
    }
  }

  auto need = [&](std::size_t count) {
    if (args.size() != count)
    {
      throw InvalidParameter("family spec '" + text + "' expects " + std::to_string(count) +
                             " parameter(s)");
    }
  };

  FamilyParams out;
  if (name == "exp" || name == "exponential")
  {
    need(1);
    out = ExponentialParams{args[0]};
  }
  else if (name == "weibull")
  {
    need(2);
    out = WeibullParams{args[0], args[1]};
  }
  else if (name == "crh")
  {
    need(2);
    out = ConstantReversedHazardParams{args[0], args[1], atoms == AtomConvention::with_atom};
  }
  else if (name == "uniform")
  {
    need(2);
    out = UniformParams{args[0], args[1]};
  }
  else
  {
    throw InvalidParameter("unknown family '" + name + "'");
  }
  validate(out);
  return out;
}

// Closed forms, used as oracles and by the `measure` report.

inline double exponential_extropy(double rate)
{
  validate(ExponentialParams{rate});
  return -rate / 4.0;
}

/// -(1/2) (k/scale) Gamma(2 - 1/k) / 2^(2 - 1/k); finite for k > 1/2.
inline double weibull_extropy(double shape, double scale)
{
  validate(WeibullParams{shape, scale});
  if (!(shape > 0.5))
  {
    throw InvalidParameter("weibull extropy is infinite for shape <= 1/2");
  }
  double const m = 2.0 - 1.0 / shape;
  return -0.5 * (shape / scale) * std::tgamma(m) / std::pow(2.0, m);
}

inline double uniform_extropy(double lo, double hi)
{
  validate(UniformParams{lo, hi});
  return -0.5 / (hi - lo);
}

inline double exponential_inaccuracy(double rate_x, double rate_y)
{
  validate(ExponentialParams{rate_x});
  validate(ExponentialParams{rate_y});
  return -rate_x * rate_y / (2.0 * (rate_x + rate_y));
}

/// d(f,g) between two exponentials; also their residual relative extropy at every t.
inline double closed_form_relative_exponential(double rate_x, double rate_y)
{
  validate(ExponentialParams{rate_x});
  validate(ExponentialParams{rate_y});
  double const s = rate_x + rate_y;
  return 0.25 * (s - 4.0 * rate_x * rate_y / s);
}

struct CrhPastMeasures
{
  double past_extropy_x;
  double past_extropy_y;
  double past_inaccuracy;
  double past_divergence;  ///< J_p(f_t|g_t)
  double past_relative;
};

/**
 * Past-lifetime measures of two constant reversed hazard models at t.
 *
 * With F(t) = exp(a(t-b)) the normalised absolutely continuous part gives
 *   J(_tX)   = -(1/2) [ (a/2)(1 - e^{-2at}) + [atom_x] e^{-2at} ]
 *   xiJ_p    = -(1/2) [ ac/(a+c) (1 - e^{-(a+c)t}) + [atom_x][atom_y] e^{-(a+c)t} ]
 * where each bracketed flag is 1 when that model carries its atom at 0.
 */
inline CrhPastMeasures crh_past_measures(ConstantReversedHazardParams const &px,
                                         ConstantReversedHazardParams const &py, double t)
{
  validate(px);
  validate(py);
  if (!(t > 0) || t > std::min(px.b, py.b))
  {
    throw InvalidParameter("crh past measures need 0 < t <= min(b_x, b_y)");
  }
  double const a  = px.a;
  double const c  = py.a;
  double const ax = px.include_atom ? 1.0 : 0.0;
  double const ay = py.include_atom ? 1.0 : 0.0;

  auto self = [t](double rate, double atom) {
    double const e = std::exp(-2.0 * rate * t);
    return -0.5 * (0.5 * rate * (-std::expm1(-2.0 * rate * t)) + atom * e);
  };

  CrhPastMeasures out{};
  out.past_extropy_x  = self(a, ax);
  out.past_extropy_y  = self(c, ay);
  out.past_inaccuracy = -0.5 * (a * c / (a + c) * (-std::expm1(-(a + c) * t)) +
                                ax * ay * std::exp(-(a + c) * t));
  out.past_divergence = out.past_inaccuracy - out.past_extropy_x;
  out.past_relative   = 2.0 * out.past_inaccuracy - out.past_extropy_x - out.past_extropy_y;
  return out;
}

/// n draws by inverse-cdf transform, in generation order.
inline std::vector<double> draw(FamilyParams const &p, std::size_t n, SeededSampler &rng)
{
  if (n < 1)
  {
    throw InvalidParameter("draw needs n >= 1");
  }
  auto const          model = make_model(p);
  std::vector<double> out(n);
  for (auto &x : out)
  {
    x = model.quantile(rng.open_uniform());
  }
  return out;
}

inline SampleBatch sample(FamilyParams const &p, std::size_t n, SeededSampler &rng)
{
  return SampleBatch(draw(p, n, rng));
}

}  // namespace extropy
