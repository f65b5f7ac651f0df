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
#include "extropy/families.hpp"
#include "extropy/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <initializer_list>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace extropy {

enum class MeasureId
{
  extropy,
  inaccuracy,
  relative,
  divergence_fg,
  divergence_gf,
  residual_extropy,
  residual_inaccuracy,
  residual_relative,
  residual_divergence,
  past_extropy,
  past_inaccuracy,
  past_relative,
  past_divergence,
};

inline char const *to_string(MeasureId id)
{
  switch (id)
  {
  case MeasureId::extropy: return "extropy";
  case MeasureId::inaccuracy: return "inaccuracy";
  case MeasureId::relative: return "relative";
  case MeasureId::divergence_fg: return "divergence_fg";
  case MeasureId::divergence_gf: return "divergence_gf";
  case MeasureId::residual_extropy: return "residual_extropy";
  case MeasureId::residual_inaccuracy: return "residual_inaccuracy";
  case MeasureId::residual_relative: return "residual_relative";
  case MeasureId::residual_divergence: return "residual_divergence";
  case MeasureId::past_extropy: return "past_extropy";
  case MeasureId::past_inaccuracy: return "past_inaccuracy";
  case MeasureId::past_relative: return "past_relative";
  case MeasureId::past_divergence: return "past_divergence";
  }
  return "unknown";
}

struct QuadratureDiagnostics
{
  double error_estimate = 0.0;
  /// Upper limit used for an unbounded range, infinity when none was needed.
  double truncation_point = std::numeric_limits<double>::infinity();
  int    subdivisions     = 0;
};

struct MeasureReport
{
  MeasureId             id    = MeasureId::extropy;
  double                value = 0.0;
  std::optional<double> t;
  QuadratureDiagnostics diagnostics;
  /// Set by inaccuracy measures when the supports do not overlap (value is 0).
  bool        disjoint_supports = false;
  std::string x_name;
  std::string y_name;
};

namespace detail {

/// Integration window with the normalising constants of the two densities.
struct Window
{
  double lo;
  double hi;
  double norm_x       = 1.0;
  double norm_y       = 1.0;
  bool   with_atoms   = true;
};

/**
 * Integrates `integrand(s)` over [lo, hi] with breakpoints at the support
 * endpoints of `models`. An infinite `hi` is truncated where the summed
 * survival of the models, scaled by `tail_scale`, is small enough that the
 * remaining tail cannot matter at the requested tolerance.
 */
template <typename Integrand>
QuadratureResult integrate_models(std::initializer_list<DistributionModel const *> models,
                                  double lo, double hi, double tail_scale,
                                  Integrand const &integrand, QuadratureSpec const &q)
{
  double truncation = std::numeric_limits<double>::infinity();
  if (!std::isfinite(hi))
  {
    auto tail_bound = [&](double t) {
      double mass    = 0.0;
      double density = 0.0;
      for (auto const *m : models)
      {
        mass += m->survival(t);
        density += m->pdf(t);
      }
      return mass * tail_scale * std::max(1.0, density * tail_scale);
    };
    hi         = truncation_point(tail_bound, lo, 1.0, q);
    truncation = hi;
  }
  if (!(hi > lo))
  {
    QuadratureResult empty;
    empty.truncation = truncation;
    return empty;
  }
  std::vector<double> breaks{lo, hi};
  for (auto const *m : models)
  {
    for (double p : {m->support.lo, m->support.hi})
    {
      if (p > lo && p < hi)
      {
        breaks.push_back(p);
      }
    }
  }
  auto result       = integrate(integrand, std::move(breaks), q);
  result.truncation = truncation;
  return result;
}

/**
 * Integral of phi(f/norm_x, g/norm_y) over the window, plus the point-mass
 * contribution of any atoms inside it when `with_atoms` is set. `phi` must be
 * a quadratic form in its two arguments.
 */
template <typename Phi>
QuadratureResult pair_integral(DistributionModel const &x, DistributionModel const &y,
                               Window const &w, Phi const &phi, QuadratureSpec const &q)
{
  double const nx = w.norm_x;
  double const ny = w.norm_y;
  auto integrand  = [&](double s) {
    double const u = x.pdf(s);
    double const v = y.pdf(s);
    if (u < 0 || v < 0)
    {
      throw InvalidModel("negative density at x=" + format_real(s));
    }
    return phi(u / nx, v / ny);
  };
  double const scale = 1.0 / std::min(nx, ny);
  auto         out   = integrate_models({&x, &y}, w.lo, w.hi, scale, integrand, q);

  if (w.with_atoms)
  {
    double const lx     = x.support.lo;
    double const ly     = y.support.lo;
    bool const   x_in   = x.atom_at_lo > 0 && lx >= w.lo && lx <= w.hi;
    bool const   y_in   = y.atom_at_lo > 0 && ly >= w.lo && ly <= w.hi;
    double const ax     = x_in ? x.atom_at_lo / nx : 0.0;
    double const ay     = y_in ? y.atom_at_lo / ny : 0.0;
    if (x_in && y_in && lx == ly)
    {
      out.value += phi(ax, ay);
    }
    else
    {
      if (x_in)
      {
        out.value += phi(ax, 0.0);
      }
      if (y_in)
      {
        out.value += phi(0.0, ay);
      }
    }
  }
  return out;
}

inline Window whole_window(DistributionModel const &x, DistributionModel const &y)
{
  return {std::min(x.support.lo, y.support.lo), std::max(x.support.hi, y.support.hi)};
}

inline MeasureReport make_report(MeasureId id, double value, QuadratureResult const &r,
                                 DistributionModel const &x, DistributionModel const &y,
                                 std::optional<double> t = std::nullopt)
{
  MeasureReport out;
  out.id                           = id;
  out.value                        = value;
  out.t                            = t;
  out.diagnostics.error_estimate   = r.error;
  out.diagnostics.truncation_point = r.truncation;
  out.diagnostics.subdivisions     = r.subdivisions;
  out.x_name                       = x.name;
  out.y_name                       = y.name;
  return out;
}

inline double square(double v)
{
  return v * v;
}

}  // namespace detail

/// J(X) = -(1/2) * integral of f^2.
inline MeasureReport extropy(DistributionModel const &d, QuadratureSpec const &q = {})
{
  auto r = detail::pair_integral(d, d, detail::whole_window(d, d),
                                 [](double u, double) { return u * u; }, q);
  return detail::make_report(MeasureId::extropy, -0.5 * r.value, r, d, d);
}

/// xiJ(X,Y) = -(1/2) * integral of f g. Disjoint supports give 0 with a flag.
inline MeasureReport extropy_inaccuracy(DistributionModel const &x, DistributionModel const &y,
                                        QuadratureSpec const &q = {})
{
  double const lo = std::max(x.support.lo, y.support.lo);
  double const hi = std::min(x.support.hi, y.support.hi);
  bool const shared_atom =
      x.atom_at_lo > 0 && y.atom_at_lo > 0 && x.support.lo == y.support.lo;
  if (!(lo < hi) && !shared_atom)
  {
    auto out              = detail::make_report(MeasureId::inaccuracy, 0.0, {}, x, y);
    out.disjoint_supports = true;
    return out;
  }
  auto r = detail::pair_integral(x, y, detail::whole_window(x, y),
                                 [](double u, double v) { return u * v; }, q);
  return detail::make_report(MeasureId::inaccuracy, -0.5 * r.value, r, x, y);
}

/// d(f,g) = (1/2) * integral of (f - g)^2.
inline MeasureReport relative_extropy(DistributionModel const &x, DistributionModel const &y,
                                      QuadratureSpec const &q = {})
{
  auto r = detail::pair_integral(x, y, detail::whole_window(x, y),
                                 [](double u, double v) { return detail::square(u - v); }, q);
  return detail::make_report(MeasureId::relative, 0.5 * r.value, r, x, y);
}

/// J(f|g) = (1/2) * integral of (f - g) f. May be negative.
inline MeasureReport extropy_divergence(DistributionModel const &x, DistributionModel const &y,
                                        QuadratureSpec const &q = {})
{
  auto r = detail::pair_integral(x, y, detail::whole_window(x, y),
                                 [](double u, double v) { return (u - v) * u; }, q);
  return detail::make_report(MeasureId::divergence_fg, 0.5 * r.value, r, x, y);
}

struct RelativeDecomposition
{
  double divergence_fg;  ///< J(f|g)
  double divergence_gf;  ///< J(g|f)
  double relative;       ///< d(f,g)
  /// |J(f|g) + J(g|f) - d(f,g)|
  double residual() const
  {
    return std::abs(divergence_fg + divergence_gf - relative);
  }
};

/// The three quantities of the split d = J(f|g) + J(g|f), each by its own integral.
inline RelativeDecomposition decompose_relative(DistributionModel const &x,
                                                DistributionModel const &y,
                                                QuadratureSpec const &q = {})
{
  return {extropy_divergence(x, y, q).value, extropy_divergence(y, x, q).value,
          relative_extropy(x, y, q).value};
}

// Perturbation approximation -------------------------------------------------

/// A one-parameter slice through a family.
struct ParametricFamily
{
  std::string                                name;
  std::function<DistributionModel(double)>  at;
  std::function<bool(double)>               valid;
};

inline ParametricFamily exponential_rate_family()
{
  return {"exponential rate", [](double r) { return make_model(ExponentialParams{r}); },
          [](double r) { return r > 0 && std::isfinite(r); }};
}

inline ParametricFamily weibull_shape_family(double scale)
{
  return {"weibull shape", [scale](double k) { return make_model(WeibullParams{k, scale}); },
          [](double k) { return k > 0 && std::isfinite(k); }};
}

inline ParametricFamily weibull_scale_family(double shape)
{
  return {"weibull scale", [shape](double s) { return make_model(WeibullParams{shape, s}); },
          [](double s) { return s > 0 && std::isfinite(s); }};
}

struct PerturbationQuery
{
  ParametricFamily family;
  double           theta       = 1.0;
  double           delta_theta = 0.0;
  /// Central-difference step; defaults to max(1e-5, 1e-5 |theta|).
  std::optional<double> derivative_step;
};

/// Which derivative is squared in the approximation integrand.
enum class DerivativeReading
{
  parameter,  ///< d f(x, theta) / d theta, what the Taylor expansion produces
  argument,   ///< d f(x, theta) / d x
};

struct PerturbationResult
{
  double approx;
  double exact;
};

/**
 * approx = (delta^2 / 2) * integral (df)^2, exact = d(f(.,theta), f(.,theta+delta)).
 * As delta -> 0, exact / approx -> 1 under the parameter reading.
 */
inline PerturbationResult perturbation_approx(PerturbationQuery const &pq,
                                              QuadratureSpec const &q = {},
                                              DerivativeReading reading = DerivativeReading::parameter)
{
  auto const &fam = pq.family;
  if (!fam.valid(pq.theta) || !fam.valid(pq.theta + pq.delta_theta))
  {
    throw InvalidParameter("theta and theta + delta must lie in the parameter domain of " +
                           fam.name);
  }
  double const step = pq.derivative_step.value_or(std::max(1e-5, 1e-5 * std::abs(pq.theta)));
  if (!(step > 0) || !fam.valid(pq.theta - step) || !fam.valid(pq.theta + step))
  {
    throw InvalidParameter("derivative step leaves the parameter domain");
  }

  auto const base  = fam.at(pq.theta);
  auto const shift = fam.at(pq.theta + pq.delta_theta);
  double const exact = relative_extropy(base, shift, q).value;

  QuadratureResult integral;
  if (reading == DerivativeReading::parameter)
  {
    auto const up   = fam.at(pq.theta + step);
    auto const down = fam.at(pq.theta - step);
    auto       integrand = [&](double x) {
      double const df = (up.pdf(x) - down.pdf(x)) / (2.0 * step);
      return df * df;
    };
    double const lo = std::min({base.support.lo, up.support.lo, down.support.lo});
    double const hi = std::max({base.support.hi, up.support.hi, down.support.hi});
    integral        = detail::integrate_models({&base, &up, &down}, lo, hi, 1.0, integrand, q);
  }
  else
  {
    Support const s = base.support;
    auto integrand  = [&](double x) {
      double const h = 1e-5 * std::max(1.0, std::abs(x));
      double       df;
      if (x - h < s.lo)
      {
        df = (base.pdf(x + h) - base.pdf(x)) / h;
      }
      else if (x + h > s.hi)
      {
        df = (base.pdf(x) - base.pdf(x - h)) / h;
      }
      else
      {
        df = (base.pdf(x + h) - base.pdf(x - h)) / (2.0 * h);
      }
      return df * df;
    };
    integral = detail::integrate_models({&base}, s.lo, s.hi, 1.0, integrand, q);
  }
  double const approx = 0.5 * pq.delta_theta * pq.delta_theta * integral.value;
  return {approx, exact};
}

// Static orderings -------------------------------------------------------------

/// Relation of X to Y. `crossing` only arises for relations checked on a grid.
enum class Order
{
  less,
  equal,
  greater,
  crossing,
};

inline char const *to_string(Order o)
{
  switch (o)
  {
  case Order::less: return "less";
  case Order::equal: return "equal";
  case Order::greater: return "greater";
  case Order::crossing: return "crossing";
  }
  return "unknown";
}

inline Order compare_values(double a, double b, double tie)
{
  if (std::abs(a - b) <= tie)
  {
    return Order::equal;
  }
  return a < b ? Order::less : Order::greater;
}

inline Order reverse(Order o)
{
  switch (o)
  {
  case Order::less: return Order::greater;
  case Order::greater: return Order::less;
  default: return o;
  }
}

struct StaticOrderingVerdict
{
  double extropy_x;
  double extropy_y;
  double divergence_fg;
  double divergence_gf;
  /// X vs Y in extropy order: less means J(X) < J(Y).
  Order extropy_order;
  /// X vs Y in divergence order: less means J(f|g) < J(g|f).
  Order divergence_order;
  /// (J(f|g) - J(g|f)) - (J(Y) - J(X)); zero up to quadrature error.
  double identity_residual;
  bool   identity_holds;
  /// X <ex Y iff X >ed Y, checked when the gap exceeds the tie threshold.
  bool equivalence_holds;
  /// X >ed Y implies J(f|g) > 0, and X <ed Y implies J(g|f) > 0.
  bool nonnegativity_holds;
};

inline StaticOrderingVerdict compare_static_ordering(DistributionModel const &x,
                                                     DistributionModel const &y,
                                                     QuadratureSpec const &q = {})
{
  StaticOrderingVerdict v{};
  v.extropy_x     = extropy(x, q).value;
  v.extropy_y     = extropy(y, q).value;
  v.divergence_fg = extropy_divergence(x, y, q).value;
  v.divergence_gf = extropy_divergence(y, x, q).value;

  double const tie   = 100.0 * q.abs_tol;
  v.extropy_order    = compare_values(v.extropy_x, v.extropy_y, tie);
  v.divergence_order = compare_values(v.divergence_fg, v.divergence_gf, tie);
  v.identity_residual =
      (v.divergence_fg - v.divergence_gf) - (v.extropy_y - v.extropy_x);
  v.identity_holds    = std::abs(v.identity_residual) <= 10.0 * q.abs_tol;
  v.equivalence_holds = v.extropy_order == Order::equal || v.divergence_order == Order::equal ||
                        v.divergence_order == reverse(v.extropy_order);

  v.nonnegativity_holds = true;
  if (v.divergence_order == Order::greater)
  {
    v.nonnegativity_holds = v.divergence_fg > -10.0 * q.abs_tol;
  }
  else if (v.divergence_order == Order::less)
  {
    v.nonnegativity_holds = v.divergence_gf > -10.0 * q.abs_tol;
  }
  return v;
}

}  // namespace extropy
