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
#include "extropy/measures.hpp"
#include "extropy/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace extropy {

// Residual (X - t | X > t) and past (t - X | X <= t) measures -----------------

namespace detail {

inline Window residual_window(DistributionModel const &x, DistributionModel const &y, double t,
                              QuadratureSpec const &q)
{
  double const sx = x.survival(t);
  double const sy = y.survival(t);
  if (!(sx > q.denominator_floor) || !(sy > q.denominator_floor))
  {
    throw DenominatorUnderflow("survival at t=" + format_real(t) + " is below the floor");
  }
  // Atoms sit at the lower support end, which the residual range excludes.
  return {t, std::max(x.support.hi, y.support.hi), sx, sy, false};
}

inline Window past_window(DistributionModel const &x, DistributionModel const &y, double t,
                          QuadratureSpec const &q)
{
  double const fx = x.cdf(t);
  double const fy = y.cdf(t);
  if (!(fx > q.denominator_floor) || !(fy > q.denominator_floor))
  {
    throw DenominatorUnderflow("cdf at t=" + format_real(t) + " is below the floor");
  }
  return {std::min(x.support.lo, y.support.lo), t, fx, fy, true};
}

}  // namespace detail

/// J_t(X) = -(1/2) integral_t^inf (f / S(t))^2.
inline MeasureReport residual_extropy(DistributionModel const &d, double t, QuadratureSpec const &q = {})
{
  auto r = detail::pair_integral(d, d, detail::residual_window(d, d, t, q),
                                 [](double u, double) { return u * u; }, q);
  return detail::make_report(MeasureId::residual_extropy, -0.5 * r.value, r, d, d, t);
}

/// J(_tX) = -(1/2) integral_0^t (f / F(t))^2.
inline MeasureReport past_extropy(DistributionModel const &d, double t, QuadratureSpec const &q = {})
{
  auto r = detail::pair_integral(d, d, detail::past_window(d, d, t, q),
                                 [](double u, double) { return u * u; }, q);
  return detail::make_report(MeasureId::past_extropy, -0.5 * r.value, r, d, d, t);
}

inline MeasureReport residual_inaccuracy(DistributionModel const &x, DistributionModel const &y,
                                         double t, QuadratureSpec const &q = {})
{
  auto r = detail::pair_integral(x, y, detail::residual_window(x, y, t, q),
                                 [](double u, double v) { return u * v; }, q);
  return detail::make_report(MeasureId::residual_inaccuracy, -0.5 * r.value, r, x, y, t);
}

inline MeasureReport past_inaccuracy(DistributionModel const &x, DistributionModel const &y,
                                     double t, QuadratureSpec const &q = {})
{
  auto r = detail::pair_integral(x, y, detail::past_window(x, y, t, q),
                                 [](double u, double v) { return u * v; }, q);
  return detail::make_report(MeasureId::past_inaccuracy, -0.5 * r.value, r, x, y, t);
}

/// d_r(f,g,t) = (1/2) integral_t^inf (f/S_X(t) - g/S_Y(t))^2.
inline MeasureReport residual_relative(DistributionModel const &x, DistributionModel const &y,
                                       double t, QuadratureSpec const &q = {})
{
  auto r = detail::pair_integral(x, y, detail::residual_window(x, y, t, q),
                                 [](double u, double v) { return detail::square(u - v); }, q);
  return detail::make_report(MeasureId::residual_relative, 0.5 * r.value, r, x, y, t);
}

/// d_p(f,g,t) = +(1/2) integral_0^t (f/F(t) - g/G(t))^2, nonnegative.
inline MeasureReport past_relative(DistributionModel const &x, DistributionModel const &y,
                                   double t, QuadratureSpec const &q = {})
{
  auto r = detail::pair_integral(x, y, detail::past_window(x, y, t, q),
                                 [](double u, double v) { return detail::square(u - v); }, q);
  return detail::make_report(MeasureId::past_relative, 0.5 * r.value, r, x, y, t);
}

/// J_r(f_t|g_t) = (1/2) integral_t^inf (f/S_X - g/S_Y) f/S_X.
inline MeasureReport residual_divergence(DistributionModel const &x, DistributionModel const &y,
                                         double t, QuadratureSpec const &q = {})
{
  auto r = detail::pair_integral(x, y, detail::residual_window(x, y, t, q),
                                 [](double u, double v) { return (u - v) * u; }, q);
  return detail::make_report(MeasureId::residual_divergence, 0.5 * r.value, r, x, y, t);
}

/// J_p(f_t|g_t) = +(1/2) integral_0^t (f/F - g/G) f/F, so that the two directions sum to d_p.
inline MeasureReport past_divergence(DistributionModel const &x, DistributionModel const &y,
                                     double t, QuadratureSpec const &q = {})
{
  auto r = detail::pair_integral(x, y, detail::past_window(x, y, t, q),
                                 [](double u, double v) { return (u - v) * u; }, q);
  return detail::make_report(MeasureId::past_divergence, 0.5 * r.value, r, x, y, t);
}

// Hazard-rate representations for an exponential X ----------------------------

namespace detail {

/// integral_t^x h(u) du
inline double cumulative_hazard(RealFunction const &hazard, double t, double x, QuadratureSpec const &q)
{
  QuadratureSpec inner = q;
  inner.abs_tol        = q.abs_tol * 1e-2;
  return integrate(hazard, t, x, inner).value;
}

inline void check_rate(double lambda_x)
{
  if (!(lambda_x > 0) || !std::isfinite(lambda_x))
  {
    throw InvalidParameter("exponential rate of X must be positive");
  }
}

}  // namespace detail

/**
 * xiJ_r(X,Y,t) for X ~ Exp(lambda_x), rebuilt from the hazard of Y alone:
 *   -(lambda/2) integral_t^inf h_Y(x) exp(-lambda (x - t) - integral_t^x h_Y) dx.
 * The tail beyond T is bounded by (lambda/2) exp(-lambda (T - t)).
 */
inline double hazard_repr_inaccuracy(double lambda_x, RealFunction const &hazard_y, double t,
                                     QuadratureSpec const &q = {})
{
  detail::check_rate(lambda_x);
  double const target = q.tail_fraction * q.abs_tol;
  double const upper  = t + std::log(std::max(1.0, lambda_x / (2.0 * target))) / lambda_x;
  auto integrand      = [&](double x) {
    double const h = hazard_y(x);
    if (h == 0.0)
    {
      return 0.0;
    }
    double const cum = detail::cumulative_hazard(hazard_y, t, x, q);
    return 0.5 * lambda_x * h * std::exp(-lambda_x * (x - t) - cum);
  };
  return -integrate(integrand, t, upper, q).value;
}

/// J_t(Y) = -(1/2) integral_t^inf h_Y(x)^2 exp(-2 integral_t^x h_Y) dx.
inline double hazard_repr_residual_extropy(RealFunction const &hazard_y, double t,
                                           QuadratureSpec const &q = {})
{
  auto tail = [&](double x) {
    return hazard_y(x) * std::exp(-2.0 * detail::cumulative_hazard(hazard_y, t, x, q));
  };
  double const upper     = truncation_point(tail, t, 1.0, q);
  auto         integrand = [&](double x) {
    double const h = hazard_y(x);
    if (h == 0.0)
    {
      return 0.0;
    }
    return h * h * std::exp(-2.0 * detail::cumulative_hazard(hazard_y, t, x, q));
  };
  return -0.5 * integrate(integrand, t, upper, q).value;
}

/// d_r(f,g,t) for X ~ Exp(lambda_x): 2 xiJ_r - J_t(Y) - J_t(X), with J_t(X) = -lambda/4.
inline double hazard_repr_relative(double lambda_x, RealFunction const &hazard_y, double t,
                                   QuadratureSpec const &q = {})
{
  return 2.0 * hazard_repr_inaccuracy(lambda_x, hazard_y, t, q) -
         hazard_repr_residual_extropy(hazard_y, t, q) + lambda_x / 4.0;
}

/// J_r(f_t|g_t) for X ~ Exp(lambda_x): xiJ_r + lambda/4.
inline double hazard_repr_divergence(double lambda_x, RealFunction const &hazard_y, double t,
                                     QuadratureSpec const &q = {})
{
  return hazard_repr_inaccuracy(lambda_x, hazard_y, t, q) + lambda_x / 4.0;
}

// Grids and verdicts ----------------------------------------------------------

/// Strictly increasing, nonnegative time points plus the step used for d/dt.
class TimeGrid
{
public:
  explicit TimeGrid(std::vector<double> points, std::optional<double> fd_step = std::nullopt)
    : points_(std::move(points))
  {
    if (points_.empty())
    {
      throw InsufficientGrid("a time grid needs at least one point");
    }
    for (std::size_t i = 0; i < points_.size(); ++i)
    {
      if (!(points_[i] >= 0) || !std::isfinite(points_[i]))
      {
        throw InvalidParameter("time points must be finite and nonnegative");
      }
      if (i > 0 && !(points_[i] > points_[i - 1]))
      {
        throw InvalidParameter("time points must be strictly increasing");
      }
    }
    double const range = points_.back() - points_.front();
    fd_step_ = fd_step.value_or(range > 0 ? 1e-4 * range : 1e-4 * std::max(1.0, points_.front()));
    if (!(fd_step_ > 0))
    {
      throw InvalidParameter("finite-difference step must be positive");
    }
  }

  static TimeGrid linspace(double lo, double hi, std::size_t n)
  {
    if (n < 2)
    {
      throw InsufficientGrid("linspace needs at least two points");
    }
    std::vector<double> p(n);
    for (std::size_t i = 0; i < n; ++i)
    {
      p[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
    }
    return TimeGrid(std::move(p));
  }

  std::vector<double> const &points() const noexcept
  {
    return points_;
  }
  double fd_step() const noexcept
  {
    return fd_step_;
  }
  std::size_t size() const noexcept
  {
    return points_.size();
  }

private:
  std::vector<double> points_;
  double              fd_step_;
};

enum class VerdictKind
{
  ode_residual,
  bound,
  constancy,
  decomposition,
  ordering,
  monotonicity,
};

inline char const *to_string(VerdictKind k)
{
  switch (k)
  {
  case VerdictKind::ode_residual: return "ode_residual";
  case VerdictKind::bound: return "bound";
  case VerdictKind::constancy: return "constancy";
  case VerdictKind::decomposition: return "decomposition";
  case VerdictKind::ordering: return "ordering";
  case VerdictKind::monotonicity: return "monotonicity";
  }
  return "unknown";
}

struct VerdictPoint
{
  double      t;
  double      lhs;
  double      rhs;
  std::string label;
};

/**
 * Outcome of checking an identity or inequality over a grid.
 *
 * For identities `holds` means max |lhs - rhs| <= tolerance. For inequalities
 * (lhs <= rhs, or lhs >= rhs for lower bounds) `max_abs_residual` is the
 * largest violation and `holds` means there is none beyond the tolerance.
 * `hypothesis_met` is false when a premise the caller declared is not observed
 * on the grid; the conclusion is still evaluated and reported.
 */
struct DynamicVerdict
{
  VerdictKind               kind = VerdictKind::ode_residual;
  std::string               name;
  double                    max_abs_residual = 0.0;
  double                    tolerance        = 0.0;
  bool                      holds            = true;
  bool                      hypothesis_met   = true;
  std::string               note;
  std::vector<VerdictPoint> per_point;
};

namespace detail {

inline void finish_identity(DynamicVerdict &v)
{
  v.max_abs_residual = 0.0;
  for (auto const &p : v.per_point)
  {
    double const r = std::abs(p.lhs - p.rhs);
    v.max_abs_residual = std::isnan(r) ? r : std::max(v.max_abs_residual, r);
  }
  v.holds = v.max_abs_residual <= v.tolerance;
}

/// Central difference, switching to a one-sided second-order stencil near `floor`.
template <typename Curve>
double derivative(Curve const &curve, double t, double h, double floor)
{
  if (t - h < floor)
  {
    return (-3.0 * curve(t) + 4.0 * curve(t + h) - curve(t + 2.0 * h)) / (2.0 * h);
  }
  return (curve(t + h) - curve(t - h)) / (2.0 * h);
}

inline double residual_floor(DistributionModel const &x, DistributionModel const &y)
{
  return std::max(x.support.lo, y.support.lo);
}

}  // namespace detail

/**
 * Residual and past sum rules at each grid point:
 * d = J(f|g) + J(g|f) and d = 2 xiJ - J(X) - J(Y), for both the residual and
 * the past versions. Tolerance 10 abs_tol.
 */
inline DynamicVerdict sum_rule_checks(DistributionModel const &x, DistributionModel const &y,
                                      TimeGrid const &grid, QuadratureSpec const &q = {})
{
  DynamicVerdict v;
  v.kind      = VerdictKind::decomposition;
  v.name      = "sum_rules";
  v.tolerance = 10.0 * q.abs_tol;
  for (double t : grid.points())
  {
    double const dr = residual_relative(x, y, t, q).value;
    v.per_point.push_back(
        {t, dr, residual_divergence(x, y, t, q).value + residual_divergence(y, x, t, q).value, "residual_split"});
    v.per_point.push_back({t, dr,
                           2.0 * residual_inaccuracy(x, y, t, q).value - residual_extropy(x, t, q).value -
                               residual_extropy(y, t, q).value,
                           "residual_triple"});
    double const dp = past_relative(x, y, t, q).value;
    v.per_point.push_back(
        {t, dp, past_divergence(x, y, t, q).value + past_divergence(y, x, t, q).value, "past_split"});
    v.per_point.push_back({t, dp,
                           2.0 * past_inaccuracy(x, y, t, q).value - past_extropy(x, t, q).value -
                               past_extropy(y, t, q).value,
                           "past_triple"});
  }
  detail::finish_identity(v);
  return v;
}

/// Which right-hand side is used for the d_r differential equation.
enum class OdeForm
{
  /// (h_Y - h_X)(J_t(X) - J_t(Y)) - (1/2)(h_X - h_Y)^2, what differentiating d_r yields
  difference_square,
  /// (h_Y - h_X)(J_t(X) - J_t(Y)) - (1/2)(h_X + h_Y)^2; off by 2 h_X h_Y, kept for comparison
  sum_square,
};

/**
 * Checks d/dt d_r - d_r (h_X + h_Y) = rhs at every grid point, with d/dt by
 * finite differences. Default tolerance 1e-3 absorbs the O(step^2) error.
 */
inline DynamicVerdict ode_check_relative(DistributionModel const &x, DistributionModel const &y,
                                         TimeGrid const &grid, QuadratureSpec const &q = {},
                                         OdeForm form = OdeForm::difference_square, double tolerance = 1e-3)
{
  DynamicVerdict v;
  v.kind      = VerdictKind::ode_residual;
  v.name      = form == OdeForm::difference_square ? "relative_ode" : "relative_ode_sum_square";
  v.tolerance = tolerance;

  auto curve        = [&](double s) { return residual_relative(x, y, s, q).value; };
  double const floor = detail::residual_floor(x, y);
  for (double t : grid.points())
  {
    double const d   = curve(t);
    double const dd  = detail::derivative(curve, t, grid.fd_step(), floor);
    double const hx  = x.hazard(t);
    double const hy  = y.hazard(t);
    double const jx  = residual_extropy(x, t, q).value;
    double const jy  = residual_extropy(y, t, q).value;
    double const sum = form == OdeForm::difference_square ? hx - hy : hx + hy;
    double const lhs = dd - d * (hx + hy);
    double const rhs = (hy - hx) * (jx - jy) - 0.5 * sum * sum;
    v.per_point.push_back({t, lhs, rhs, {}});
  }
  detail::finish_identity(v);
  return v;
}

/// Checks d/dt J_r(f_t|g_t) = (h_X + h_Y) J_r(f_t|g_t) + (h_Y - h_X)(h_X/2 + J_t(X)).
inline DynamicVerdict ode_check_divergence(DistributionModel const &x, DistributionModel const &y,
                                           TimeGrid const &grid, QuadratureSpec const &q = {},
                                           double tolerance = 1e-3)
{
  DynamicVerdict v;
  v.kind      = VerdictKind::ode_residual;
  v.name      = "divergence_ode";
  v.tolerance = tolerance;

  auto curve        = [&](double s) { return residual_divergence(x, y, s, q).value; };
  double const floor = detail::residual_floor(x, y);
  for (double t : grid.points())
  {
    double const j  = curve(t);
    double const dj = detail::derivative(curve, t, grid.fd_step(), floor);
    double const hx = x.hazard(t);
    double const hy = y.hazard(t);
    double const jx = residual_extropy(x, t, q).value;
    v.per_point.push_back({t, dj, (hx + hy) * j + (hy - hx) * (0.5 * hx + jx), {}});
  }
  detail::finish_identity(v);
  return v;
}

// Bounds ------------------------------------------------------------------------

/// Premises the caller asserts for `bound_checks`; each is verified on the grid.
struct BoundHypotheses
{
  bool nondecreasing_relative = false;  ///< d_r nondecreasing in t
  bool hazard_order_with_dfr  = false;  ///< h_X >= h_Y and X or Y has nonincreasing hazard
};

namespace detail {

inline bool nonincreasing(std::vector<double> const &v, double slack)
{
  for (std::size_t i = 1; i < v.size(); ++i)
  {
    if (v[i] > v[i - 1] + slack)
    {
      return false;
    }
  }
  return true;
}

}  // namespace detail

/**
 * Compares d/dt log(curve) with `rate` on the grid. With `equality` the
 * verdict holds when they agree within `tolerance`; otherwise when
 * d/dt log(curve) <= rate + tolerance. Points where the curve is below
 * `curve_floor` have no usable logarithm and are recorded with a NaN lhs.
 */
template <typename Curve, typename Rate>
DynamicVerdict log_derivative_check(Curve const &curve, Rate const &rate, TimeGrid const &grid,
                                    double support_floor, bool equality, double tolerance = 1e-3,
                                    double curve_floor = 1e-6)
{
  DynamicVerdict v;
  v.kind      = VerdictKind::bound;
  v.name      = equality ? "log_derivative_equality" : "log_derivative_bound";
  v.tolerance = tolerance;
  v.holds     = true;
  for (double t : grid.points())
  {
    double const c   = curve(t);
    double const rhs = rate(t);
    if (!(c > curve_floor))
    {
      v.per_point.push_back({t, std::numeric_limits<double>::quiet_NaN(), rhs, "skipped"});
      continue;
    }
    double const lhs = detail::derivative(curve, t, grid.fd_step(), support_floor) / c;
    double const violation = equality ? std::abs(lhs - rhs) : std::max(0.0, lhs - rhs);
    v.max_abs_residual     = std::max(v.max_abs_residual, violation);
    v.per_point.push_back({t, lhs, rhs, {}});
  }
  v.holds = v.max_abs_residual <= tolerance;
  return v;
}

/**
 * Evaluates, per grid point:
 *  (i)   d_r >= ((h_X - h_Y)/(h_X + h_Y)) (J_t(X) - J_t(Y)), premise d_r nondecreasing;
 *  (ii)  d/dt log d_r <= h_X + h_Y, premise h_X >= h_Y with a DFR member;
 *  (iii) d/dt log d_r = h_X + h_Y, which happens iff d_r S_X S_Y is constant.
 */
inline std::vector<DynamicVerdict> bound_checks(DistributionModel const &x, DistributionModel const &y,
                                                TimeGrid const &grid, QuadratureSpec const &q = {},
                                                BoundHypotheses const &declared = {})
{
  auto const         &ts = grid.points();
  std::vector<double> d, hx, hy, jx, jy;
  for (double t : ts)
  {
    d.push_back(residual_relative(x, y, t, q).value);
    hx.push_back(x.hazard(t));
    hy.push_back(y.hazard(t));
    jx.push_back(residual_extropy(x, t, q).value);
    jy.push_back(residual_extropy(y, t, q).value);
  }
  double const slack = 1e-9;

  std::vector<DynamicVerdict> out;

  {
    DynamicVerdict v;
    v.kind      = VerdictKind::bound;
    v.name      = "relative_lower_bound";
    v.tolerance = 10.0 * q.abs_tol;
    std::vector<double> neg(d.size());
    std::transform(d.begin(), d.end(), neg.begin(), [](double z) { return -z; });
    bool const observed = detail::nonincreasing(neg, slack);
    v.hypothesis_met    = !declared.nondecreasing_relative || observed;
    v.note = observed ? "d_r nondecreasing on grid" : "d_r not nondecreasing on grid";
    for (std::size_t i = 0; i < ts.size(); ++i)
    {
      double const rhs = (hx[i] - hy[i]) / (hx[i] + hy[i]) * (jx[i] - jy[i]);
      v.max_abs_residual = std::max(v.max_abs_residual, std::max(0.0, rhs - d[i]));
      v.per_point.push_back({ts[i], d[i], rhs, {}});
    }
    v.holds = v.max_abs_residual <= v.tolerance;
    out.push_back(std::move(v));
  }

  auto curve = [&](double s) { return residual_relative(x, y, s, q).value; };
  auto rate  = [&](double s) { return x.hazard(s) + y.hazard(s); };
  double const floor = detail::residual_floor(x, y);

  {
    auto v = log_derivative_check(curve, rate, grid, floor, false);
    bool ordered = true;
    for (std::size_t i = 0; i < ts.size(); ++i)
    {
      ordered = ordered && hx[i] >= hy[i] - slack;
    }
    bool const dfr      = detail::nonincreasing(hx, slack) || detail::nonincreasing(hy, slack);
    bool const observed = ordered && dfr;
    v.hypothesis_met    = !declared.hazard_order_with_dfr || observed;
    v.note = std::string(ordered ? "h_X >= h_Y" : "h_X < h_Y somewhere") +
             (dfr ? ", DFR member present" : ", no DFR member");
    out.push_back(std::move(v));
  }

  {
    auto v = log_derivative_check(curve, rate, grid, floor, true);
    std::vector<double> scaled;
    for (std::size_t i = 0; i < ts.size(); ++i)
    {
      scaled.push_back(d[i] * x.survival(ts[i]) * y.survival(ts[i]));
    }
    auto [lo, hi] = std::minmax_element(scaled.begin(), scaled.end());
    double const spread = *hi - *lo;
    v.note = "spread of d_r*S_X*S_Y on grid: " + format_real(spread);
    out.push_back(std::move(v));
  }
  return out;
}

/**
 * Strict increase of d_r across consecutive grid points, reported together
 * with whether the premises (strictly decreasing densities, h_Y > h_X) hold.
 */
inline DynamicVerdict monotonicity_check(DistributionModel const &x, DistributionModel const &y,
                                         TimeGrid const &grid, QuadratureSpec const &q = {})
{
  DynamicVerdict v;
  v.kind      = VerdictKind::monotonicity;
  v.name      = "relative_strictly_increasing";
  v.tolerance = 10.0 * q.abs_tol;

  auto const &ts       = grid.points();
  bool        premises = true;
  double      prev_d   = 0.0;
  double      prev_fx = 0.0, prev_fy = 0.0;
  for (std::size_t i = 0; i < ts.size(); ++i)
  {
    double const t  = ts[i];
    double const d  = residual_relative(x, y, t, q).value;
    double const fx = x.pdf(t);
    double const fy = y.pdf(t);
    premises        = premises && y.hazard(t) > x.hazard(t);
    if (i > 0)
    {
      premises = premises && fx < prev_fx && fy < prev_fy;
      double const step  = d - prev_d;
      v.max_abs_residual = std::max(v.max_abs_residual, std::max(0.0, v.tolerance - step));
      v.per_point.push_back({t, d, prev_d, {}});
    }
    prev_d  = d;
    prev_fx = fx;
    prev_fy = fy;
  }
  v.holds          = v.max_abs_residual == 0.0;
  v.hypothesis_met = premises;
  v.note = premises ? "decreasing densities with h_Y > h_X on grid" : "premises not observed";
  return v;
}

/// True iff max - min of the values is at most `tol`.
inline bool constancy_detector(std::vector<std::pair<double, double>> const &values, double tol)
{
  if (values.size() < 3)
  {
    throw InsufficientGrid("constancy needs at least three points");
  }
  auto [lo, hi] = std::minmax_element(values.begin(), values.end(),
                                      [](auto const &a, auto const &b) { return a.second < b.second; });
  return hi->second - lo->second <= tol;
}

/// (t, measure(t)) over the grid.
template <typename Measure>
std::vector<std::pair<double, double>> series(TimeGrid const &grid, Measure const &measure)
{
  std::vector<std::pair<double, double>> out;
  for (double t : grid.points())
  {
    out.emplace_back(t, measure(t));
  }
  return out;
}

// Orderings -------------------------------------------------------------------

struct OrderingPoint
{
  double t;
  Order  hr, rh, rex, red, pex, ped;
};

/**
 * Pointwise orderings of X relative to Y. `less` means "X is smaller":
 * hr: h_X >= h_Y; rh: lambda_X >= lambda_Y; rex: J_t(X) <= J_t(Y);
 * red: J_r(f_t|g_t) <= J_r(g_t|f_t); pex, ped: the past analogues.
 */
struct DynamicOrderingVerdict
{
  Order                      hr  = Order::equal;
  Order                      rh  = Order::equal;
  Order                      rex = Order::equal;
  Order                      red = Order::equal;
  Order                      pex = Order::equal;
  Order                      ped = Order::equal;
  bool                       rex_red_equivalent = true;
  bool                       pex_ped_equivalent = true;
  std::vector<OrderingPoint> per_point;
};

namespace detail {

inline Order aggregate(std::vector<Order> const &v)
{
  bool any_less = false, any_greater = false;
  for (Order o : v)
  {
    any_less    = any_less || o == Order::less;
    any_greater = any_greater || o == Order::greater;
  }
  if (any_less && any_greater)
  {
    return Order::crossing;
  }
  return any_less ? Order::less : (any_greater ? Order::greater : Order::equal);
}

inline bool mirrored(Order a, Order b)
{
  return a == Order::equal || b == Order::equal || b == reverse(a);
}

}  // namespace detail

inline DynamicOrderingVerdict dynamic_orderings(DistributionModel const &x, DistributionModel const &y,
                                                TimeGrid const &grid, QuadratureSpec const &q = {})
{
  double const tie = 100.0 * q.abs_tol;
  DynamicOrderingVerdict out;
  std::vector<Order>     hr, rh, rex, red, pex, ped;
  for (double t : grid.points())
  {
    OrderingPoint p{t};
    p.hr  = compare_values(y.hazard(t), x.hazard(t), tie);
    p.rh  = compare_values(y.reversed_hazard(t), x.reversed_hazard(t), tie);
    p.rex = compare_values(residual_extropy(x, t, q).value, residual_extropy(y, t, q).value, tie);
    p.red = compare_values(residual_divergence(x, y, t, q).value,
                           residual_divergence(y, x, t, q).value, tie);
    p.pex = compare_values(past_extropy(x, t, q).value, past_extropy(y, t, q).value, tie);
    p.ped = compare_values(past_divergence(x, y, t, q).value, past_divergence(y, x, t, q).value, tie);
    out.rex_red_equivalent = out.rex_red_equivalent && detail::mirrored(p.rex, p.red);
    out.pex_ped_equivalent = out.pex_ped_equivalent && detail::mirrored(p.pex, p.ped);
    hr.push_back(p.hr);
    rh.push_back(p.rh);
    rex.push_back(p.rex);
    red.push_back(p.red);
    pex.push_back(p.pex);
    ped.push_back(p.ped);
    out.per_point.push_back(p);
  }
  out.hr  = detail::aggregate(hr);
  out.rh  = detail::aggregate(rh);
  out.rex = detail::aggregate(rex);
  out.red = detail::aggregate(red);
  out.pex = detail::aggregate(pex);
  out.ped = detail::aggregate(ped);
  return out;
}

// Global decompositions -----------------------------------------------------------

/// Form of the J(f|g) decomposition's last term.
enum class DecompositionForm
{
  /// (S_Y - S_X)(S_X J_t(X) - F J(_tX)), what the algebra yields
  weighted,
  /// (S_Y - S_X)(J_t(X) - J(_tX)); does not hold in general, kept for comparison
  unweighted,
};

/**
 * Splits the static measures at t into past and residual parts:
 *  (a) xiJ = F G xiJ_p + S_X S_Y xiJ_r
 *  (b) J(f|g) = S_X S_Y J_r(f_t|g_t) + F G J_p(f_t|g_t) + (S_Y - S_X)(S_X J_t(X) - F J(_tX))
 *  (c) d = F G d_p + S_X S_Y d_r + (S_X - S_Y)(S_Y J_t(Y) + F J(_tX) - S_X J_t(X) - G J(_tY))
 */
inline DynamicVerdict global_decompositions(DistributionModel const &x, DistributionModel const &y,
                                            double t, QuadratureSpec const &q = {},
                                            DecompositionForm form = DecompositionForm::weighted)
{
  double const F  = x.cdf(t);
  double const G  = y.cdf(t);
  double const SX = x.survival(t);
  double const SY = y.survival(t);

  double const xi   = extropy_inaccuracy(x, y, q).value;
  double const xi_p = past_inaccuracy(x, y, t, q).value;
  double const xi_r = residual_inaccuracy(x, y, t, q).value;
  double const jfg  = extropy_divergence(x, y, q).value;
  double const jr   = residual_divergence(x, y, t, q).value;
  double const jp   = past_divergence(x, y, t, q).value;
  double const d    = relative_extropy(x, y, q).value;
  double const dr   = residual_relative(x, y, t, q).value;
  double const dp   = past_relative(x, y, t, q).value;
  double const jtx  = residual_extropy(x, t, q).value;
  double const jty  = residual_extropy(y, t, q).value;
  double const jpx  = past_extropy(x, t, q).value;
  double const jpy  = past_extropy(y, t, q).value;

  double const tail_b = form == DecompositionForm::weighted ? (SY - SX) * (SX * jtx - F * jpx)
                                                           : (SY - SX) * (jtx - jpx);

  DynamicVerdict v;
  v.kind      = VerdictKind::decomposition;
  v.name      = form == DecompositionForm::weighted ? "global_decompositions"
                                                   : "global_decompositions_unweighted";
  v.tolerance = 10.0 * q.abs_tol;
  v.per_point.push_back({t, xi, F * G * xi_p + SX * SY * xi_r, "inaccuracy"});
  v.per_point.push_back({t, jfg, SX * SY * jr + F * G * jp + tail_b, "divergence"});
  v.per_point.push_back(
      {t, d, F * G * dp + SX * SY * dr + (SX - SY) * (SY * jty + F * jpx - SX * jtx - G * jpy),
       "relative"});
  detail::finish_identity(v);
  return v;
}

}  // namespace extropy
