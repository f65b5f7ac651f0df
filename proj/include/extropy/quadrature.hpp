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

#include "extropy/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <sstream>
#include <vector>

namespace extropy {

/**
 * Tolerances and limits shared by every integral in the library.
 *
 * An integral over an unbounded range is truncated at the first point T on a
 * doubling ladder where the caller-supplied tail bound drops below
 * `tail_fraction * abs_tol`.
 */
struct QuadratureSpec
{
  double abs_tol           = 1e-9;
  double rel_tol           = 1e-8;
  int    max_subdivisions  = 4000;
  double tail_fraction     = 1e-2;
  double denominator_floor = 1e-12;

  void validate() const
  {
    if (!(abs_tol > 0) || !(rel_tol > 0) || max_subdivisions < 1 || !(denominator_floor > 0) ||
        !(tail_fraction > 0) || tail_fraction > 1)
    {
      throw InvalidParameter("QuadratureSpec requires abs_tol>0, rel_tol>0, "
                             "max_subdivisions>=1, denominator_floor>0, tail_fraction in (0,1]");
    }
  }
};

struct QuadratureResult
{
  double value        = 0.0;
  double error        = 0.0;
  int    subdivisions = 0;
  /// Upper limit actually used when the range was unbounded; infinity otherwise.
  double truncation = std::numeric_limits<double>::infinity();
};

namespace detail {

struct KronrodSegment
{
  double a;
  double b;
  double value;
  double error;

  bool operator<(KronrodSegment const &other) const
  {
    return error < other.error;
  }
};

// 7-point Gauss / 15-point Kronrod pair, nodes on [0, 1] of the half interval.
inline constexpr double kronrod_nodes[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr double kronrod_weights[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr double gauss_weights[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <typename Function>
KronrodSegment kronrod15(Function const &f, double a, double b)
{
  constexpr double epmach = std::numeric_limits<double>::epsilon();
  constexpr double uflow  = std::numeric_limits<double>::min();

  double const centre = 0.5 * (a + b);
  double const half   = 0.5 * (b - a);
  double const dhalf  = std::abs(half);

  double fv1[7];
  double fv2[7];

  double const fc     = f(centre);
  double       resg   = fc * gauss_weights[3];
  double       resk   = fc * kronrod_weights[7];
  double       resabs = std::abs(resk);

  for (int j = 0; j < 3; ++j)
  {
    int const    jtw  = 2 * j + 1;
    double const absc = half * kronrod_nodes[jtw];
    double const f1   = f(centre - absc);
    double const f2   = f(centre + absc);
    fv1[jtw]          = f1;
    fv2[jtw]          = f2;
    resg += gauss_weights[j] * (f1 + f2);
    resk += kronrod_weights[jtw] * (f1 + f2);
    resabs += kronrod_weights[jtw] * (std::abs(f1) + std::abs(f2));
  }
  for (int j = 0; j < 4; ++j)
  {
    int const    jtwm1 = 2 * j;
    double const absc  = half * kronrod_nodes[jtwm1];
    double const f1    = f(centre - absc);
    double const f2    = f(centre + absc);
    fv1[jtwm1]         = f1;
    fv2[jtwm1]         = f2;
    resk += kronrod_weights[jtwm1] * (f1 + f2);
    resabs += kronrod_weights[jtwm1] * (std::abs(f1) + std::abs(f2));
  }

  double const reskh  = resk * 0.5;
  double       resasc = kronrod_weights[7] * std::abs(fc - reskh);
  for (int j = 0; j < 7; ++j)
  {
    resasc += kronrod_weights[j] * (std::abs(fv1[j] - reskh) + std::abs(fv2[j] - reskh));
  }

  double const result = resk * half;
  resabs *= dhalf;
  resasc *= dhalf;
  double abserr = std::abs((resk - resg) * half);
  if (resasc != 0.0 && abserr != 0.0)
  {
    abserr = resasc * std::min(1.0, std::pow(200.0 * abserr / resasc, 1.5));
  }
  if (resabs > uflow / (50.0 * epmach))
  {
    abserr = std::max(epmach * 50.0 * resabs, abserr);
  }
  if (!std::isfinite(result) || !std::isfinite(abserr))
  {
    std::ostringstream msg;
    msg << "non-finite integrand on [" << a << ", " << b << "]";
    throw QuadratureFailure(msg.str());
  }
  return {a, b, result, abserr};
}

}  // namespace detail

/**
 * Global adaptive Gauss-Kronrod integration over the finite pieces
 * [p0,p1], [p1,p2], ... given by `breakpoints` (sorted, at least two points).
 *
 * The segment with the largest error estimate is bisected until the summed
 * error is below max(abs_tol, rel_tol*|I|). Exhausting `max_subdivisions`
 * throws QuadratureFailure.
 */
template <typename Function>
QuadratureResult integrate(Function const &f, std::vector<double> breakpoints, QuadratureSpec const &q)
{
  q.validate();
  std::sort(breakpoints.begin(), breakpoints.end());
  breakpoints.erase(std::unique(breakpoints.begin(), breakpoints.end()), breakpoints.end());
  if (breakpoints.size() < 2)
  {
    return {};
  }
  for (double p : breakpoints)
  {
    if (!std::isfinite(p))
    {
      throw InvalidParameter("integration breakpoints must be finite");
    }
  }

  std::priority_queue<detail::KronrodSegment> segments;
  double total = 0.0;
  double error = 0.0;
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i)
  {
    auto seg = detail::kronrod15(f, breakpoints[i], breakpoints[i + 1]);
    total += seg.value;
    error += seg.error;
    segments.push(seg);
  }

  int subdivisions = static_cast<int>(segments.size());
  auto converged   = [&] { return error <= std::max(q.abs_tol, q.rel_tol * std::abs(total)); };

  while (!converged())
  {
    if (subdivisions >= q.max_subdivisions)
    {
      std::ostringstream msg;
      msg << "error estimate " << error << " above tolerance after " << subdivisions
          << " subdivisions on [" << breakpoints.front() << ", " << breakpoints.back() << "]";
      throw QuadratureFailure(msg.str());
    }
    auto worst = segments.top();
    segments.pop();
    double const mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b))
    {
      // Interval cannot be split further in double precision.
      std::ostringstream msg;
      msg << "interval [" << worst.a << ", " << worst.b << "] exhausted machine precision";
      throw QuadratureFailure(msg.str());
    }
    auto left  = detail::kronrod15(f, worst.a, mid);
    auto right = detail::kronrod15(f, mid, worst.b);
    total += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    segments.push(left);
    segments.push(right);
    ++subdivisions;

    if (subdivisions % 64 == 0)
    {
      // Refresh the running sums to keep cancellation drift out of the test.
      auto copy = segments;
      total     = 0.0;
      error     = 0.0;
      while (!copy.empty())
      {
        total += copy.top().value;
        error += copy.top().error;
        copy.pop();
      }
    }
  }

  return {total, error, subdivisions, std::numeric_limits<double>::infinity()};
}

template <typename Function>
QuadratureResult integrate(Function const &f, double a, double b, QuadratureSpec const &q)
{
  if (a == b)
  {
    return {};
  }
  if (a > b)
  {
    auto r  = integrate(f, std::vector<double>{b, a}, q);
    r.value = -r.value;
    return r;
  }
  return integrate(f, std::vector<double>{a, b}, q);
}

/**
 * Smallest T = from + span*2^k (k >= 0) with tail_bound(T) <= tail_fraction*abs_tol.
 * `tail_bound` must be nonincreasing beyond `from` for the result to be meaningful.
 */
template <typename TailBound>
double truncation_point(TailBound const &tail_bound, double from, double span, QuadratureSpec const &q)
{
  double const target = q.tail_fraction * q.abs_tol;
  double       step   = span > 0 ? span : 1.0;
  for (int k = 0; k < 1100; ++k)
  {
    double const t = from + step;
    if (!std::isfinite(t))
    {
      break;
    }
    if (tail_bound(t) <= target)
    {
      return t;
    }
    step *= 2.0;
  }
  throw QuadratureFailure("no finite truncation point satisfies the tail tolerance");
}

}  // namespace extropy
