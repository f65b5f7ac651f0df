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
#include "extropy/quadrature.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <string>
#include <vector>

namespace extropy {

using RealFunction = std::function<double(double)>;

struct Support
{
  double lo = 0.0;
  double hi = std::numeric_limits<double>::infinity();

  bool bounded_above() const
  {
    return std::isfinite(hi);
  }
  bool contains(double x) const
  {
    return x >= lo && x <= hi;
  }
};

/**
 * A univariate lifetime distribution described by its evaluators.
 *
 * All evaluators must be pure: models are copied freely and evaluated from
 * several threads. `atom_at_lo` is a point mass at `support.lo`; the density
 * describes only the absolutely continuous part.
 */
struct DistributionModel
{
  std::string  name;
  RealFunction pdf;
  RealFunction cdf;
  RealFunction survival;
  RealFunction hazard;
  RealFunction reversed_hazard;
  /// Inverse cdf on (0,1); may be empty for models that are never sampled.
  RealFunction quantile;
  Support      support;
  double       atom_at_lo = 0.0;
};

/// Outcome of `check_model`. `mass` is the integral of the pdf plus the atom.
struct ModelCheck
{
  double mass                 = 0.0;
  double max_survival_defect  = 0.0;
  double max_hazard_defect    = 0.0;
  double max_reversed_defect  = 0.0;
  bool   cdf_monotone         = true;
  bool   pdf_nonnegative      = true;
};

/**
 * Evaluates the model invariants on `points` (plus the total mass by
 * quadrature). Defects are absolute differences; hazard identities are only
 * checked where the relevant denominator exceeds the floor.
 */
inline ModelCheck check_model(DistributionModel const &d, std::vector<double> const &points,
                              QuadratureSpec const &q = {})
{
  ModelCheck out;
  double     previous_cdf = -1.0;
  for (double x : points)
  {
    double const f  = d.pdf(x);
    double const F  = d.cdf(x);
    double const S  = d.survival(x);
    out.pdf_nonnegative = out.pdf_nonnegative && f >= 0.0;
    out.cdf_monotone    = out.cdf_monotone && F >= previous_cdf;
    previous_cdf        = F;
    out.max_survival_defect = std::max(out.max_survival_defect, std::abs(S - (1.0 - F)));
    if (S > q.denominator_floor)
    {
      out.max_hazard_defect = std::max(out.max_hazard_defect, std::abs(d.hazard(x) * S - f));
    }
    if (F > q.denominator_floor)
    {
      out.max_reversed_defect =
          std::max(out.max_reversed_defect, std::abs(d.reversed_hazard(x) * F - f));
    }
  }

  double hi = d.support.hi;
  if (!d.support.bounded_above())
  {
    double const span = 1.0;
    hi = truncation_point([&](double t) { return d.survival(t); }, std::max(d.support.lo, 0.0),
                          span, q);
  }
  out.mass = integrate(d.pdf, d.support.lo, hi, q).value + d.atom_at_lo;
  return out;
}

}  // namespace extropy
