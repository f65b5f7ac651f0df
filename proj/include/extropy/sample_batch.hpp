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
#include <span>
#include <vector>

namespace extropy {

/// Observed values, kept sorted. At least two finite values.
class SampleBatch
{
public:
  explicit SampleBatch(std::vector<double> values)
    : values_(std::move(values))
  {
    if (values_.size() < 2)
    {
      throw InvalidParameter("a sample needs at least two observations");
    }
    for (double v : values_)
    {
      if (!std::isfinite(v))
      {
        throw InvalidParameter("sample values must be finite");
      }
    }
    std::sort(values_.begin(), values_.end());
  }

  std::span<double const> values() const noexcept
  {
    return values_;
  }
  std::size_t size() const noexcept
  {
    return values_.size();
  }
  double min() const noexcept
  {
    return values_.front();
  }
  double max() const noexcept
  {
    return values_.back();
  }

  double mean() const
  {
    double s = 0.0;
    for (double v : values_)
    {
      s += v;
    }
    return s / static_cast<double>(values_.size());
  }

  /// Sample standard deviation (n - 1 denominator).
  double stddev() const
  {
    double const m  = mean();
    double       ss = 0.0;
    for (double v : values_)
    {
      ss += (v - m) * (v - m);
    }
    return std::sqrt(ss / static_cast<double>(values_.size() - 1));
  }

  /// Linear interpolation of the order statistics at (n-1)p.
  double quantile(double p) const
  {
    double const h  = (static_cast<double>(values_.size()) - 1.0) * std::clamp(p, 0.0, 1.0);
    auto const   lo = static_cast<std::size_t>(std::floor(h));
    auto const   hi = std::min(lo + 1, values_.size() - 1);
    return values_[lo] + (h - static_cast<double>(lo)) * (values_[hi] - values_[lo]);
  }

  SampleBatch shifted(double c) const
  {
    std::vector<double> v(values_);
    for (double &x : v)
    {
      x += c;
    }
    return SampleBatch(std::move(v));
  }

  SampleBatch scaled(double c) const
  {
    std::vector<double> v(values_);
    for (double &x : v)
    {
      x *= c;
    }
    return SampleBatch(std::move(v));
  }

private:
  std::vector<double> values_;
};

}  // namespace extropy
