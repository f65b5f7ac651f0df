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
#include "extropy/families.hpp"
#include "extropy/kde.hpp"
#include "extropy/measures.hpp"
#include "extropy/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <atomic>
#include <cstdint>
#include <optional>
#include <thread>
#include <vector>

namespace extropy {

/// Compensated (Neumaier) running sum.
class NeumaierSum
{
public:
  void add(double v) noexcept
  {
    double const t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v))
    {
      comp_ += (sum_ - t) + v;
    }
    else
    {
      comp_ += (v - t) + sum_;
    }
    sum_ = t;
  }
  double value() const noexcept
  {
    return sum_ + comp_;
  }

private:
  double sum_  = 0.0;
  double comp_ = 0.0;
};

struct McStudyConfig
{
  FamilyParams          family_x = ExponentialParams{1.0};
  FamilyParams          family_y = ExponentialParams{2.0};
  std::size_t           n        = 100;
  std::size_t           reps     = 500;
  std::uint64_t         seed     = 20240531;
  std::optional<double> true_value;  ///< defaults to the quadrature value of d(f, g)
  EstimateOptions       estimate{};
  unsigned              threads = 0;  ///< 0 picks the hardware concurrency

  void validate() const
  {
    extropy::validate(family_x);
    extropy::validate(family_y);
    if (reps < 2)
    {
      throw InvalidParameter("a study needs reps >= 2");
    }
    if (n < 10)
    {
      throw InvalidParameter("a study needs n >= 10");
    }
  }
};

struct McStudyRow
{
  std::size_t n;
  double      mean_estimate;
  double      bias;
  double      mse;
  double      true_value;
  std::size_t reps;
  std::size_t failures;
};

/**
 * Replication r draws n values of X then n values of Y from
 * SeededSampler::substream(seed, r) and estimates d(f, g). Replications run
 * in parallel; results are stored by index and summed in index order, so the
 * row does not depend on the thread count. Failed replications are skipped
 * and counted; more than 1% failures aborts the study.
 */
inline McStudyRow mc_bias_mse(McStudyConfig const &cfg)
{
  cfg.validate();
  double const truth = cfg.true_value.value_or(
      relative_extropy(make_model(cfg.family_x), make_model(cfg.family_y)).value);

  std::vector<std::optional<double>> estimates(cfg.reps);
  std::atomic<std::size_t>           next{0};
  auto worker = [&] {
    for (std::size_t r = next++; r < cfg.reps; r = next++)
    {
      auto rng = SeededSampler::substream(cfg.seed, r);
      try
      {
        auto const x = sample(cfg.family_x, cfg.n, rng);
        auto const y = sample(cfg.family_y, cfg.n, rng);
        estimates[r] = estimate_relative_extropy(x, y, cfg.estimate);
      }
      catch (Error const &)
      {
        estimates[r].reset();
      }
    }
  };
  unsigned const hw      = std::max(1u, std::thread::hardware_concurrency());
  unsigned const threads = static_cast<unsigned>(
      std::min<std::size_t>(cfg.threads ? cfg.threads : hw, cfg.reps));
  {
    std::vector<std::jthread> pool;
    for (unsigned i = 1; i < threads; ++i)
    {
      pool.emplace_back(worker);
    }
    worker();
  }

  NeumaierSum sum, sq;
  std::size_t ok = 0;
  for (auto const &e : estimates)
  {
    if (e)
    {
      sum.add(*e);
      sq.add((*e - truth) * (*e - truth));
      ++ok;
    }
  }
  std::size_t const failures = cfg.reps - ok;
  if (failures * 100 > cfg.reps || ok == 0)
  {
    throw StudyFailure(std::to_string(failures) + " of " + std::to_string(cfg.reps) +
                       " replications failed at n=" + std::to_string(cfg.n));
  }
  double const mean = sum.value() / static_cast<double>(ok);
  return {cfg.n, mean, mean - truth, sq.value() / static_cast<double>(ok), truth, cfg.reps, failures};
}

/// One row per sample size, all sharing the configuration's seed.
inline std::vector<McStudyRow> mc_study(McStudyConfig cfg, std::vector<std::size_t> const &sizes)
{
  std::vector<McStudyRow> rows;
  for (std::size_t n : sizes)
  {
    cfg.n = n;
    rows.push_back(mc_bias_mse(cfg));
  }
  return rows;
}

}  // namespace extropy
