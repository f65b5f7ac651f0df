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

#include <cstdint>
#include <random>

namespace extropy {

/// SplitMix64 finalizer; used to derive well-separated engine seeds.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept
{
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/**
 * Reproducible uniform source: std::mt19937_64 seeded with splitmix64(seed),
 * uniforms formed from the top 53 bits of each output. Both pieces are fully
 * specified by the standard and this header, so streams are bit-identical
 * across platforms and standard libraries.
 *
 * Independent substreams for replication r come from `substream(seed, r)`.
 */
class SeededSampler
{
public:
  explicit SeededSampler(std::uint64_t seed)
    : seed_(seed)
    , engine_(splitmix64(seed))
  {}

  static SeededSampler substream(std::uint64_t seed, std::uint64_t index)
  {
    return SeededSampler(splitmix64(seed ^ splitmix64(index + 0x632be59bd9b4e019ULL)));
  }

  std::uint64_t seed() const noexcept
  {
    return seed_;
  }

  /// Uniform on [0, 1).
  double uniform()
  {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  /// Uniform on (0, 1).
  double open_uniform()
  {
    double u = 0.0;
    while (u == 0.0)
    {
      u = uniform();
    }
    return u;
  }

private:
  std::uint64_t   seed_;
  std::mt19937_64 engine_;
};

}  // namespace extropy
