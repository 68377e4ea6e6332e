// Copyright 2026 ftcomp authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FTCOMP_RNG_HPP_
#define FTCOMP_RNG_HPP_

#include <cmath>
#include <cstdint>

namespace ftcomp
{

/// splitmix64 step. Used for seeding and for deriving per-component seeds.
inline std::uint64_t splitmix64(std::uint64_t & state)
{
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

/// Seeded PRNG (xoshiro256++) with uniform and Gaussian draws.
///
/// The standard library distributions are implementation-defined, so seeded
/// experiments and replay files use this generator to keep every output
/// byte-identical across platforms and toolchains.
class Rng
{
public:
  explicit Rng(std::uint64_t seed)
  {
    std::uint64_t sm = seed;
    for (auto & word : state_) {
      word = splitmix64(sm);
    }
  }

  std::uint64_t next_u64()
  {
    const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  /// Uniform double in [0, 1).
  double uniform01()
  {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Uniform double in [lo, hi).
  double uniform(double lo, double hi)
  {
    return lo + (hi - lo) * uniform01();
  }

  /// Gaussian draw via Box-Muller. The paired deviate is cached, so a single
  /// stream of calls consumes two uniforms per two normals.
  double normal(double mean = 0.0, double stddev = 1.0)
  {
    if (has_spare_) {
      has_spare_ = false;
      return mean + stddev * spare_;
    }
    const double u1 = 1.0 - uniform01();  // (0, 1], keeps log() finite
    const double u2 = uniform01();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * M_PI * u2;
    spare_ = radius * std::sin(angle);
    has_spare_ = true;
    return mean + stddev * radius * std::cos(angle);
  }

private:
  static std::uint64_t rotl(std::uint64_t x, int k)
  {
    return (x << k) | (x >> (64 - k));
  }

  std::uint64_t state_[4] = {};
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace ftcomp

#endif  // FTCOMP_RNG_HPP_
