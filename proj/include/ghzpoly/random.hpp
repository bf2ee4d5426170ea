// Copyright 2026 The ghzpoly Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cmath>
#include <cstdint>
#include <span>

namespace ghzpoly {

inline constexpr const char* kGeneratorName = "splitmix64";

/// The SplitMix64 output function (Steele, Lea and Flood).
constexpr std::uint64_t splitmix64_mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

/// SplitMix64 stream. Streams are split by deriving independent keys, so a
/// chunk of work can be replayed without touching any other chunk.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;
  static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ull;

  explicit SplitMix64(std::uint64_t key) : state_(key) {}

  /// Key of substream `stream` under a root seed.
  static SplitMix64 substream(std::uint64_t seed, std::uint64_t stream) {
    return SplitMix64(splitmix64_mix(seed ^ splitmix64_mix(stream + kGamma)));
  }

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~std::uint64_t{0}; }

  result_type operator()() {
    state_ += kGamma;
    return splitmix64_mix(state_);
  }

  /// Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

  /// Unit-rate exponential.
  double exponential() { return -std::log1p(-uniform()); }

 private:
  std::uint64_t state_;
};

/// Fills `out` with a point uniformly distributed on the probability simplex
/// (normalized unit exponentials, i.e. a flat Dirichlet draw).
inline void sample_simplex(SplitMix64& rng, std::span<double> out) {
  double sum = 0.0;
  for (double& x : out) {
    x = rng.exponential();
    sum += x;
  }
  for (double& x : out) x /= sum;
}

}  // namespace ghzpoly
