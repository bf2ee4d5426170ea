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

// Hilbert-Schmidt volumes of the regions of the GHZ-diagonal simplex, their
// relative volumes and relative volume radii, and a seeded Monte-Carlo
// estimator of every relative volume.

#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "ghzpoly/classification.hpp"
#include "ghzpoly/common.hpp"
#include "ghzpoly/ghz_state.hpp"
#include "ghzpoly/mermin.hpp"
#include "ghzpoly/random.hpp"

namespace ghzpoly {

enum class VolumeFamily { Ghz, Genuine, BisepMinusFbi, Fbi, Mermin };

inline const char* to_string(VolumeFamily f) {
  switch (f) {
    case VolumeFamily::Ghz: return "ghz";
    case VolumeFamily::Genuine: return "genuine";
    case VolumeFamily::BisepMinusFbi: return "bisep_minus_fbi";
    case VolumeFamily::Fbi: return "fbi";
    case VolumeFamily::Mermin: return "mermin";
  }
  return "?";
}

inline VolumeFamily parse_volume_family(std::string_view s) {
  if (s == "ghz") return VolumeFamily::Ghz;
  if (s == "genuine") return VolumeFamily::Genuine;
  if (s == "bisep_minus_fbi" || s == "b_minus_f") return VolumeFamily::BisepMinusFbi;
  if (s == "fbi") return VolumeFamily::Fbi;
  if (s == "mermin") return VolumeFamily::Mermin;
  throw InvalidArgument("unknown volume family '" + std::string(s) +
                        "' (expected ghz, genuine, bisep_minus_fbi, fbi or mermin)");
}

namespace detail {

inline double log_factorial(double k) { return std::lgamma(k + 1.0); }

// Exact below 2^53 for the small factorials we evaluate directly.
inline double factorial(int k) {
  double f = 1.0;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

// Beyond this dimension factorial ratios go through lgamma.
inline constexpr double kDirectDimension = 32.0;

}  // namespace detail

/// Volume of the convex hull of a regular p-simplex of side `side` and a
/// q-dimensional body of volume `body_volume` in the orthogonal complement,
/// the two meeting at one point interior to both:
///
///   q! sqrt(p + 1) / (p + q)! * (side / sqrt 2)^p * body_volume.
inline double hull_volume(int p, double side, int q, double body_volume) {
  if (p < 1 || q < 0 || !(side > 0.0) || !(body_volume > 0.0)) {
    throw InvalidArgument("hull_volume: need p >= 1, q >= 0, side > 0, body volume > 0");
  }
  const double scale = std::pow(side / std::sqrt(2.0), p);
  if (p + q <= 20) {
    return detail::factorial(q) * std::sqrt(p + 1.0) / detail::factorial(p + q) * scale *
           body_volume;
  }
  const double log_v = detail::log_factorial(q) + 0.5 * std::log(p + 1.0) -
                       detail::log_factorial(p + q) + p * std::log(side / std::sqrt(2.0)) +
                       std::log(body_volume);
  return std::exp(log_v);
}

/// log of the relative volume vol(X) / vol(GHZ_n); -inf for empty regions.
inline double log_rel_vol_exact(VolumeFamily f, int n);

/// vol(X) / vol(GHZ_n).
inline double rel_vol_exact(VolumeFamily f, int n) {
  check_qubits(n, 2, kMaxClosedFormQubits, "rel_vol_exact");
  const double d = std::ldexp(1.0, n);
  const bool direct = d <= detail::kDirectDimension;
  auto genuine = [&] { return std::ldexp(d, 1 - static_cast<int>(d)); };
  auto fbi = [&] {
    if (!direct) return std::exp(log_rel_vol_exact(VolumeFamily::Fbi, n));
    const double half = d / 2.0;
    double r = 1.0;
    for (int k = 1; k <= static_cast<int>(half); ++k) r *= k / half;
    return r;
  };
  switch (f) {
    case VolumeFamily::Ghz: return 1.0;
    case VolumeFamily::Genuine: return genuine();
    case VolumeFamily::Fbi: return fbi();
    case VolumeFamily::BisepMinusFbi: return 1.0 - genuine() - fbi();
    case VolumeFamily::Mermin: {
      const double keep = 1.0 - mermin_threshold(n);
      if (!direct) return std::exp(log_rel_vol_exact(f, n));
      double r = 0.5;
      for (int k = 0; k < static_cast<int>(d) - 1; ++k) r *= keep;
      return r;
    }
  }
  return 0.0;
}

inline double log_rel_vol_exact(VolumeFamily f, int n) {
  check_qubits(n, 2, kMaxClosedFormQubits, "log_rel_vol_exact");
  const double d = std::ldexp(1.0, n);
  const double half = d / 2.0;
  const double log_genuine = std::log(d) - (d - 1.0) * std::log(2.0);
  const double log_fbi = detail::log_factorial(half) - half * std::log(half);
  switch (f) {
    case VolumeFamily::Ghz: return 0.0;
    case VolumeFamily::Genuine: return log_genuine;
    case VolumeFamily::Fbi: return log_fbi;
    case VolumeFamily::BisepMinusFbi: {
      if (d <= detail::kDirectDimension) {
        const double r = rel_vol_exact(f, n);
        return r > 0.0 ? std::log(r) : -std::numeric_limits<double>::infinity();
      }
      return std::log1p(-(std::exp(log_genuine) + std::exp(log_fbi)));
    }
    case VolumeFamily::Mermin: {
      const double nu = mermin_threshold(n);
      if (nu >= 1.0) return -std::numeric_limits<double>::infinity();
      return (d - 1.0) * std::log1p(-nu) - std::log(2.0);
    }
  }
  return 0.0;
}

/// log vol(X) in HS units; vol(GHZ_n) = sqrt(d) / (d - 1)!.
inline double log_vol_exact(VolumeFamily f, int n) {
  check_qubits(n, 2, kMaxClosedFormQubits, "log_vol_exact");
  const double d = std::ldexp(1.0, n);
  const double log_ghz = 0.5 * std::log(d) - detail::log_factorial(d - 1.0);
  return log_ghz + log_rel_vol_exact(f, n);
}

/// Absolute HS volume. Underflows to 0 once (d - 1)! leaves double range;
/// use log_vol_exact there.
inline double vol_exact(VolumeFamily f, int n) {
  check_qubits(n, 2, kMaxClosedFormQubits, "vol_exact");
  const double d = std::ldexp(1.0, n);
  if (d <= detail::kDirectDimension) {
    const double ghz = std::sqrt(d) / detail::factorial(static_cast<int>(d) - 1);
    return ghz * rel_vol_exact(f, n);
  }
  return std::exp(log_vol_exact(f, n));
}

/// Relative volume radius (vol(X) / vol(GHZ_n))^{1/(d-1)}.
inline double rvr(VolumeFamily f, int n) {
  if (f == VolumeFamily::Ghz) {
    throw InvalidArgument("rvr: defined for genuine, bisep_minus_fbi, fbi and mermin");
  }
  check_qubits(n, 2, kMaxClosedFormQubits, "rvr");
  const double d = std::ldexp(1.0, n);
  const double lr = log_rel_vol_exact(f, n);
  if (std::isinf(lr)) return 0.0;
  return std::exp(lr / (d - 1.0));
}

struct VolumeReport {
  int n = 0;
  VolumeFamily family = VolumeFamily::Ghz;
  double exact = 0.0;           // relative volume
  double absolute = 0.0;        // HS volume
  std::optional<double> mc_estimate;
  std::optional<double> mc_stderr;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  std::string generator = kGeneratorName;

  /// Monte-Carlo estimate within 4 standard errors of the closed form.
  bool mc_consistent() const {
    if (!mc_estimate) return true;
    return std::abs(*mc_estimate - exact) <= 4.0 * *mc_stderr;
  }
};

inline VolumeReport exact_volume_report(VolumeFamily f, int n) {
  VolumeReport r;
  r.n = n;
  r.family = f;
  r.exact = rel_vol_exact(f, n);
  r.absolute = vol_exact(f, n);
  return r;
}

inline constexpr std::uint64_t kMonteCarloChunk = 65536;
inline constexpr std::uint64_t kMinMonteCarloSamples = 10000;

/// Whether a state lies in the region; shared by the estimator and tests.
inline bool in_region(VolumeFamily f, const GhzDiagonalState& rho) {
  switch (f) {
    case VolumeFamily::Ghz: return true;
    case VolumeFamily::Genuine: return !is_biseparable(rho).biseparable;
    case VolumeFamily::Fbi: return is_fully_biseparable(rho).fully_biseparable;
    case VolumeFamily::BisepMinusFbi:
      return is_biseparable(rho).biseparable &&
             !is_fully_biseparable(rho).fully_biseparable;
    case VolumeFamily::Mermin: return violates_mermin(rho).violates;
  }
  return false;
}

/// Hit fraction of `samples` uniform points of the simplex. Chunk c of the
/// sample range draws from SplitMix64::substream(seed, c), and chunk hit
/// counts are summed as integers, so the result does not depend on
/// `threads`.
inline VolumeReport mc_relative_volume(VolumeFamily f, int n, std::uint64_t samples,
                                       std::uint64_t seed, unsigned threads = 1) {
  check_qubits(n, 2, kMaxMonteCarloQubits, "mc_relative_volume");
  if (f == VolumeFamily::Ghz) {
    throw InvalidArgument("mc_relative_volume: family must be genuine, bisep_minus_fbi, fbi or mermin");
  }
  if (samples < kMinMonteCarloSamples) {
    throw InvalidArgument("mc_relative_volume: need at least " +
                          std::to_string(kMinMonteCarloSamples) + " samples");
  }
  VolumeReport report = exact_volume_report(f, n);
  report.samples = samples;
  report.seed = seed;

  const std::uint64_t chunks = (samples + kMonteCarloChunk - 1) / kMonteCarloChunk;
  std::vector<std::uint64_t> hits(chunks, 0);
  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    std::vector<double> p(dimension(n));
    for (std::uint64_t c = next++; c < chunks; c = next++) {
      SplitMix64 rng = SplitMix64::substream(seed, c);
      const std::uint64_t begin = c * kMonteCarloChunk;
      const std::uint64_t count = std::min(kMonteCarloChunk, samples - begin);
      std::uint64_t h = 0;
      for (std::uint64_t s = 0; s < count; ++s) {
        sample_simplex(rng, p);
        if (in_region(f, GhzDiagonalState::from_probabilities(n, p))) ++h;
      }
      hits[c] = h;
    }
  };
  const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(chunks)));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  std::uint64_t total = 0;
  for (auto h : hits) total += h;
  const double est = static_cast<double>(total) / static_cast<double>(samples);
  report.mc_estimate = est;
  report.mc_stderr = std::sqrt(est * (1.0 - est) / static_cast<double>(samples));
  return report;
}

/// Sample count so that the binomial standard error at the exact value is at
/// most max(0.002, exact / 20), floored at `minimum`.
inline std::uint64_t recommended_samples(VolumeFamily f, int n, std::uint64_t minimum) {
  const double p = rel_vol_exact(f, n);
  const double target = std::max(0.002, p / 20.0);
  const double need = std::ceil(p * (1.0 - p) / (target * target));
  return std::max<std::uint64_t>(minimum, static_cast<std::uint64_t>(need));
}

}  // namespace ghzpoly
