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

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <vector>

#include "ghzpoly/volume.hpp"
#include "oracles.hpp"

namespace ghzpoly {
namespace {

double ghz_volume_gram(int n) {
  const auto d = static_cast<Eigen::Index>(dimension(n));
  return oracle::simplex_volume(oracle::Mat::Identity(d, d));
}

TEST(SplitMix64, ReferenceSequence) {
  SplitMix64 g(1234567);
  EXPECT_EQ(g(), 6457827717110365317ull);
  EXPECT_EQ(g(), 3203168211198807973ull);
  EXPECT_EQ(g(), 9817491932198370423ull);
}

TEST(SplitMix64, SubstreamsAreReproducibleAndDistinct) {
  auto a = SplitMix64::substream(7, 3);
  auto b = SplitMix64::substream(7, 3);
  auto c = SplitMix64::substream(7, 4);
  auto e = SplitMix64::substream(8, 3);
  const auto x = a();
  EXPECT_EQ(x, b());
  EXPECT_NE(x, c());
  EXPECT_NE(x, e());
}

TEST(Sampler, MarginalMeansAreOneOverD) {
  for (int n = 1; n <= 4; ++n) {
    const std::size_t d = dimension(n);
    SplitMix64 rng(99);
    std::vector<double> p(d), mean(d, 0.0);
    const int draws = 200000;
    for (int t = 0; t < draws; ++t) {
      sample_simplex(rng, p);
      EXPECT_NEAR(std::accumulate(p.begin(), p.end(), 0.0), 1.0, 1e-12);
      for (std::size_t k = 0; k < d; ++k) mean[k] += p[k];
    }
    // Var p_k = (d - 1) / (d^2 (d + 1)) for the flat Dirichlet.
    const double dd = static_cast<double>(d);
    const double se = std::sqrt((dd - 1.0) / (dd * dd * (dd + 1.0)) / draws);
    for (double m : mean) EXPECT_NEAR(m / draws, 1.0 / dd, 5.0 * se + 1e-15);
  }
}

TEST(HullVolume, RegularSimplex) {
  for (int n = 2; n <= 4; ++n) {
    const int d = static_cast<int>(dimension(n));
    const double want = std::sqrt(static_cast<double>(d)) / std::tgamma(d);
    EXPECT_NEAR(hull_volume(d - 1, std::sqrt(2.0), 0, 1.0), want, 1e-15 * want);
    EXPECT_NEAR(ghz_volume_gram(n), want, 1e-12 * want);
    EXPECT_NEAR(vol_exact(VolumeFamily::Ghz, n), want, 1e-14 * want);
  }
  EXPECT_NEAR(vol_exact(VolumeFamily::Ghz, 2), 1.0 / 3.0, 1e-15);
  // Convex hull volume from scipy's Qhull on the eight vertices.
  EXPECT_NEAR(vol_exact(VolumeFamily::Ghz, 3), 0.0005611958580845615, 1e-17);
  EXPECT_THROW(hull_volume(0, 1.0, 1, 1.0), InvalidArgument);
}

// F_n is the hull of the diagonal simplex (side 1) and the cube of side
// 2 sqrt(2) / d in the orthogonal complement.
TEST(HullVolume, ReproducesFbiVolume) {
  for (int n = 2; n <= 5; ++n) {
    const int d = static_cast<int>(dimension(n));
    const double side = 2.0 * std::sqrt(2.0) / d;
    const double cube = std::pow(side, d / 2);
    const double want = vol_exact(VolumeFamily::Fbi, n);
    EXPECT_NEAR(hull_volume(d / 2 - 1, 1.0, d / 2, cube), want, 1e-12 * want);
  }
  // Qhull volumes of the F_2 and F_3 vertex sets.
  EXPECT_NEAR(vol_exact(VolumeFamily::Fbi, 2), 0.16666666666666674, 1e-15);
  EXPECT_NEAR(vol_exact(VolumeFamily::Fbi, 3), 5.26121116954277e-05, 1e-17);
}

TEST(RelativeVolume, Values) {
  EXPECT_EQ(rel_vol_exact(VolumeFamily::Genuine, 2), 0.5);
  EXPECT_EQ(rel_vol_exact(VolumeFamily::Genuine, 3), 0.0625);
  EXPECT_EQ(rel_vol_exact(VolumeFamily::Fbi, 2), 0.5);
  EXPECT_EQ(rel_vol_exact(VolumeFamily::Fbi, 3), 0.09375);
  EXPECT_EQ(rel_vol_exact(VolumeFamily::BisepMinusFbi, 2), 0.0);
  EXPECT_EQ(rel_vol_exact(VolumeFamily::Mermin, 3), 0.00390625);
  // Qhull ratios for B_3, F_3 and the n = 3 Mermin region.
  EXPECT_NEAR(1.0 - rel_vol_exact(VolumeFamily::Genuine, 3), 0.9375000000000009, 1e-14);
  EXPECT_NEAR(rel_vol_exact(VolumeFamily::Fbi, 3), 0.0937500000000001, 1e-14);
  EXPECT_NEAR(rel_vol_exact(VolumeFamily::Mermin, 3), 0.0039062499999999987, 1e-15);
  const double mermin3 = std::pow(0.5, 7) * std::sqrt(8.0) / (2.0 * 5040.0);
  EXPECT_NEAR(vol_exact(VolumeFamily::Mermin, 3), mermin3, 1e-15 * mermin3);
}

// The genuinely entangled region is d corner simplices scaled by 1/2.
TEST(RelativeVolume, GenuineFromCornerSimplices) {
  for (int n = 2; n <= 4; ++n) {
    const auto d = static_cast<Eigen::Index>(dimension(n));
    double corners = 0.0;
    for (Eigen::Index i = 0; i < d; ++i) {
      oracle::Mat v(d, d);
      v.col(0) = oracle::Mat::Identity(d, d).col(i);
      Eigen::Index c = 1;
      for (Eigen::Index j = 0; j < d; ++j) {
        if (j == i) continue;
        v.col(c++) = 0.5 * (oracle::Mat::Identity(d, d).col(i) + oracle::Mat::Identity(d, d).col(j));
      }
      corners += oracle::simplex_volume(v);
    }
    EXPECT_NEAR(corners / ghz_volume_gram(n), rel_vol_exact(VolumeFamily::Genuine, n), 1e-10);
  }
}

TEST(RelativeVolume, TrisectionSumsToOne) {
  for (int n = 2; n <= kMaxClosedFormQubits; ++n) {
    const double s = rel_vol_exact(VolumeFamily::Genuine, n) +
                     rel_vol_exact(VolumeFamily::BisepMinusFbi, n) +
                     rel_vol_exact(VolumeFamily::Fbi, n);
    EXPECT_NEAR(s, 1.0, 1e-15) << "n=" << n;
  }
}

TEST(RelativeVolume, LogFormAgreesWithDirectProducts) {
  for (int n = 2; n <= 5; ++n) {
    for (auto f : {VolumeFamily::Genuine, VolumeFamily::Fbi, VolumeFamily::Mermin}) {
      const double r = rel_vol_exact(f, n);
      EXPECT_NEAR(std::exp(log_rel_vol_exact(f, n)), r, 1e-13 * r) << to_string(f);
    }
  }
  EXPECT_TRUE(std::isinf(log_rel_vol_exact(VolumeFamily::BisepMinusFbi, 2)));
  EXPECT_TRUE(std::isinf(log_rel_vol_exact(VolumeFamily::Mermin, 2)));
}

TEST(Rvr, Values) {
  EXPECT_NEAR(rvr(VolumeFamily::Genuine, 2), 0.5 * std::cbrt(4.0), 1e-15);
  EXPECT_EQ(rvr(VolumeFamily::BisepMinusFbi, 2), 0.0);
  EXPECT_THROW(rvr(VolumeFamily::Ghz, 3), InvalidArgument);
}

TEST(Rvr, Limits) {
  EXPECT_NEAR(rvr(VolumeFamily::Genuine, 20), 0.5, 0.02);
  EXPECT_NEAR(rvr(VolumeFamily::BisepMinusFbi, 20), 1.0, 0.02);
  EXPECT_NEAR(rvr(VolumeFamily::Fbi, 20), std::exp(-0.5), 0.02);
  EXPECT_NEAR(rvr(VolumeFamily::Genuine, 30), 0.5, 1e-8);
  EXPECT_NEAR(rvr(VolumeFamily::Fbi, 30), std::exp(-0.5), 1e-8);
  EXPECT_GT(rvr(VolumeFamily::Mermin, 30), 0.9999);
  for (int n = 6; n < kMaxClosedFormQubits; ++n) {
    EXPECT_GT(rvr(VolumeFamily::Genuine, n), rvr(VolumeFamily::Genuine, n + 1));
    EXPECT_GT(rvr(VolumeFamily::Fbi, n), rvr(VolumeFamily::Fbi, n + 1));
    EXPECT_LE(rvr(VolumeFamily::BisepMinusFbi, n), rvr(VolumeFamily::BisepMinusFbi, n + 1));
    EXPECT_GT(rvr(VolumeFamily::Genuine, n), 0.5);
    EXPECT_GT(rvr(VolumeFamily::Fbi, n), std::exp(-0.5));
  }
}

TEST(MonteCarlo, AgreesWithClosedForms) {
  for (auto [f, n] : std::vector<std::pair<VolumeFamily, int>>{{VolumeFamily::Genuine, 2},
                                                               {VolumeFamily::Fbi, 2},
                                                               {VolumeFamily::Genuine, 3},
                                                               {VolumeFamily::Fbi, 3},
                                                               {VolumeFamily::BisepMinusFbi, 3}}) {
    const auto r = mc_relative_volume(f, n, 200000, 2024);
    EXPECT_TRUE(r.mc_consistent()) << to_string(f) << " n=" << n << " est=" << *r.mc_estimate
                                   << " se=" << *r.mc_stderr;
  }
}

TEST(MonteCarlo, ThreadCountDoesNotChangeTheResult) {
  const auto a = mc_relative_volume(VolumeFamily::Fbi, 3, 300000, 5, 1);
  const auto b = mc_relative_volume(VolumeFamily::Fbi, 3, 300000, 5, 4);
  const auto c = mc_relative_volume(VolumeFamily::Fbi, 3, 300000, 5, 7);
  EXPECT_EQ(*a.mc_estimate, *b.mc_estimate);
  EXPECT_EQ(*a.mc_estimate, *c.mc_estimate);
  const auto other = mc_relative_volume(VolumeFamily::Fbi, 3, 300000, 6, 1);
  EXPECT_NE(*a.mc_estimate, *other.mc_estimate);
}

TEST(MonteCarlo, Validation) {
  EXPECT_THROW(mc_relative_volume(VolumeFamily::Fbi, 7, 100000, 1), UnsupportedSize);
  EXPECT_THROW(mc_relative_volume(VolumeFamily::Fbi, 3, 100, 1), InvalidArgument);
  EXPECT_THROW(mc_relative_volume(VolumeFamily::Ghz, 3, 100000, 1), InvalidArgument);
}

TEST(MonteCarlo, RegionsPartitionTheSimplex) {
  SplitMix64 rng(17);
  std::vector<double> p(8);
  for (int t = 0; t < 5000; ++t) {
    sample_simplex(rng, p);
    const auto rho = GhzDiagonalState::from_probabilities(3, p);
    const int hits = in_region(VolumeFamily::Genuine, rho) + in_region(VolumeFamily::BisepMinusFbi, rho) +
                     in_region(VolumeFamily::Fbi, rho);
    EXPECT_EQ(hits, 1);
    if (in_region(VolumeFamily::Mermin, rho)) {
      EXPECT_TRUE(in_region(VolumeFamily::Genuine, rho));
    }
  }
}

TEST(MonteCarlo, RecommendedSamples) {
  EXPECT_EQ(recommended_samples(VolumeFamily::Genuine, 2, 10), 400u);
  EXPECT_GE(recommended_samples(VolumeFamily::Mermin, 3, 1000000), 1000000u);
}

TEST(VolumeFamilies, Parse) {
  EXPECT_EQ(parse_volume_family("b_minus_f"), VolumeFamily::BisepMinusFbi);
  EXPECT_THROW(parse_volume_family("x"), InvalidArgument);
}

}  // namespace
}  // namespace ghzpoly
