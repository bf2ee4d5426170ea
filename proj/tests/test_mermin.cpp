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
#include <complex>
#include <random>
#include <vector>

#include <unsupported/Eigen/KroneckerProduct>

#include "ghzpoly/classification.hpp"
#include "ghzpoly/mermin.hpp"
#include "ghzpoly/polytope.hpp"
#include "oracles.hpp"

namespace ghzpoly {
namespace {

using CMat = Eigen::MatrixXcd;

// Sum over Pauli strings with an even number of Y factors, built with
// Eigen's Kronecker product module.
CMat mermin_oracle(int n) {
  using namespace std::complex_literals;
  CMat x(2, 2), y(2, 2);
  x << 0.0, 1.0, 1.0, 0.0;
  y << 0.0, -1i, 1i, 0.0;
  const Eigen::Index d = Eigen::Index{1} << n;
  CMat sum = CMat::Zero(d, d);
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    const int w = std::popcount(mask);
    if (w % 2) continue;
    CMat term = (mask & 1u) ? y : x;
    for (int k = 1; k < n; ++k) {
      const CMat f = ((mask >> k) & 1u) ? y : x;
      term = Eigen::kroneckerProduct(term, f).eval();
    }
    term *= (w / 2) % 2 ? -1.0 : 1.0;
    sum += term;
  }
  return sum;
}

TEST(MerminOperator, TwoQubits) {
  const auto op = build_mermin_operator(2);
  EXPECT_EQ(op.term_count, 2);
  EXPECT_NEAR(op.real_view(0, 3), 2.0, 1e-15);
  EXPECT_LT((op.matrix - mermin_oracle(2)).norm(), 1e-14);
}

TEST(MerminOperator, ThreeQubitEntries) {
  const auto op = build_mermin_operator(3);
  EXPECT_NEAR(op.real_view(0, 7), 4.0, 1e-15);
  for (Eigen::Index r = 0; r < 8; ++r) {
    for (Eigen::Index c = 0; c < 8; ++c) {
      if ((r == 0 && c == 7) || (r == 7 && c == 0)) continue;
      EXPECT_LT(std::abs(op.matrix(r, c)), 1e-12);
    }
  }
  EXPECT_NEAR(op.matrix.squaredNorm(), 32.0, 1e-12);
}

TEST(MerminOperator, StructureForAllSizes) {
  for (int n = 2; n <= 7; ++n) {
    const auto op = build_mermin_operator(n);
    const auto d = static_cast<Eigen::Index>(dimension(n));
    EXPECT_EQ(op.term_count, 1 << (n - 1));
    EXPECT_NEAR(op.matrix.squaredNorm(), std::ldexp(1.0, 2 * n - 1), 1e-9);
    EXPECT_NEAR(op.real_view(0, d - 1), std::ldexp(1.0, n - 1), 1e-12);
    EXPECT_LT((op.matrix - mermin_oracle(n)).norm(), 1e-9);
  }
  EXPECT_THROW(build_mermin_operator(9), UnsupportedSize);
}

TEST(MerminExpectation, ClosedFormMatchesTrace) {
  std::mt19937_64 gen(41);
  for (int n = 2; n <= 5; ++n) {
    const auto op = build_mermin_operator(n);
    for (int t = 0; t < 100; ++t) {
      const auto rho = GhzDiagonalState::from_probabilities(n, oracle::random_simplex(gen, dimension(n)));
      const double trace = (mermin_oracle(n) * oracle::mixture(n, rho.vector()).cast<std::complex<double>>()).trace().real();
      EXPECT_NEAR(mermin_expectation(rho), trace, 1e-10);
      EXPECT_NEAR(mermin_expectation_trace(op, rho), trace, 1e-10);
    }
  }
}

TEST(MerminExpectation, FourQubitExample) {
  std::vector<double> p(16, 0.0);
  p[0] = 0.7;
  p[15] = 0.1;
  p[5] = 0.2;
  const auto rho = GhzDiagonalState::from_probabilities(4, p);
  EXPECT_NEAR(mermin_expectation(rho), 4.8, 1e-14);
  EXPECT_NEAR(mermin_expectation_trace(build_mermin_operator(4), rho), 4.8, 1e-12);
}

TEST(MerminBound, Values) {
  EXPECT_EQ(mermin_bound(3), 2.0);
  EXPECT_EQ(mermin_bound(4), 4.0);
  EXPECT_EQ(mermin_threshold(3), 0.5);
  EXPECT_EQ(mermin_threshold(4), 0.5);
  EXPECT_EQ(mermin_threshold(5), 0.25);
  for (int n = 2; n <= 30; ++n) {
    const double d = std::ldexp(1.0, n);
    const double nu = n % 2 == 0 ? 2.0 / std::sqrt(d) : std::sqrt(2.0) / std::sqrt(d);
    const double mu = n % 2 == 0 ? std::pow(2.0, n / 2.0) : std::pow(2.0, (n - 1) / 2.0);
    EXPECT_NEAR(mermin_threshold(n), nu, 1e-15 * nu);
    EXPECT_NEAR(mermin_bound(n), mu, 1e-15 * mu);
    EXPECT_NEAR(mermin_threshold(n) * std::ldexp(1.0, n - 1), mermin_bound(n), 1e-12 * mu);
    if (n >= 5) {
      EXPECT_LT(mermin_threshold(n), 0.5);
    }
  }
}

TEST(MerminVerdict, PureGhzViolatesMaximally) {
  const auto v = violates_mermin(GhzDiagonalState::vertex(BitIndex::zeros(3)));
  EXPECT_TRUE(v.violates);
  EXPECT_EQ(v.expectation, 4.0);
  EXPECT_EQ(v.bound, 2.0);
  EXPECT_FALSE(v.boundary);
}

TEST(MerminVerdict, BiseparableNeverViolatesForThreeAndFourQubits) {
  std::mt19937_64 gen(42);
  for (int n = 3; n <= 4; ++n) {
    bool touched = false;
    for (const auto& v : extreme_points_bisep(n)) {
      const auto m = violates_mermin(v);
      EXPECT_FALSE(m.violates);
      touched = touched || m.boundary;
    }
    EXPECT_TRUE(touched);
    int tested = 0;
    while (tested < 2000) {
      const auto rho = GhzDiagonalState::from_probabilities(n, oracle::random_simplex(gen, dimension(n)));
      if (!is_biseparable(rho).biseparable) continue;
      ++tested;
      EXPECT_FALSE(violates_mermin(rho).violates);
    }
  }
}

TEST(MerminVerdict, FiveQubitBiseparableViolation) {
  std::vector<double> p(32, 0.5 / 30.0);
  p[0] = 0.5;
  p[31] = 0.0;
  const auto rho = GhzDiagonalState::from_probabilities(5, p);
  EXPECT_TRUE(is_biseparable(rho).biseparable);
  EXPECT_TRUE(violates_mermin(rho).violates);
}

TEST(HyperplanePoints, ThreeQubits) {
  const auto pts = mermin_hyperplane_points(3);
  ASSERT_EQ(pts.size(), 7u);
  for (const auto& w : pts) {
    if (w.edge_end == BitIndex::ones(3)) {
      std::vector<double> want(8, 0.0);
      want[0] = 0.75;
      want[7] = 0.25;
      EXPECT_EQ(w.point.vector(), want);
    } else {
      EXPECT_EQ(w.point, midpoint(BitIndex::zeros(3), w.edge_end));
    }
  }
}

TEST(HyperplanePoints, LieOnTheHyperplaneAndTheEdge) {
  for (int n = 3; n <= 10; ++n) {
    const double nu = mermin_threshold(n);
    for (const auto& w : mermin_hyperplane_points(n)) {
      const auto& p = w.point;
      EXPECT_NEAR(p[0] - p[p.dim() - 1], nu, 1e-15);
      EXPECT_NEAR(p[0] + p[w.edge_end.value()], 1.0, 1e-15);
      EXPECT_TRUE(violates_mermin(p).boundary);
    }
  }
}

TEST(MerminDistance, ClosedForm) {
  EXPECT_NEAR(dist_mermin_to_fbi(3), (0.5 - 0.25) / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(dist_mermin_to_fbi(3), 0.17677669529663687, 1e-15);
  EXPECT_NEAR(dist_mermin_to_fbi(4), (0.5 - 0.125) / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(dist_mermin_to_fbi(4), 0.26516504294495530, 1e-15);
}

// Projection of every F_n vertex onto H_M within the normalization plane.
TEST(MerminDistance, MatchesVertexProjection) {
  for (int n = 3; n <= 5; ++n) {
    const auto d = static_cast<Eigen::Index>(dimension(n));
    oracle::Mat a = oracle::Mat::Zero(2, d);
    a(0, 0) = 1.0;
    a(0, d - 1) = -1.0;
    a.row(1).setOnes();
    oracle::Vec b(2);
    b << mermin_threshold(n), 1.0;
    double best = 1e9;
    FbiVertexStream s(n);
    while (auto v = s.next()) {
      const oracle::Vec x = Eigen::Map<const oracle::Vec>(v->vector().data(), d);
      EXPECT_LE(x(0) - x(d - 1), mermin_threshold(n) + 1e-15);
      best = std::min(best, oracle::affine_distance(a, b, x));
    }
    EXPECT_NEAR(best, dist_mermin_to_fbi(n), 1e-8) << "n=" << n;
  }
}

TEST(MerminExpectation, BoundedByOneOnFbiVertices) {
  for (int n = 3; n <= 5; ++n) {
    const std::size_t half = dimension(n) / 2;
    std::size_t k = 0;
    FbiVertexStream s(n);
    while (auto v = s.next()) {
      const double e = mermin_expectation(*v);
      if (k++ < half) {
        EXPECT_EQ(e, 0.0);  // diagonal midpoints carry p_0 = p_1
      } else {
        EXPECT_NEAR(std::abs(e), 1.0, 1e-15);
      }
    }
  }
}

}  // namespace
}  // namespace ghzpoly
