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

// GHZ-diagonal states in probability coordinates and as d x d matrices.
//
// A GHZ-diagonal state is a probability vector p over the 2^n indices.
// In the computational basis its density matrix X(a, z) has the diagonal a
// and a single off-diagonal entry z_i at (i, ~i) for each index, with
//
//   a_i = (p_i + p_~i) / 2,   z_i = (-1)^{i(1)} (p_i - p_~i) / 2.

#pragma once

#include <cmath>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "ghzpoly/bit_index.hpp"
#include "ghzpoly/common.hpp"

namespace ghzpoly {

using RealMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

class GhzDiagonalState {
 public:
  /// Validates and, when |sum - 1| <= kRenormTol, renormalizes.
  static GhzDiagonalState from_probabilities(int n, std::vector<double> p) {
    if (n < 1 || n > kMaxQubits) {
      throw InvalidArgument("GhzDiagonalState: qubit count " + std::to_string(n) +
                            " outside [1, " + std::to_string(kMaxQubits) + "]");
    }
    if (p.size() != dimension(n)) {
      throw InvalidArgument("GhzDiagonalState: expected " +
                            std::to_string(dimension(n)) +
                            " probabilities for n=" + std::to_string(n) +
                            ", got " + std::to_string(p.size()));
    }
    double sum = 0.0;
    for (std::size_t k = 0; k < p.size(); ++k) {
      if (!std::isfinite(p[k]) || p[k] < 0.0) {
        throw InvalidArgument("GhzDiagonalState: entry " + std::to_string(k) +
                              " (index " +
                              BitIndex(n, static_cast<std::uint32_t>(k)).to_string() +
                              ") is negative or not finite");
      }
      sum += p[k];
    }
    if (std::abs(sum - 1.0) > kRenormTol) {
      throw InvalidArgument("GhzDiagonalState: probabilities sum to " +
                            std::to_string(sum) + ", off by more than 1e-6");
    }
    if (sum != 1.0) {
      for (double& x : p) x /= sum;
    }
    return GhzDiagonalState(n, std::move(p));
  }

  static GhzDiagonalState uniform(int n) {
    return from_probabilities(n, std::vector<double>(dimension(n), 1.0 / dimension(n)));
  }

  /// The vertex v_i: a point mass on index i.
  static GhzDiagonalState vertex(const BitIndex& i) {
    std::vector<double> p(dimension(i.size()), 0.0);
    p[i.value()] = 1.0;
    return GhzDiagonalState(i.size(), std::move(p));
  }

  int qubits() const { return n_; }
  std::size_t dim() const { return p_.size(); }
  std::span<const double> probabilities() const { return p_; }
  const std::vector<double>& vector() const { return p_; }
  double operator[](std::size_t k) const { return p_[k]; }
  double prob(const BitIndex& i) const { return p_.at(i.value()); }

  friend bool operator==(const GhzDiagonalState&, const GhzDiagonalState&) = default;

 private:
  GhzDiagonalState(int n, std::vector<double> p) : n_(n), p_(std::move(p)) {}

  int n_;
  std::vector<double> p_;
};

/// The a and z vectors of X(a, z), both indexed by value.
struct AzCoefficients {
  std::vector<double> a;
  std::vector<double> z;
};

inline AzCoefficients az_from_prob(const GhzDiagonalState& rho) {
  const std::size_t d = rho.dim();
  const std::size_t mask = d - 1;
  AzCoefficients out{std::vector<double>(d), std::vector<double>(d)};
  for (std::size_t i = 0; i < d; ++i) {
    const std::size_t ibar = ~i & mask;
    const double sign = (i & (d >> 1)) ? -1.0 : 1.0;
    out.a[i] = 0.5 * (rho[i] + rho[ibar]);
    out.z[i] = sign * 0.5 * (rho[i] - rho[ibar]);
  }
  return out;
}

struct DensityMatrix {
  int n = 0;
  RealMatrix entries;
};

/// (|i> + (-1)^{i(1)} |~i>) / sqrt(2) as a real vector of length d.
inline Eigen::VectorXd ghz_basis_vector(const BitIndex& i) {
  check_qubits(i.size(), 1, kMaxDenseQubits, "ghz_basis_vector");
  Eigen::VectorXd v = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(dimension(i.size())));
  const double h = 1.0 / std::sqrt(2.0);
  v(i.value()) += h;
  v(flip_all(i).value()) += i.leading_sign() * h;
  return v;
}

inline DensityMatrix density_from_prob(const GhzDiagonalState& rho) {
  check_qubits(rho.qubits(), 1, kMaxDenseQubits, "density_from_prob");
  const auto az = az_from_prob(rho);
  const auto d = static_cast<Eigen::Index>(rho.dim());
  DensityMatrix m{rho.qubits(), RealMatrix::Zero(d, d)};
  for (Eigen::Index i = 0; i < d; ++i) {
    const Eigen::Index ibar = (d - 1) ^ i;
    m.entries(i, i) = az.a[static_cast<std::size_t>(i)];
    m.entries(i, ibar) = az.z[static_cast<std::size_t>(i)];
  }
  return m;
}

/// Inverse of density_from_prob: p_i = a_i + (-1)^{i(1)} z_i.
///
/// Rejects any matrix with an entry off the X pattern, a broken a_i = a_~i or
/// z_i = z_~i symmetry, or a resulting p that is not a distribution.
inline GhzDiagonalState prob_from_density(const DensityMatrix& m) {
  check_qubits(m.n, 1, kMaxDenseQubits, "prob_from_density");
  const auto d = static_cast<Eigen::Index>(dimension(m.n));
  if (m.entries.rows() != d || m.entries.cols() != d) {
    throw InvalidArgument("prob_from_density: matrix is not " + std::to_string(d) +
                          " x " + std::to_string(d));
  }
  auto where = [](Eigen::Index r, Eigen::Index c) {
    return "(" + std::to_string(r) + "," + std::to_string(c) + ")";
  };
  for (Eigen::Index r = 0; r < d; ++r) {
    for (Eigen::Index c = 0; c < d; ++c) {
      if (c == r || c == ((d - 1) ^ r)) continue;
      if (std::abs(m.entries(r, c)) > kNormTol) {
        throw NotGhzDiagonal(static_cast<std::size_t>(r), static_cast<std::size_t>(c),
                             "prob_from_density: nonzero entry at " + where(r, c));
      }
    }
  }
  std::vector<double> p(static_cast<std::size_t>(d));
  for (Eigen::Index i = 0; i < d; ++i) {
    const Eigen::Index ibar = (d - 1) ^ i;
    if (std::abs(m.entries(i, i) - m.entries(ibar, ibar)) > kNormTol) {
      throw NotGhzDiagonal(static_cast<std::size_t>(i), static_cast<std::size_t>(i),
                           "prob_from_density: a_i != a_~i at " + where(i, i));
    }
    if (std::abs(m.entries(i, ibar) - m.entries(ibar, i)) > kNormTol) {
      throw NotGhzDiagonal(static_cast<std::size_t>(i), static_cast<std::size_t>(ibar),
                           "prob_from_density: z_i != z_~i at " + where(i, ibar));
    }
    const double sign = (i & (d >> 1)) ? -1.0 : 1.0;
    double pi = m.entries(i, i) + sign * m.entries(i, ibar);
    if (pi < 0.0 && pi > -kNormTol) pi = 0.0;
    p[static_cast<std::size_t>(i)] = pi;
  }
  return GhzDiagonalState::from_probabilities(m.n, std::move(p));
}

/// Hilbert-Schmidt (Frobenius) distance between two matrices.
inline double hs_distance(const DensityMatrix& x, const DensityMatrix& y) {
  return (x.entries - y.entries).norm();
}

/// Hilbert-Schmidt distance in probability coordinates. The GHZ projectors
/// are orthonormal in the HS inner product, so this is exactly ||p - q||_2.
inline double hs_distance(const GhzDiagonalState& x, const GhzDiagonalState& y) {
  if (x.qubits() != y.qubits()) {
    throw InvalidArgument("hs_distance: qubit counts differ");
  }
  double s = 0.0;
  for (std::size_t k = 0; k < x.dim(); ++k) s += (x[k] - y[k]) * (x[k] - y[k]);
  return std::sqrt(s);
}

/// Convex combination sum_k w_k states_k. Weights must be nonnegative and
/// sum to one within kRenormTol.
inline GhzDiagonalState mix(std::span<const double> weights,
                            std::span<const GhzDiagonalState> states) {
  if (weights.size() != states.size() || states.empty()) {
    throw InvalidArgument("mix: need equally many weights and states");
  }
  const int n = states.front().qubits();
  std::vector<double> p(dimension(n), 0.0);
  for (std::size_t k = 0; k < states.size(); ++k) {
    if (states[k].qubits() != n) throw InvalidArgument("mix: qubit counts differ");
    for (std::size_t i = 0; i < p.size(); ++i) p[i] += weights[k] * states[k][i];
  }
  return GhzDiagonalState::from_probabilities(n, std::move(p));
}

}  // namespace ghzpoly
