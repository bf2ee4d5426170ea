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

// The Mermin operator M_n and the part of the GHZ-diagonal simplex that
// violates the Mermin inequality.
//
// M_n is the signed sum, over subsets Y of the qubits with |Y| even, of
// (-1)^{|Y|/2} times the Pauli string with sigma_y on Y and sigma_x elsewhere.
// Its only nonzero entries are <0...0|M_n|1...1> = <1...1|M_n|0...0> = 2^{n-1},
// so on a GHZ-diagonal state <M_n> = 2^{n-1} (p_0 - p_1).

#pragma once

#include <bit>
#include <cmath>
#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "ghzpoly/bit_index.hpp"
#include "ghzpoly/common.hpp"
#include "ghzpoly/ghz_state.hpp"

namespace ghzpoly {

using ComplexMatrix = Eigen::Matrix<std::complex<double>, Eigen::Dynamic, Eigen::Dynamic,
                                    Eigen::RowMajor>;

namespace detail {

inline ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index r = 0; r < a.rows(); ++r) {
    for (Eigen::Index c = 0; c < a.cols(); ++c) {
      out.block(r * b.rows(), c * b.cols(), b.rows(), b.cols()) = a(r, c) * b;
    }
  }
  return out;
}

inline ComplexMatrix pauli_x() {
  ComplexMatrix m(2, 2);
  m << 0.0, 1.0, 1.0, 0.0;
  return m;
}

inline ComplexMatrix pauli_y() {
  using namespace std::complex_literals;
  ComplexMatrix m(2, 2);
  m << 0.0, -1i, 1i, 0.0;
  return m;
}

}  // namespace detail

struct MerminOperator {
  int n = 0;
  ComplexMatrix matrix;
  RealMatrix real_view;  // matrix with vanishing imaginary part dropped
  int term_count = 0;
};

/// Explicit d x d construction by Kronecker products. Subsets are visited in
/// increasing order of their value mask, so the summation order is fixed.
inline MerminOperator build_mermin_operator(int n) {
  check_qubits(n, 2, kMaxDenseQubits, "build_mermin_operator");
  const auto d = static_cast<Eigen::Index>(dimension(n));
  MerminOperator op{n, ComplexMatrix::Zero(d, d), RealMatrix(), 0};
  const ComplexMatrix x = detail::pauli_x();
  const ComplexMatrix y = detail::pauli_y();
  for (std::uint32_t ys = 0; ys < dimension(n); ++ys) {
    const int weight = std::popcount(ys);
    if (weight % 2 != 0) continue;
    ComplexMatrix term = ComplexMatrix::Identity(1, 1);
    for (int k = 1; k <= n; ++k) {
      const bool is_y = (ys >> (n - k)) & 1u;
      term = detail::kron(term, is_y ? y : x);
    }
    const double sign = (weight / 2) % 2 == 0 ? 1.0 : -1.0;
    op.matrix += sign * term;
    ++op.term_count;
  }
  if (op.matrix.imag().cwiseAbs().maxCoeff() > 1e-12) {
    throw InternalInvariant("build_mermin_operator: imaginary residue in M_n");
  }
  op.real_view = op.matrix.real();
  return op;
}

/// tr(M_n rho) from the explicit operator.
inline double mermin_expectation_trace(const MerminOperator& op, const GhzDiagonalState& rho) {
  if (op.n != rho.qubits()) {
    throw InvalidArgument("mermin_expectation_trace: operator and state sizes differ");
  }
  const DensityMatrix m = density_from_prob(rho);
  return (op.real_view * m.entries).trace();
}

/// Closed form 2^{n-1} (p_0 - p_1).
inline double mermin_expectation(const GhzDiagonalState& rho) {
  check_qubits(rho.qubits(), 2, kMaxQubits, "mermin_expectation");
  return std::ldexp(rho[0] - rho[rho.dim() - 1], rho.qubits() - 1);
}

/// Classical bound mu_n: 2^{n/2} (n even), 2^{(n-1)/2} (n odd).
inline double mermin_bound(int n) {
  check_qubits(n, 2, kMaxClosedFormQubits, "mermin_bound");
  return std::ldexp(1.0, n / 2);
}

/// nu_n: 2/sqrt(d) (n even), sqrt(2)/sqrt(d) (n odd). Always a power of two.
inline double mermin_threshold(int n) {
  check_qubits(n, 2, kMaxClosedFormQubits, "mermin_threshold");
  return n % 2 == 0 ? std::ldexp(1.0, 1 - n / 2) : std::ldexp(1.0, -(n - 1) / 2);
}

struct MerminVerdict {
  double expectation = 0.0;
  double bound = 0.0;
  double threshold = 0.0;
  bool violates = false;
  bool boundary = false;  // p_0 - p_1 within the boundary band of nu_n
};

inline MerminVerdict violates_mermin(const GhzDiagonalState& rho,
                                     double boundary_tol = kBoundaryTol) {
  MerminVerdict v;
  const int n = rho.qubits();
  v.expectation = mermin_expectation(rho);
  v.bound = mermin_bound(n);
  v.threshold = mermin_threshold(n);
  const double gap = rho[0] - rho[rho.dim() - 1];
  v.violates = gap > v.threshold + kClassTol;
  v.boundary = std::abs(gap - v.threshold) < boundary_tol;
  return v;
}

struct HyperplanePoint {
  BitIndex edge_end;  // the index i of the edge v_0 -- v_i
  GhzDiagonalState point;
};

/// Where H_M = {p_0 - p_1 = nu_n} meets the edges v_0 -- v_i, in index order.
inline std::vector<HyperplanePoint> mermin_hyperplane_points(int n) {
  check_qubits(n, 3, kMaxQubits, "mermin_hyperplane_points");
  const double nu = mermin_threshold(n);
  const std::size_t d = dimension(n);
  std::vector<HyperplanePoint> out;
  out.reserve(d - 1);
  for (std::size_t i = 1; i < d; ++i) {
    std::vector<double> p(d, 0.0);
    if (i == d - 1) {
      p[0] = 0.5 + 0.5 * nu;
      p[i] = 0.5 - 0.5 * nu;
    } else {
      p[0] = nu;
      p[i] = 1.0 - nu;
    }
    out.push_back({BitIndex(n, static_cast<std::uint32_t>(i)),
                   GhzDiagonalState::from_probabilities(n, std::move(p))});
  }
  return out;
}

/// HS distance from H_M to the fully biseparable polytope:
/// (nu_n - 2/d) / sqrt(2).
inline double dist_mermin_to_fbi(int n) {
  check_qubits(n, 3, kMaxClosedFormQubits, "dist_mermin_to_fbi");
  return (mermin_threshold(n) - std::ldexp(1.0, 1 - n)) / std::sqrt(2.0);
}

}  // namespace ghzpoly
