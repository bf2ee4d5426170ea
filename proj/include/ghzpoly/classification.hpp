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

// Membership tests for the nested regions F_n (fully biseparable) inside
// B_n (biseparable) inside the simplex of GHZ-diagonal states, together with
// a brute-force partial-transpose oracle over every bipartition.

#pragma once

#include <algorithm>
#include <limits>
#include <optional>
#include <utility>

#include <Eigen/Eigenvalues>

#include "ghzpoly/bit_index.hpp"
#include "ghzpoly/common.hpp"
#include "ghzpoly/ghz_state.hpp"

namespace ghzpoly {

struct BisepVerdict {
  bool biseparable = true;
  std::optional<BitIndex> witness;  // first index with p_i > 1/2
  double margin = 0.0;              // 1/2 - max_i p_i
};

struct FbiVerdict {
  bool fully_biseparable = true;
  std::optional<std::pair<BitIndex, BitIndex>> witness;  // (i, j): |z_j| > a_i
  double margin = 0.0;                                   // min a - max |z|
};

/// Biseparable iff p_i <= 1/2 for every index.
inline BisepVerdict is_biseparable(const GhzDiagonalState& rho) {
  BisepVerdict v;
  double max_p = 0.0;
  for (std::size_t i = 0; i < rho.dim(); ++i) {
    max_p = std::max(max_p, rho[i]);
    if (!v.witness && rho[i] > 0.5 + kClassTol) {
      v.witness = BitIndex(rho.qubits(), static_cast<std::uint32_t>(i));
    }
  }
  v.margin = 0.5 - max_p;
  v.biseparable = !v.witness.has_value();
  return v;
}

/// max{0, 2 max_i p_i - 1}.
inline double gm_concurrence(const GhzDiagonalState& rho) {
  const auto p = rho.probabilities();
  const double max_p = *std::max_element(p.begin(), p.end());
  return std::max(0.0, 2.0 * max_p - 1.0);
}

/// Fully biseparable iff |z_j| <= a_i for all pairs (i, j), i.e.
/// max |z| <= min a.
inline FbiVerdict is_fully_biseparable(const GhzDiagonalState& rho) {
  // A single qubit has no bipartition.
  check_qubits(rho.qubits(), 2, kMaxQubits, "is_fully_biseparable");
  const auto az = az_from_prob(rho);
  FbiVerdict v;
  const double min_a = *std::min_element(az.a.begin(), az.a.end());
  double max_z = 0.0;
  std::size_t arg_z = 0;
  for (std::size_t j = 0; j < az.z.size(); ++j) {
    if (std::abs(az.z[j]) > max_z) {
      max_z = std::abs(az.z[j]);
      arg_z = j;
    }
  }
  v.margin = min_a - max_z;
  v.fully_biseparable = v.margin >= -kClassTol;
  if (!v.fully_biseparable) {
    // Lexicographically first violating pair; i outer, j inner.
    const int n = rho.qubits();
    for (std::size_t i = 0; i < az.a.size() && !v.witness; ++i) {
      if (max_z <= az.a[i] + kClassTol) continue;
      for (std::size_t j = 0; j < az.z.size(); ++j) {
        if (std::abs(az.z[j]) > az.a[i] + kClassTol) {
          v.witness.emplace(BitIndex(n, static_cast<std::uint32_t>(i)),
                            BitIndex(n, static_cast<std::uint32_t>(j)));
          break;
        }
      }
    }
    if (!v.witness) {
      throw InternalInvariant("is_fully_biseparable: no witness for index " +
                              std::to_string(arg_z));
    }
  }
  return v;
}

/// Partial transpose over the subsystems in S:
/// ((r_S, r_T), (c_S, c_T)) -> ((c_S, r_T), (r_S, c_T)).
inline RealMatrix partial_transpose(const RealMatrix& m, const BipartitionMask& s) {
  const std::uint32_t sm = s.value_mask();
  const auto d = m.rows();
  RealMatrix out(d, d);
  for (Eigen::Index r = 0; r < d; ++r) {
    for (Eigen::Index c = 0; c < d; ++c) {
      const auto ru = static_cast<std::uint32_t>(r);
      const auto cu = static_cast<std::uint32_t>(c);
      const std::uint32_t src_r = (ru & ~sm) | (cu & sm);
      const std::uint32_t src_c = (cu & ~sm) | (ru & sm);
      out(r, c) = m(src_r, src_c);
    }
  }
  return out;
}

/// Smallest eigenvalue of the partial transpose of rho across S.
inline double min_pt_eigenvalue(const DensityMatrix& rho, const BipartitionMask& s) {
  if (s.qubits() != rho.n) {
    throw InvalidArgument("min_pt_eigenvalue: bipartition and state sizes differ");
  }
  const RealMatrix pt = partial_transpose(rho.entries, s);
  Eigen::SelfAdjointEigenSolver<RealMatrix> solver(pt, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw InternalInvariant("min_pt_eigenvalue: eigensolver did not converge");
  }
  return solver.eigenvalues().minCoeff();
}

inline bool is_ppt_across(const GhzDiagonalState& rho, const BipartitionMask& s) {
  check_qubits(rho.qubits(), 2, kMaxDenseQubits, "is_ppt_across");
  return min_pt_eigenvalue(density_from_prob(rho), s) >= -kPsdTol;
}

/// Brute-force oracle: PPT across every canonical bipartition.
inline bool is_ppt_all_bipartitions(const GhzDiagonalState& rho) {
  check_qubits(rho.qubits(), 2, kMaxDenseQubits, "is_ppt_all_bipartitions");
  const DensityMatrix m = density_from_prob(rho);
  for (const auto& s : enumerate_bipartitions(rho.qubits())) {
    if (min_pt_eigenvalue(m, s) < -kPsdTol) return false;
  }
  return true;
}

enum class Region { Genuine, BisepNotFbi, Fbi };

inline const char* to_string(Region r) {
  switch (r) {
    case Region::Genuine: return "genuine";
    case Region::BisepNotFbi: return "biseparable_not_fully";
    case Region::Fbi: return "fully_biseparable";
  }
  return "?";
}

struct ClassificationResult {
  bool is_biseparable = true;
  bool is_fully_biseparable = true;
  double gm_concurrence = 0.0;
  std::optional<BitIndex> bisep_witness;
  std::optional<std::pair<BitIndex, BitIndex>> fbi_witness;
  bool boundary = false;
  double bisep_margin = 0.0;
  double fbi_margin = 0.0;

  Region region() const {
    if (!is_biseparable) return Region::Genuine;
    return is_fully_biseparable ? Region::Fbi : Region::BisepNotFbi;
  }
};

/// `boundary_tol` sets the band around each threshold that raises `boundary`.
inline ClassificationResult classify(const GhzDiagonalState& rho,
                                     double boundary_tol = kBoundaryTol) {
  const auto b = is_biseparable(rho);
  const auto f = is_fully_biseparable(rho);
  ClassificationResult r;
  r.is_biseparable = b.biseparable;
  r.is_fully_biseparable = f.fully_biseparable;
  r.gm_concurrence = gm_concurrence(rho);
  r.bisep_witness = b.witness;
  r.fbi_witness = f.witness;
  r.bisep_margin = b.margin;
  r.fbi_margin = f.margin;
  r.boundary = std::abs(b.margin) < boundary_tol || std::abs(f.margin) < boundary_tol;
  if (r.is_fully_biseparable && !r.is_biseparable) {
    throw InternalInvariant("classify: fully biseparable but not biseparable");
  }
  return r;
}

}  // namespace ghzpoly
