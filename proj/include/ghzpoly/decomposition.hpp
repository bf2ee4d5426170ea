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

// Separability certificates for extreme points of B_n and F_n.
//
// An edge midpoint m_{i,j} is separable across S|T where S is the set of
// positions on which i and j agree. A cube vertex v_sigma averages midpoints
// m_{i, i^S} or m_{i, i^T} (i with the bits of S, resp. T, flipped), since
// exactly one of those two indices lies in sigma. Each certificate records a
// positive partial transpose across its bipartition, checked numerically;
// no product-state decomposition is produced.

#pragma once

#include <algorithm>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ghzpoly/bit_index.hpp"
#include "ghzpoly/classification.hpp"
#include "ghzpoly/common.hpp"
#include "ghzpoly/ghz_state.hpp"
#include "ghzpoly/polytope.hpp"

namespace ghzpoly {

enum class CertificateKind { Midpoint, Diagonal, CubeVertex };

inline const char* to_string(CertificateKind k) {
  switch (k) {
    case CertificateKind::Midpoint: return "midpoint";
    case CertificateKind::Diagonal: return "diagonal";
    case CertificateKind::CubeVertex: return "cube-vertex";
  }
  return "?";
}

struct CertificateComponent {
  double weight;
  BitIndex first;
  BitIndex second;
  GhzDiagonalState state;                    // m_{first, second}
  std::optional<BipartitionMask> bipartition;  // nullopt: diagonal, any cut
  double min_pt_eigenvalue;                  // worst case over checked cuts
};

struct SeparabilityCertificate {
  GhzDiagonalState state;
  CertificateKind kind;
  std::optional<BipartitionMask> bipartition;
  std::vector<CertificateComponent> components;

  /// Every component PPT within kPsdTol and the weighted sum reproduces the
  /// state within kNormTol.
  bool verified() const {
    double wsum = 0.0;
    std::vector<double> acc(state.dim(), 0.0);
    for (const auto& c : components) {
      if (!(c.weight > 0.0) || c.min_pt_eigenvalue < -kPsdTol) return false;
      wsum += c.weight;
      for (std::size_t k = 0; k < acc.size(); ++k) acc[k] += c.weight * c.state[k];
    }
    if (std::abs(wsum - 1.0) > kNormTol) return false;
    for (std::size_t k = 0; k < acc.size(); ++k) {
      if (std::abs(acc[k] - state[k]) > kNormTol) return false;
    }
    return true;
  }
};

/// S = {k : i(k) = j(k)}; nullopt when S is empty, i.e. j = ~i and the
/// midpoint is a diagonal state.
inline std::optional<BipartitionMask> midpoint_bipartition(const BitIndex& i,
                                                           const BitIndex& j) {
  if (i.size() != j.size()) {
    throw InvalidArgument("midpoint_bipartition: indices differ in length");
  }
  if (i == j) {
    throw InvalidArgument("midpoint_bipartition: indices must differ, got " +
                          i.to_string() + " twice");
  }
  const std::uint32_t full = (std::uint32_t{1} << i.size()) - 1;
  const std::uint32_t agree = ~(i.value() ^ j.value()) & full;
  if (agree == 0) return std::nullopt;
  return BipartitionMask::from_value_mask(i.size(), agree);
}

namespace detail {

inline CertificateComponent certified_midpoint(double weight, const BitIndex& i,
                                               const BitIndex& j,
                                               std::optional<BipartitionMask> cut) {
  check_qubits(i.size(), 2, kMaxDenseQubits, "certify");
  GhzDiagonalState m = midpoint(i, j);
  const DensityMatrix dm = density_from_prob(m);
  double worst = std::numeric_limits<double>::infinity();
  if (cut) {
    worst = min_pt_eigenvalue(dm, *cut);
  } else {
    for (const auto& s : enumerate_bipartitions(i.size())) {
      worst = std::min(worst, min_pt_eigenvalue(dm, s));
    }
  }
  return {weight, i, j, std::move(m), cut, worst};
}

}  // namespace detail

/// Certificate for m_{i,j}: PPT across midpoint_bipartition(i, j), or across
/// every bipartition when j = ~i.
inline SeparabilityCertificate certify_midpoint(const BitIndex& i, const BitIndex& j) {
  auto cut = midpoint_bipartition(i, j);
  auto comp = detail::certified_midpoint(1.0, i, j, cut);
  GhzDiagonalState state = comp.state;
  return {std::move(state), cut ? CertificateKind::Midpoint : CertificateKind::Diagonal, cut,
          {std::move(comp)}};
}

/// v_sigma as the uniform average of d/4 midpoints, each separable across S|T.
///
/// sigma is walked in lexicographic order; each unpaired i is paired with
/// i^S when that lies in sigma, else with i^T.
inline SeparabilityCertificate cube_vertex_decomposition(const IndexSelection& sigma,
                                                         const BipartitionMask& s) {
  const int n = sigma.qubits();
  if (s.qubits() != n) {
    throw InvalidArgument("cube_vertex_decomposition: bipartition over " +
                          std::to_string(s.qubits()) + " qubits, selection over " +
                          std::to_string(n));
  }
  check_qubits(n, 2, kMaxDenseQubits, "cube_vertex_decomposition");
  const auto& members = sigma.members();
  const BipartitionMask t = s.complement();
  std::vector<bool> used(members.size(), false);
  auto position = [&](const BitIndex& x) -> std::optional<std::size_t> {
    auto it = std::lower_bound(members.begin(), members.end(), x);
    if (it == members.end() || *it != x) return std::nullopt;
    return static_cast<std::size_t>(it - members.begin());
  };

  const double weight = 4.0 / static_cast<double>(dimension(n));
  SeparabilityCertificate cert{cube_vertex(sigma), CertificateKind::CubeVertex, s, {}};
  for (std::size_t k = 0; k < members.size(); ++k) {
    if (used[k]) continue;
    const BitIndex& i = members[k];
    std::optional<std::size_t> partner;
    for (const auto& side : {s, t}) {
      auto pos = position(flip_subset(i, side));
      if (pos && !used[*pos]) {
        partner = pos;
        break;
      }
    }
    if (!partner) {
      throw InternalInvariant("cube_vertex_decomposition: no partner for " + i.to_string() +
                              " across " + s.to_string());
    }
    used[k] = used[*partner] = true;
    const BitIndex& j = members[*partner];
    auto cut = midpoint_bipartition(i, j);
    if (!cut || *cut != s) {
      throw InternalInvariant("cube_vertex_decomposition: pair (" + i.to_string() + ", " +
                              j.to_string() + ") is not split by " + s.to_string());
    }
    cert.components.push_back(detail::certified_midpoint(weight, i, j, cut));
  }
  return cert;
}

}  // namespace ghzpoly
