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

// Closed-form vertex and facet descriptions of the four polytopes living in
// the simplex of n-qubit GHZ-diagonal states:
//
//   GHZ_n   the simplex itself: d vertices v_i, d facets p_i >= 0.
//   B_n     biseparable states: d(d-1)/2 edge midpoints m_{i,j}, 2d facets
//           p_i <= 1/2 and p_i >= 0.
//   F_n     fully biseparable states: d/2 midpoints m_{i,~i} plus 2^{d/2}
//           cube vertices, d^2/2 facets p_i + p_~i - p_j + p_~j >= 0.
//   M_n     Mermin-violating states: a simplex cut off at v_0 by
//           p_0 - p_1 >= nu_n.
//
// All coordinates are probability vectors; the constraint sum p = 1 is
// ambient and never listed as a facet. Distances are Hilbert-Schmidt, which
// in these coordinates is the Euclidean distance of p.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <vector>

#include "ghzpoly/bit_index.hpp"
#include "ghzpoly/common.hpp"
#include "ghzpoly/ghz_state.hpp"
#include "ghzpoly/mermin.hpp"

namespace ghzpoly {

enum class Family { Ghz, Bisep, Fbi, Mermin };

inline const char* to_string(Family f) {
  switch (f) {
    case Family::Ghz: return "ghz";
    case Family::Bisep: return "bisep";
    case Family::Fbi: return "fbi";
    case Family::Mermin: return "mermin";
  }
  return "?";
}

inline Family parse_family(std::string_view s) {
  if (s == "ghz") return Family::Ghz;
  if (s == "bisep") return Family::Bisep;
  if (s == "fbi") return Family::Fbi;
  if (s == "mermin") return Family::Mermin;
  throw InvalidArgument("unknown polytope family '" + std::string(s) +
                        "' (expected ghz, bisep, fbi or mermin)");
}

enum class Sense { LessEqual, GreaterEqual };

struct FacetTerm {
  std::uint32_t index;
  double coeff;
};

/// sum_k coeff_k p_{index_k}  (<= or >=)  offset.
struct AffineFacet {
  std::string label;
  std::vector<FacetTerm> terms;
  double offset = 0.0;
  Sense sense = Sense::GreaterEqual;

  double value(std::span<const double> p) const {
    double v = 0.0;
    for (const auto& t : terms) v += t.coeff * p[t.index];
    return v;
  }

  /// Nonnegative exactly when the inequality holds.
  double slack(std::span<const double> p) const {
    const double v = value(p);
    return sense == Sense::GreaterEqual ? v - offset : offset - v;
  }

  bool satisfied(std::span<const double> p, double tol = kClassTol) const {
    return slack(p) >= -tol;
  }
  bool tight(std::span<const double> p, double tol = kClassTol) const {
    return std::abs(slack(p)) <= tol;
  }

  /// Dense coefficient vector of length d.
  std::vector<double> dense(std::size_t d) const {
    std::vector<double> c(d, 0.0);
    for (const auto& t : terms) c[t.index] += t.coeff;
    return c;
  }
};

struct PolytopeSpec {
  Family family;
  int n;
  std::vector<GhzDiagonalState> vertices;
  std::vector<AffineFacet> facets;
};

/// The edge midpoint m_{i,j} = (v_i + v_j) / 2.
inline GhzDiagonalState midpoint(const BitIndex& i, const BitIndex& j) {
  if (i.size() != j.size() || i == j) {
    throw InvalidArgument("midpoint: need two distinct indices of equal length");
  }
  std::vector<double> p(dimension(i.size()), 0.0);
  p[i.value()] = 0.5;
  p[j.value()] = 0.5;
  return GhzDiagonalState::from_probabilities(i.size(), std::move(p));
}

// --- GHZ_n -----------------------------------------------------------------

inline std::vector<GhzDiagonalState> vertices_ghz(int n) {
  check_qubits(n, 1, kMaxDenseQubits, "vertices_ghz");
  std::vector<GhzDiagonalState> out;
  for (const auto& i : enumerate_indices(n)) out.push_back(GhzDiagonalState::vertex(i));
  return out;
}

inline std::vector<AffineFacet> facets_ghz(int n) {
  check_qubits(n, 1, kMaxQubits, "facets_ghz");
  std::vector<AffineFacet> out;
  for (const auto& i : enumerate_indices(n)) {
    out.push_back({"ghz[" + i.to_string() + "]", {{i.value(), 1.0}}, 0.0,
                   Sense::GreaterEqual});
  }
  return out;
}

// --- B_n -------------------------------------------------------------------

/// Streams the midpoints m_{i,j}, i < j, in lexicographic pair order.
class BisepVertexStream {
 public:
  explicit BisepVertexStream(int n) : n_(n), d_(dimension(n)) {
    check_qubits(n, 2, kMaxQubits, "BisepVertexStream");
  }

  std::optional<GhzDiagonalState> next() {
    if (i_ + 1 >= d_) return std::nullopt;
    auto m = midpoint(BitIndex(n_, static_cast<std::uint32_t>(i_)),
                      BitIndex(n_, static_cast<std::uint32_t>(j_)));
    if (++j_ == d_) {
      ++i_;
      j_ = i_ + 1;
    }
    return m;
  }

 private:
  int n_;
  std::size_t d_;
  std::size_t i_ = 0;
  std::size_t j_ = 1;
};

inline std::vector<GhzDiagonalState> extreme_points_bisep(int n) {
  check_qubits(n, 2, kMaxBisepVertexQubits, "extreme_points_bisep");
  std::vector<GhzDiagonalState> out;
  out.reserve(dimension(n) * (dimension(n) - 1) / 2);
  BisepVertexStream s(n);
  while (auto v = s.next()) out.push_back(std::move(*v));
  return out;
}

/// For each index i: B^i (p_i <= 1/2), then the zero facet (p_i >= 0).
inline std::vector<AffineFacet> facets_bisep(int n) {
  check_qubits(n, 2, kMaxQubits, "facets_bisep");
  std::vector<AffineFacet> out;
  out.reserve(2 * dimension(n));
  for (const auto& i : enumerate_indices(n)) {
    const auto s = i.to_string();
    out.push_back({"bisep[" + s + "]", {{i.value(), 1.0}}, 0.5, Sense::LessEqual});
    out.push_back({"zero[" + s + "]", {{i.value(), 1.0}}, 0.0, Sense::GreaterEqual});
  }
  return out;
}

// --- F_n -------------------------------------------------------------------

/// A choice sigma of exactly one index from each complementary pair {i, ~i}.
class IndexSelection {
 public:
  static IndexSelection from_members(int n, std::vector<BitIndex> members) {
    check_qubits(n, 1, kMaxQubits, "IndexSelection");
    const std::size_t half = dimension(n) / 2;
    if (members.size() != half) {
      throw InvalidArgument("IndexSelection: need " + std::to_string(half) +
                            " indices, got " + std::to_string(members.size()));
    }
    std::vector<bool> seen(half, false);
    for (const auto& m : members) {
      if (m.size() != n) throw InvalidArgument("IndexSelection: index length differs from n");
      const std::uint32_t rep = m.bit(1) == 0 ? m.value() : flip_all(m).value();
      if (seen[rep]) {
        throw InvalidArgument("IndexSelection: pair {" + m.to_string() + ", " +
                              flip_all(m).to_string() + "} chosen twice");
      }
      seen[rep] = true;
    }
    std::sort(members.begin(), members.end());
    return IndexSelection(n, std::move(members));
  }

  /// choices[k] picks the complement of representative k (the k-th index
  /// starting with 0) instead of the representative itself.
  static IndexSelection from_choices(int n, const std::vector<bool>& choices) {
    const std::size_t half = dimension(n) / 2;
    if (choices.size() != half) {
      throw InvalidArgument("IndexSelection: need one choice per pair");
    }
    std::vector<BitIndex> members;
    members.reserve(half);
    for (std::size_t k = 0; k < half; ++k) {
      const BitIndex rep(n, static_cast<std::uint32_t>(k));
      members.push_back(choices[k] ? flip_all(rep) : rep);
    }
    return from_members(n, std::move(members));
  }

  int qubits() const { return n_; }
  const std::vector<BitIndex>& members() const { return members_; }
  bool contains(const BitIndex& i) const {
    return std::binary_search(members_.begin(), members_.end(), i);
  }

 private:
  IndexSelection(int n, std::vector<BitIndex> members) : n_(n), members_(std::move(members)) {}

  int n_;
  std::vector<BitIndex> members_;
};

/// v_sigma = (2/d) sum_{i in sigma} v_i.
inline GhzDiagonalState cube_vertex(const IndexSelection& sigma) {
  const int n = sigma.qubits();
  std::vector<double> p(dimension(n), 0.0);
  const double w = 2.0 / static_cast<double>(dimension(n));
  for (const auto& i : sigma.members()) p[i.value()] = w;
  return GhzDiagonalState::from_probabilities(n, std::move(p));
}

/// Streams the extreme points of F_n: first the d/2 diagonal midpoints
/// m_{i,~i} by representative, then the 2^{d/2} cube vertices with the
/// choice of the first pair as the most significant digit.
class FbiVertexStream {
 public:
  explicit FbiVertexStream(int n) : n_(n), choices_(dimension(n) / 2, false) {
    check_qubits(n, 2, kMaxQubits, "FbiVertexStream");
  }

  std::optional<GhzDiagonalState> next() {
    const std::size_t half = choices_.size();
    if (diag_ < half) {
      const BitIndex rep(n_, static_cast<std::uint32_t>(diag_++));
      return midpoint(rep, flip_all(rep));
    }
    if (done_) return std::nullopt;
    auto v = cube_vertex(IndexSelection::from_choices(n_, choices_));
    // Odometer increment, last pair least significant.
    std::size_t k = half;
    while (k > 0) {
      --k;
      if (!choices_[k]) {
        choices_[k] = true;
        break;
      }
      choices_[k] = false;
      if (k == 0) done_ = true;
    }
    return v;
  }

 private:
  int n_;
  std::vector<bool> choices_;
  std::size_t diag_ = 0;
  bool done_ = false;
};

inline std::vector<GhzDiagonalState> extreme_points_fbi(int n) {
  check_qubits(n, 2, kMaxFbiVertexQubits, "extreme_points_fbi");
  std::vector<GhzDiagonalState> out;
  FbiVertexStream s(n);
  while (auto v = s.next()) out.push_back(std::move(*v));
  return out;
}

/// Visits the d^2/2 facets F^{i,j}: p_i + p_~i - p_j + p_~j >= 0 for each
/// pair {i, ~i} (by representative i) and each index j. When j is i or ~i
/// the terms collapse to 2 p_~j >= 0. A visitor returning bool stops the
/// walk by returning false.
template <class Visit>
void for_each_fbi_facet(int n, Visit&& visit) {
  check_qubits(n, 2, kMaxQubits, "for_each_fbi_facet");
  const std::uint32_t d = static_cast<std::uint32_t>(dimension(n));
  const std::uint32_t mask = d - 1;
  AffineFacet f;
  f.offset = 0.0;
  f.sense = Sense::GreaterEqual;
  for (std::uint32_t i = 0; i < d / 2; ++i) {
    const std::uint32_t ibar = ~i & mask;
    const auto is = BitIndex(n, i).to_string();
    for (std::uint32_t j = 0; j < d; ++j) {
      const std::uint32_t jbar = ~j & mask;
      f.label = "fbi[" + is + "," + BitIndex(n, j).to_string() + "]";
      if (j == i || j == ibar) {
        f.terms = {{jbar, 2.0}};
      } else {
        f.terms = {{i, 1.0}, {ibar, 1.0}, {j, -1.0}, {jbar, 1.0}};
      }
      if constexpr (std::is_same_v<std::invoke_result_t<Visit&, const AffineFacet&>, bool>) {
        if (!visit(f)) return;
      } else {
        visit(f);
      }
    }
  }
}

inline std::vector<AffineFacet> facets_fbi(int n) {
  check_qubits(n, 2, kMaxFbiFacetListQubits, "facets_fbi");
  std::vector<AffineFacet> out;
  out.reserve(dimension(n) * dimension(n) / 2);
  for_each_fbi_facet(n, [&](const AffineFacet& f) { out.push_back(f); });
  return out;
}

// --- M_n -------------------------------------------------------------------

/// v_0 followed by the hyperplane points w_i.
inline std::vector<GhzDiagonalState> vertices_mermin(int n) {
  check_qubits(n, 3, kMaxDenseQubits, "vertices_mermin");
  std::vector<GhzDiagonalState> out{GhzDiagonalState::vertex(BitIndex::zeros(n))};
  for (auto& w : mermin_hyperplane_points(n)) out.push_back(std::move(w.point));
  return out;
}

inline std::vector<AffineFacet> facets_mermin(int n) {
  check_qubits(n, 3, kMaxQubits, "facets_mermin");
  const std::uint32_t last = static_cast<std::uint32_t>(dimension(n) - 1);
  std::vector<AffineFacet> out{{"mermin", {{0, 1.0}, {last, -1.0}}, mermin_threshold(n),
                                Sense::GreaterEqual}};
  for (const auto& i : enumerate_indices(n)) {
    if (i.value() == 0) continue;
    out.push_back({"ghz[" + i.to_string() + "]", {{i.value(), 1.0}}, 0.0,
                   Sense::GreaterEqual});
  }
  return out;
}

// --- counts and assembly ---------------------------------------------------

/// Closed-form vertex count; nullopt when it does not fit in 64 bits.
inline std::optional<std::uint64_t> vertex_count(Family f, int n) {
  check_qubits(n, 1, kMaxClosedFormQubits, "vertex_count");
  const std::uint64_t d = std::uint64_t{1} << n;
  switch (f) {
    case Family::Ghz: return d;
    case Family::Bisep: return d * (d - 1) / 2;
    case Family::Fbi:
      if (d / 2 >= 64) return std::nullopt;
      return d / 2 + (std::uint64_t{1} << (d / 2));
    case Family::Mermin: return d;
  }
  return std::nullopt;
}

/// Decimal count, or "2^k+m" for F_n vertex counts beyond 64 bits.
inline std::string vertex_count_string(Family f, int n) {
  if (auto c = vertex_count(f, n)) return std::to_string(*c);
  const std::uint64_t half = std::uint64_t{1} << (n - 1);
  return "2^" + std::to_string(half) + "+" + std::to_string(half);
}

inline std::uint64_t facet_count(Family f, int n) {
  check_qubits(n, 1, kMaxClosedFormQubits, "facet_count");
  const std::uint64_t d = std::uint64_t{1} << n;
  switch (f) {
    case Family::Ghz: return d;
    case Family::Bisep: return 2 * d;
    case Family::Fbi: return d * d / 2;
    case Family::Mermin: return d;
  }
  return 0;
}

inline PolytopeSpec polytope(Family f, int n) {
  switch (f) {
    case Family::Ghz: return {f, n, vertices_ghz(n), facets_ghz(n)};
    case Family::Bisep: return {f, n, extreme_points_bisep(n), facets_bisep(n)};
    case Family::Fbi: return {f, n, extreme_points_fbi(n), facets_fbi(n)};
    case Family::Mermin: return {f, n, vertices_mermin(n), facets_mermin(n)};
  }
  throw InvalidArgument("polytope: unknown family");
}

// --- metric quantities -----------------------------------------------------

/// HS distance from a vertex v_i to the centre c^i of the opposite facet.
inline double simplex_height(int n) {
  check_qubits(n, 1, kMaxClosedFormQubits, "simplex_height");
  const double d = std::ldexp(1.0, n);
  return std::sqrt(d / (d - 1.0));
}

/// HS distance from rho to the hyperplane of `facet` inside the affine
/// plane sum p = 1: |c.p - b| / ||c - mean(c) 1||.
inline double facet_distance(const GhzDiagonalState& rho, const AffineFacet& facet) {
  const double d = static_cast<double>(rho.dim());
  double sum = 0.0;
  double sq = 0.0;
  for (const auto& t : facet.dense(rho.dim())) {
    sum += t;
    sq += t * t;
  }
  const double norm2 = sq - sum * sum / d;
  if (norm2 <= 0.0) {
    throw InvalidArgument("facet_distance: facet '" + facet.label +
                          "' is parallel to the normalization plane");
  }
  return std::abs(facet.slack(rho.probabilities())) / std::sqrt(norm2);
}

/// Smallest distance from rho to any facet of the family.
inline double min_facet_distance(const GhzDiagonalState& rho, Family f) {
  const int n = rho.qubits();
  double best = std::numeric_limits<double>::infinity();
  auto take = [&](const AffineFacet& facet) {
    best = std::min(best, facet_distance(rho, facet));
  };
  switch (f) {
    case Family::Ghz: for (const auto& x : facets_ghz(n)) take(x); break;
    case Family::Bisep: for (const auto& x : facets_bisep(n)) take(x); break;
    case Family::Fbi: for_each_fbi_facet(n, take); break;
    case Family::Mermin: for (const auto& x : facets_mermin(n)) take(x); break;
  }
  return best;
}

/// sqrt(1 / (d (d - 1))): the centre-to-facet distance of GHZ_n, shared by
/// B_n and F_n.
inline double inscribed_radius(int n) {
  check_qubits(n, 1, kMaxClosedFormQubits, "inscribed_radius");
  const double d = std::ldexp(1.0, n);
  return std::sqrt(1.0 / (d * (d - 1.0)));
}

struct Ball {
  GhzDiagonalState center;
  double radius;
};

/// Largest ball inside GHZ_n, B_n or F_n: centred at the maximally mixed
/// state with radius sqrt(1 / (d (d - 1))) in all three cases.
inline Ball inscribed_ball(Family f, int n) {
  if (f == Family::Mermin) {
    throw InvalidArgument("inscribed_ball: defined for ghz, bisep and fbi only");
  }
  check_qubits(n, f == Family::Ghz ? 1 : 2, kMaxQubits, "inscribed_ball");
  return {GhzDiagonalState::uniform(n), inscribed_radius(n)};
}

}  // namespace ghzpoly
