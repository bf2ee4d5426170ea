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

// Index algebra for n-bit strings.
//
// Positions are 1-based with position 1 the leftmost character, so the
// string "100" has bit 1 set. Internally an index is its binary value;
// position k lives in value bit (n - k). Lexicographic order of strings
// therefore coincides with numeric order of values.

#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ghzpoly/common.hpp"

namespace ghzpoly {

class BitIndex {
 public:
  BitIndex(int n, std::uint32_t value) : n_(n), value_(value) {
    if (n < 1 || n > kMaxQubits) {
      throw InvalidArgument("BitIndex: qubit count " + std::to_string(n) +
                            " outside [1, " + std::to_string(kMaxQubits) + "]");
    }
    if (value >= (std::uint32_t{1} << n)) {
      throw InvalidArgument("BitIndex: value " + std::to_string(value) +
                            " does not fit in " + std::to_string(n) + " bits");
    }
  }

  /// Parses the raw {0,1} string form, e.g. "010".
  static BitIndex parse(std::string_view text) {
    if (text.empty() || text.size() > static_cast<std::size_t>(kMaxQubits)) {
      throw InvalidArgument("BitIndex: bad length in '" + std::string(text) +
                            "'");
    }
    std::uint32_t v = 0;
    for (char c : text) {
      if (c != '0' && c != '1') {
        throw InvalidArgument("BitIndex: non-binary character in '" +
                              std::string(text) + "'");
      }
      v = (v << 1) | static_cast<std::uint32_t>(c - '0');
    }
    return BitIndex(static_cast<int>(text.size()), v);
  }

  static BitIndex zeros(int n) { return BitIndex(n, 0); }
  static BitIndex ones(int n) { return BitIndex(n, (std::uint32_t{1} << n) - 1); }

  int size() const { return n_; }
  std::uint32_t value() const { return value_; }

  /// Bit at 1-based position counted from the left.
  int bit(int position) const {
    if (position < 1 || position > n_) {
      throw InvalidArgument("BitIndex: position " + std::to_string(position) +
                            " outside [1, " + std::to_string(n_) + "]");
    }
    return static_cast<int>((value_ >> (n_ - position)) & 1u);
  }

  /// (-1)^{i(1)}: the phase of the flipped component in the GHZ vector.
  int leading_sign() const { return bit(1) == 0 ? 1 : -1; }

  std::string to_string() const {
    std::string s(static_cast<std::size_t>(n_), '0');
    for (int k = 0; k < n_; ++k) {
      if ((value_ >> (n_ - 1 - k)) & 1u) s[static_cast<std::size_t>(k)] = '1';
    }
    return s;
  }

  friend bool operator==(const BitIndex&, const BitIndex&) = default;
  friend auto operator<=>(const BitIndex& a, const BitIndex& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.value_ <=> b.value_;
  }

 private:
  int n_;
  std::uint32_t value_;
};

inline std::vector<BitIndex> enumerate_indices(int n) {
  if (n < 1 || n > kMaxQubits) {
    throw InvalidArgument("enumerate_indices: qubit count " +
                          std::to_string(n) + " outside [1, " +
                          std::to_string(kMaxQubits) + "]");
  }
  std::vector<BitIndex> out;
  out.reserve(dimension(n));
  for (std::uint32_t v = 0; v < dimension(n); ++v) out.emplace_back(n, v);
  return out;
}

inline BitIndex flip_all(const BitIndex& i) {
  return BitIndex(i.size(), ~i.value() & ((std::uint32_t{1} << i.size()) - 1));
}

/// One side S of a bipartition S|T of the qubits {1..n}.
///
/// The subset is kept as constructed; comparison goes through the canonical
/// representative (the side containing position 1), so a mask and its
/// complement compare equal.
class BipartitionMask {
 public:
  static BipartitionMask from_positions(int n, const std::vector<int>& positions) {
    if (n < 2 || n > kMaxQubits) {
      throw InvalidArgument("BipartitionMask: a bipartition needs 2.." +
                            std::to_string(kMaxQubits) + " qubits, got " +
                            std::to_string(n));
    }
    std::uint32_t bits = 0;
    for (int k : positions) {
      if (k < 1 || k > n) {
        throw InvalidArgument("BipartitionMask: position " + std::to_string(k) +
                              " outside [1, " + std::to_string(n) + "]");
      }
      bits |= std::uint32_t{1} << (n - k);
    }
    return BipartitionMask(n, bits);
  }

  /// From a value-bit mask (bit n-k set <=> position k in S).
  static BipartitionMask from_value_mask(int n, std::uint32_t bits) {
    if (n < 2 || n > kMaxQubits) {
      throw InvalidArgument("BipartitionMask: a bipartition needs 2.." +
                            std::to_string(kMaxQubits) + " qubits, got " +
                            std::to_string(n));
    }
    if (bits >= (std::uint32_t{1} << n)) {
      throw InvalidArgument("BipartitionMask: mask references positions beyond n=" +
                            std::to_string(n));
    }
    return BipartitionMask(n, bits);
  }

  int qubits() const { return n_; }
  std::uint32_t value_mask() const { return bits_; }

  bool contains(int position) const {
    return position >= 1 && position <= n_ && ((bits_ >> (n_ - position)) & 1u);
  }

  std::vector<int> positions() const {
    std::vector<int> out;
    for (int k = 1; k <= n_; ++k) {
      if (contains(k)) out.push_back(k);
    }
    return out;
  }

  BipartitionMask complement() const { return BipartitionMask(n_, full() & ~bits_); }
  BipartitionMask canonical() const { return contains(1) ? *this : complement(); }

  /// "1|23" style: positions of S, a bar, positions of T.
  std::string to_string() const {
    std::string s;
    for (int k : positions()) s += std::to_string(k) + (n_ > 9 ? "," : "");
    if (n_ > 9 && !s.empty()) s.pop_back();
    s += '|';
    std::string t;
    for (int k : complement().positions()) t += std::to_string(k) + (n_ > 9 ? "," : "");
    if (n_ > 9 && !t.empty()) t.pop_back();
    return s + t;
  }

  friend bool operator==(const BipartitionMask& a, const BipartitionMask& b) {
    return a.n_ == b.n_ && a.canonical().bits_ == b.canonical().bits_;
  }

 private:
  BipartitionMask(int n, std::uint32_t bits) : n_(n), bits_(bits) {
    if (bits == 0 || bits == full()) {
      throw InvalidArgument("BipartitionMask: S must be a nonempty proper subset");
    }
  }

  std::uint32_t full() const { return (std::uint32_t{1} << n_) - 1; }

  int n_;
  std::uint32_t bits_;
};

/// All 2^{n-1} - 1 bipartitions, canonical (position 1 in S), ordered by
/// the value of S.
inline std::vector<BipartitionMask> enumerate_bipartitions(int n) {
  if (n < 2 || n > kMaxQubits) {
    throw InvalidArgument("enumerate_bipartitions: qubit count " +
                          std::to_string(n) + " outside [2, " +
                          std::to_string(kMaxQubits) + "]");
  }
  std::vector<BipartitionMask> out;
  const std::uint32_t lead = std::uint32_t{1} << (n - 1);
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  for (std::uint32_t rest = 0; rest < lead; ++rest) {
    const std::uint32_t bits = lead | rest;
    if (bits != full) out.push_back(BipartitionMask::from_value_mask(n, bits));
  }
  return out;
}

inline BitIndex flip_subset(const BitIndex& i, const BipartitionMask& s) {
  if (s.qubits() != i.size()) {
    throw InvalidArgument("flip_subset: bipartition over " +
                          std::to_string(s.qubits()) +
                          " qubits applied to index " + i.to_string());
  }
  return BitIndex(i.size(), i.value() ^ s.value_mask());
}

}  // namespace ghzpoly
