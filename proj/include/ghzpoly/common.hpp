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

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace ghzpoly {

// Tolerances.
inline constexpr double kNormTol = 1e-9;      // normalization and round trips
inline constexpr double kPsdTol = 1e-9;       // eigenvalue nonnegativity
inline constexpr double kClassTol = 1e-12;    // strict membership decisions
inline constexpr double kBoundaryTol = 1e-9;  // boundary flag band
inline constexpr double kRenormTol = 1e-6;    // accepted drift of user input

// Size caps, in qubits.
inline constexpr int kMaxQubits = 16;            // index enumeration
inline constexpr int kMaxDenseQubits = 8;        // d x d matrices
inline constexpr int kMaxBisepVertexQubits = 8;  // d(d-1)/2 midpoints
inline constexpr int kMaxFbiVertexQubits = 5;    // d/2 + 2^{d/2} points
inline constexpr int kMaxFbiFacetListQubits = 10;
inline constexpr int kMaxMonteCarloQubits = 6;
inline constexpr int kMaxClosedFormQubits = 30;

/// Malformed input. Maps to CLI exit status 2.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Request exceeds a documented size cap. Maps to CLI exit status 3.
class UnsupportedSize : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// A matrix outside the GHZ-diagonal family; carries the offending entry.
class NotGhzDiagonal : public InvalidArgument {
 public:
  NotGhzDiagonal(std::size_t row, std::size_t col, const std::string& what)
      : InvalidArgument(what), row_(row), col_(col) {}

  std::size_t row() const { return row_; }
  std::size_t col() const { return col_; }

 private:
  std::size_t row_;
  std::size_t col_;
};

/// A mathematical guarantee failed to hold. Always a bug.
class InternalInvariant : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline std::size_t dimension(int n) { return std::size_t{1} << n; }

/// Throws InvalidArgument below `lo` and UnsupportedSize above `cap`.
inline void check_qubits(int n, int lo, int cap, const char* what) {
  if (n < lo) {
    throw InvalidArgument(std::string(what) + ": qubit count " +
                          std::to_string(n) + " below minimum " +
                          std::to_string(lo));
  }
  if (n > cap) {
    throw UnsupportedSize(std::string(what) + ": qubit count " +
                          std::to_string(n) + " exceeds cap " +
                          std::to_string(cap));
  }
}

}  // namespace ghzpoly
