// Copyright 2026 The qubomatch Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qubomatch/conflict.hpp"

namespace qubomatch {

/// Binary assignment x in {0, 1}^n.
class Assignment {
  public:
    Assignment() = default;
    explicit Assignment(std::size_t n) : bits_(n, 0) {}
    /// Throws InvalidArgument on a value other than 0 or 1.
    explicit Assignment(std::vector<std::uint8_t> bits);
    Assignment(std::initializer_list<int> bits);

    std::size_t size() const noexcept { return bits_.size(); }
    std::uint8_t operator[](std::size_t k) const { return bits_[k]; }
    void set(std::size_t k, bool value) { bits_.at(k) = value ? 1 : 0; }
    void flip(std::size_t k) { bits_[k] ^= 1; }
    std::span<const std::uint8_t> bits() const noexcept { return bits_; }
    std::size_t count() const noexcept;

    bool operator==(const Assignment&) const = default;

  private:
    std::vector<std::uint8_t> bits_;
};

/// Upper-triangular QUBO coefficients over n binary variables. Absent pairs
/// are zero; zeros are never stored.
class QuboInstance {
  public:
    using Key = std::pair<std::size_t, std::size_t>;
    using Terms = std::map<Key, double>;

    QuboInstance() = default;
    explicit QuboInstance(std::size_t n) : n_(n) {}

    std::size_t size() const noexcept { return n_; }
    const Terms& terms() const noexcept { return terms_; }
    /// Coefficient of x_i x_j; the pair is reordered so that i <= j.
    double at(std::size_t i, std::size_t j) const;

    /// Sets Q_ij (reordered to i <= j); setting zero erases the term.
    void set(std::size_t i, std::size_t j, double value);
    /// Adds to Q_ij, erasing the term if the sum is zero.
    void add(std::size_t i, std::size_t j, double value);

    std::size_t num_linear() const noexcept;
    std::size_t num_quadratic() const noexcept { return terms_.size() - num_linear(); }

    bool operator==(const QuboInstance&) const = default;

  private:
    void check_index(std::size_t i, std::size_t j) const;

    std::size_t n_ = 0;
    Terms terms_;
};

/// Term-wise sum; both instances must have the same number of variables.
QuboInstance operator+(const QuboInstance& a, const QuboInstance& b);

/// sum_{i <= j} Q_ij x_i x_j. Throws DimensionMismatch on a length mismatch.
double energy(const QuboInstance& q, const Assignment& x);

/// Maximum-independent-set encoding: Q_kk = -1 for every vertex and Q_uv = P
/// for every edge, with P = |V|. Minimum-energy assignments are exactly the
/// characteristic vectors of maximum independent sets, at energy -|MIS|.
/// Throws InvalidArgument for an empty graph.
QuboInstance mis_to_qubo(const ConflictGraph& graph);

/// Row view of a QUBO for O(degree) single-flip energy deltas.
class QuboAdjacency {
  public:
    explicit QuboAdjacency(const QuboInstance& q);

    std::size_t size() const noexcept { return linear_.size(); }
    double linear(std::size_t k) const { return linear_[k]; }
    std::span<const std::pair<std::size_t, double>> row(std::size_t k) const { return rows_[k]; }

    /// Energy change of flipping bit k of x.
    double flip_delta(const Assignment& x, std::size_t k) const;

  private:
    std::vector<double> linear_;
    std::vector<std::vector<std::pair<std::size_t, double>>> rows_;
};

/// Shortest decimal string that parses back to exactly `value`.
std::string format_real(double value);

/// qbsolv-style text: optional "c" comment lines, the program line
/// "p qubo 0 <n> <nDiagonal> <nCouplers>", then diagonal terms followed by
/// coupler terms, each sorted by (i, j).
std::string write_qubo(const QuboInstance& q, std::span<const std::string> comments = {});

/// Parses the format produced by write_qubo. Throws ParseError with the line
/// number on a malformed program line, bad term line, out-of-range index,
/// duplicate pair or a count that disagrees with the program line.
QuboInstance read_qubo(std::string_view text);

}  // namespace qubomatch
