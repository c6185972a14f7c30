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

#include "qubomatch/qubo.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qubomatch/errors.hpp"

namespace qubomatch {

Assignment::Assignment(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
    for (std::uint8_t b : bits_) {
        if (b > 1) throw InvalidArgument("assignment values must be 0 or 1");
    }
}

Assignment::Assignment(std::initializer_list<int> bits) {
    bits_.reserve(bits.size());
    for (int b : bits) {
        if (b != 0 && b != 1) throw InvalidArgument("assignment values must be 0 or 1");
        bits_.push_back(static_cast<std::uint8_t>(b));
    }
}

std::size_t Assignment::count() const noexcept {
    return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
}

void QuboInstance::check_index(std::size_t i, std::size_t j) const {
    if (i >= n_ || j >= n_) {
        throw InvalidArgument("QUBO index (" + std::to_string(i) + ", " + std::to_string(j) +
                              ") out of range for " + std::to_string(n_) + " variables");
    }
}

double QuboInstance::at(std::size_t i, std::size_t j) const {
    if (i > j) std::swap(i, j);
    const auto it = terms_.find({i, j});
    return it == terms_.end() ? 0.0 : it->second;
}

void QuboInstance::set(std::size_t i, std::size_t j, double value) {
    check_index(i, j);
    if (!std::isfinite(value)) throw InvalidArgument("QUBO coefficients must be finite");
    if (i > j) std::swap(i, j);
    if (value == 0.0) {
        terms_.erase({i, j});
    } else {
        terms_[{i, j}] = value;
    }
}

void QuboInstance::add(std::size_t i, std::size_t j, double value) {
    set(i, j, at(i, j) + value);
}

std::size_t QuboInstance::num_linear() const noexcept {
    return static_cast<std::size_t>(std::count_if(
            terms_.begin(), terms_.end(), [](const auto& t) { return t.first.first == t.first.second; }));
}

QuboInstance operator+(const QuboInstance& a, const QuboInstance& b) {
    if (a.size() != b.size()) {
        throw DimensionMismatch("cannot add QUBOs over " + std::to_string(a.size()) + " and " +
                                std::to_string(b.size()) + " variables");
    }
    QuboInstance sum = a;
    for (const auto& [key, value] : b.terms()) sum.add(key.first, key.second, value);
    return sum;
}

double energy(const QuboInstance& q, const Assignment& x) {
    if (x.size() != q.size()) {
        throw DimensionMismatch("assignment has " + std::to_string(x.size()) +
                                " bits, instance has " + std::to_string(q.size()) + " variables");
    }
    double e = 0.0;
    for (const auto& [key, value] : q.terms()) {
        if (x[key.first] && x[key.second]) e += value;
    }
    return e;
}

QuboInstance mis_to_qubo(const ConflictGraph& graph) {
    const std::size_t n = graph.size();
    if (n == 0) throw InvalidArgument("cannot encode an empty conflict graph");
    const auto penalty = static_cast<double>(n);
    QuboInstance q(n);
    for (std::size_t k = 0; k < n; ++k) q.set(k, k, -1.0);
    for (const auto& [u, v] : graph.edges()) q.set(u, v, penalty);
    return q;
}

QuboAdjacency::QuboAdjacency(const QuboInstance& q) : linear_(q.size(), 0.0), rows_(q.size()) {
    for (const auto& [key, value] : q.terms()) {
        const auto [i, j] = key;
        if (i == j) {
            linear_[i] = value;
        } else {
            rows_[i].emplace_back(j, value);
            rows_[j].emplace_back(i, value);
        }
    }
}

double QuboAdjacency::flip_delta(const Assignment& x, std::size_t k) const {
    double field = linear_[k];
    for (const auto& [j, value] : rows_[k]) {
        if (x[j]) field += value;
    }
    return x[k] ? -field : field;
}

}  // namespace qubomatch
