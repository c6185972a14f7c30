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

#include <chrono>
#include <cmath>
#include <string>

#include "qubomatch/errors.hpp"
#include "qubomatch/solvers.hpp"

namespace qubomatch {

namespace {

constexpr std::uint64_t kResyncInterval = 4096;

}  // namespace

SolveResult solve_exact(const QuboInstance& q) {
    const std::size_t n = q.size();
    if (n > defaults::kExactMaxVariables) {
        throw SizeError("exhaustive enumeration is limited to " +
                        std::to_string(defaults::kExactMaxVariables) + " variables, instance has " +
                        std::to_string(n));
    }
    const auto start = std::chrono::steady_clock::now();
    const QuboAdjacency adj(q);

    double magnitude = 1.0;
    for (const auto& term : q.terms()) magnitude += std::abs(term.second);
    // the running energy is only a filter; candidates are re-evaluated exactly
    const double tolerance = 1e-9 * magnitude;

    Assignment x(n);
    double running = 0.0;
    SolveResult result{.best = x, .best_energy = 0.0, .proven_optimal = true, .stats = {}};

    const std::uint64_t total = std::uint64_t{1} << n;
    // visiting assignments in increasing integer order means a strict
    // improvement test keeps the smallest one among ties
    for (std::uint64_t m = 1; m < total; ++m) {
        for (std::size_t k = 0; k < n; ++k) {
            running += adj.flip_delta(x, k);
            x.flip(k);
            if (x[k]) break;
        }
        if (m % kResyncInterval == 0) running = energy(q, x);
        if (running <= result.best_energy + tolerance) {
            const double exact = energy(q, x);
            if (exact < result.best_energy) {
                result.best = x;
                result.best_energy = exact;
            }
        }
    }
    result.stats.evaluations = total;
    result.stats.restarts = 1;
    result.stats.wall_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

}  // namespace qubomatch
