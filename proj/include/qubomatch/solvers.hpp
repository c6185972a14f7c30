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
#include <vector>

#include "qubomatch/conflict.hpp"
#include "qubomatch/defaults.hpp"
#include "qubomatch/qubo.hpp"

namespace qubomatch {

struct SolveStats {
    std::uint64_t evaluations = 0;  // assignments visited, flips proposed or nodes expanded
    std::size_t restarts = 0;
    double wall_seconds = 0.0;
};

/// Best assignment found by a solver. `best_energy` is energy(q, best)
/// recomputed from scratch.
struct SolveResult {
    Assignment best;
    double best_energy = 0.0;
    bool proven_optimal = false;
    SolveStats stats;
};

/// Inverse temperature is interpolated geometrically from beta_initial (first
/// sweep) to beta_final (last sweep).
struct AnnealSchedule {
    std::size_t sweeps = defaults::kAnnealSweeps;
    double beta_initial = defaults::kAnnealBetaInitial;
    double beta_final = defaults::kAnnealBetaFinal;
    std::size_t restarts = defaults::kAnnealRestarts;
    std::uint64_t seed = defaults::kSeed;

    void validate() const;
    double beta(std::size_t sweep) const;

    bool operator==(const AnnealSchedule&) const = default;
};

/// Exhaustive enumeration of all 2^n assignments; n <= 25 or SizeError.
/// Among minimum-energy assignments returns the one with the smallest value
/// when read as a little-endian integer (bit 0 least significant).
SolveResult solve_exact(const QuboInstance& q);

struct MisResult {
    std::vector<std::size_t> vertices;  // ascending
    bool proven_optimal = false;
    std::uint64_t nodes = 0;
};

/// Exact maximum independent set by branch and bound.
///
/// Branches on the highest-degree vertex of the residual graph (lowest index on
/// ties), include branch first, and prunes with the size of a greedy clique
/// cover of the residual graph, which bounds how many residual vertices an
/// independent set can still take.
MisResult solve_mis_bnb(const ConflictGraph& graph);

/// Single-flip Metropolis simulated annealing.
///
/// Each restart r starts from the all-zero assignment with its own generator
/// Rng::for_stream(seed, r) and visits the variables in index order every
/// sweep. Restarts run on up to `threads` threads; the result does not depend
/// on the thread count (ties between restarts go to the lower index).
SolveResult solve_sa(const QuboInstance& q, const AnnealSchedule& schedule,
                     unsigned threads = 1);

}  // namespace qubomatch
