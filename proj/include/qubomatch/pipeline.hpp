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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qubomatch/conflict.hpp"
#include "qubomatch/graph_model.hpp"
#include "qubomatch/qubo.hpp"
#include "qubomatch/solvers.hpp"

namespace qubomatch {

struct Correspondence {
    std::size_t i = 0;
    std::size_t alpha = 0;

    auto operator<=>(const Correspondence&) const = default;
};

enum class SolverKind { exact, bnb, sa };

std::string_view to_string(SolverKind kind) noexcept;
/// Throws InvalidArgument for an unknown name.
SolverKind parse_solver_kind(std::string_view name);

struct SolverOptions {
    SolverKind kind = SolverKind::bnb;
    AnnealSchedule schedule{};
    unsigned threads = 1;
};

/// Decoded correspondence set. `similarity` is the number of pairs; the
/// parameters used to produce it are echoed for provenance.
struct MatchResult {
    std::vector<Correspondence> pairs;
    std::size_t similarity = 0;
    std::string solver;
    bool proven_optimal = false;
    MatchParams params{};
    std::optional<AnnealSchedule> schedule;  // set for the annealing solver
    std::optional<double> best_energy;       // set when solved through the QUBO
    double feature_mass = 0.0;               // sum of d over pairs, reported only
    std::size_t num_candidates = 0;
    std::size_t num_conflicts = 0;
};

struct DecodeMeta {
    std::string solver;
    bool proven_optimal = false;
};

/// Pairs selected by `x`, in vertex order. Throws InfeasibleSolution if x
/// selects both ends of a conflict edge and DimensionMismatch if its length
/// differs from the vertex count.
MatchResult decode_matches(const ConflictGraph& graph, const Assignment& x,
                           const DecodeMeta& meta);

/// Candidates -> conflict graph -> solver -> decoded pairs. An empty candidate
/// set yields an empty result rather than an error.
MatchResult match_images(const ImageGraph& g1, const ImageGraph& g2, const MatchParams& params,
                         const SolverOptions& solver = {});

struct SyntheticSpec {
    std::size_t n_inliers = 8;
    std::size_t n_outliers_per_image = 0;
    SimilarityTransform transform{};
    double position_noise = 0.0;    // pixels; offsets are uniform in a disk of this radius
    double descriptor_noise = 0.0;  // per-component Gaussian sigma before renormalizing
    double field_size = 512.0;
    std::size_t descriptor_dim = 32;
    std::uint64_t seed = defaults::kSeed;

    void validate() const;
};

struct SyntheticPair {
    ImageGraph first;
    ImageGraph second;
    std::vector<Correspondence> truth;  // sorted by i
};

/// Random inliers in image 1 mapped by `transform` (plus noise) into image 2,
/// with independent outliers added to each image and both point lists
/// shuffled. Deterministic in the seed.
SyntheticPair generate_synthetic(const SyntheticSpec& spec);

}  // namespace qubomatch
