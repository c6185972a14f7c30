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
#include <span>
#include <utility>
#include <vector>

#include "qubomatch/defaults.hpp"
#include "qubomatch/graph_model.hpp"

namespace qubomatch {

/// Association of point `i` of the first graph with point `alpha` of the
/// second, scored by feature similarity `d`.
struct MatchCandidate {
    std::size_t i = 0;
    std::size_t alpha = 0;
    double d = 0.0;

    bool operator==(const MatchCandidate&) const = default;
};

/// Thresholds and cap used to compile a conflict graph.
struct MatchParams {
    double t_feat = defaults::kFeatureThreshold;
    double t_geom = defaults::kGeometryThreshold;
    std::size_t limit = defaults::kVertexLimit;
    GeomWeights weights{};

    void validate() const;

    bool operator==(const MatchParams&) const = default;
};

using Edge = std::pair<std::size_t, std::size_t>;

/// Graph over match candidates whose edges mark pairs that cannot both be
/// part of one correspondence.
///
/// Edges are stored once as (u, v) with u < v, sorted. Any two vertices that
/// share a first-image or second-image index must be joined; the constructor
/// checks this along with the |V| <= limit cap.
class ConflictGraph {
  public:
    ConflictGraph() = default;
    ConflictGraph(std::vector<MatchCandidate> vertices, std::vector<Edge> edges,
                  MatchParams params);

    /// Graph over vertices (k, k) with the given edges; useful for solver
    /// tests where only the topology matters.
    static ConflictGraph from_edges(std::size_t n, std::vector<Edge> edges);

    std::span<const MatchCandidate> vertices() const noexcept { return vertices_; }
    std::span<const Edge> edges() const noexcept { return edges_; }
    std::span<const std::size_t> neighbors(std::size_t v) const { return adjacency_.at(v); }
    std::size_t size() const noexcept { return vertices_.size(); }
    std::size_t degree(std::size_t v) const { return adjacency_.at(v).size(); }
    bool adjacent(std::size_t u, std::size_t v) const;
    const MatchParams& params() const noexcept { return params_; }

  private:
    std::vector<MatchCandidate> vertices_;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::size_t>> adjacency_;
    MatchParams params_;
};

/// Scores every pair with feature_similarity, keeps those strictly above
/// t_feat, orders them by decreasing d (ties by i then alpha) and keeps the
/// first `limit`.
std::vector<MatchCandidate> generate_candidates(const ImageGraph& g1, const ImageGraph& g2,
                                                const MatchParams& params);

/// Joins two candidates when they share a point in either image, or when
/// their geometric consistency is strictly below t_geom. Relations are taken
/// in the first image's index order: for candidates (i, a) and (j, b) with
/// i < j, relation(i -> j) is compared with relation(a -> b).
///
/// Throws DegenerateGeometry naming the offending candidates when a pair of
/// distinct indices refers to coincident points.
ConflictGraph build_conflict_graph(const ImageGraph& g1, const ImageGraph& g2,
                                   std::vector<MatchCandidate> candidates,
                                   const MatchParams& params);

}  // namespace qubomatch
