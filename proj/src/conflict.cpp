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

#include "qubomatch/conflict.hpp"

#include <algorithm>
#include <string>

#include "qubomatch/errors.hpp"

namespace qubomatch {

void MatchParams::validate() const {
    if (!(t_feat >= -1.0 && t_feat < 1.0)) throw InvalidArgument("t_feat must lie in [-1, 1)");
    if (!(t_geom >= -1.0 && t_geom < 1.0)) throw InvalidArgument("t_geom must lie in [-1, 1)");
    if (limit < 1) throw InvalidArgument("vertex limit must be at least 1");
    weights.validate();
}

ConflictGraph::ConflictGraph(std::vector<MatchCandidate> vertices, std::vector<Edge> edges,
                             MatchParams params)
        : vertices_(std::move(vertices)), edges_(std::move(edges)), params_(params) {
    params_.validate();
    const std::size_t n = vertices_.size();
    if (n > params_.limit) {
        throw InvalidArgument("conflict graph has " + std::to_string(n) +
                              " vertices, limit is " + std::to_string(params_.limit));
    }
    for (const MatchCandidate& c : vertices_) {
        if (!(c.d > params_.t_feat)) {
            throw InvalidArgument("candidate (" + std::to_string(c.i) + ", " +
                                  std::to_string(c.alpha) + ") does not exceed t_feat");
        }
    }
    for (Edge& e : edges_) {
        if (e.first == e.second) throw InvalidArgument("self-loop on vertex " + std::to_string(e.first));
        if (e.first >= n || e.second >= n) throw InvalidArgument("edge endpoint out of range");
        if (e.first > e.second) std::swap(e.first, e.second);
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
        throw InvalidArgument("duplicate edge in conflict graph");
    }

    adjacency_.assign(n, {});
    for (const auto& [u, v] : edges_) {
        adjacency_[u].push_back(v);
        adjacency_[v].push_back(u);
    }
    for (auto& list : adjacency_) std::sort(list.begin(), list.end());

    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) {
            const bool shares = vertices_[u].i == vertices_[v].i ||
                                vertices_[u].alpha == vertices_[v].alpha;
            if (shares && !adjacent(u, v)) {
                throw InvalidArgument("vertices " + std::to_string(u) + " and " +
                                      std::to_string(v) +
                                      " share a point but are not joined by an edge");
            }
        }
    }
}

ConflictGraph ConflictGraph::from_edges(std::size_t n, std::vector<Edge> edges) {
    std::vector<MatchCandidate> vertices(n);
    for (std::size_t k = 0; k < n; ++k) vertices[k] = {k, k, 1.0};
    MatchParams params;
    params.limit = std::max<std::size_t>(params.limit, std::max<std::size_t>(n, 1));
    return ConflictGraph(std::move(vertices), std::move(edges), params);
}

bool ConflictGraph::adjacent(std::size_t u, std::size_t v) const {
    const auto& list = adjacency_.at(u);
    return std::binary_search(list.begin(), list.end(), v);
}

std::vector<MatchCandidate> generate_candidates(const ImageGraph& g1, const ImageGraph& g2,
                                                const MatchParams& params) {
    params.validate();
    std::vector<MatchCandidate> out;
    if (g1.empty() || g2.empty()) return out;
    if (g1.dimension() != g2.dimension()) {
        throw DimensionMismatch("descriptor dimensions differ between graphs: " +
                                std::to_string(g1.dimension()) + " vs " +
                                std::to_string(g2.dimension()));
    }
    for (std::size_t i = 0; i < g1.size(); ++i) {
        for (std::size_t a = 0; a < g2.size(); ++a) {
            const double d = feature_similarity(g1[i].descriptor(), g2[a].descriptor());
            if (d > params.t_feat) out.push_back({i, a, d});
        }
    }
    // generated in (i, alpha) order, so a stable sort on d keeps the tie-break
    std::stable_sort(out.begin(), out.end(),
                     [](const MatchCandidate& x, const MatchCandidate& y) { return x.d > y.d; });
    if (out.size() > params.limit) out.resize(params.limit);
    return out;
}

ConflictGraph build_conflict_graph(const ImageGraph& g1, const ImageGraph& g2,
                                   std::vector<MatchCandidate> candidates,
                                   const MatchParams& params) {
    params.validate();
    for (const MatchCandidate& c : candidates) {
        if (c.i >= g1.size() || c.alpha >= g2.size()) {
            throw InvalidArgument("candidate (" + std::to_string(c.i) + ", " +
                                  std::to_string(c.alpha) + ") refers to a missing point");
        }
    }

    std::vector<Edge> edges;
    const std::size_t n = candidates.size();
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) {
            const MatchCandidate* first = &candidates[u];
            const MatchCandidate* second = &candidates[v];
            if (first->i == second->i || first->alpha == second->alpha) {
                edges.emplace_back(u, v);
                continue;
            }
            if (first->i > second->i) std::swap(first, second);
            double consistency = 0.0;
            try {
                consistency = geometric_consistency(
                        geom_relation(g1[first->i], g1[second->i]),
                        geom_relation(g2[first->alpha], g2[second->alpha]), params.weights);
            } catch (const DegenerateGeometry&) {
                throw DegenerateGeometry(
                        "coincident points in candidate pair (" + std::to_string(first->i) +
                        ", " + std::to_string(first->alpha) + ") / (" +
                        std::to_string(second->i) + ", " + std::to_string(second->alpha) + ")");
            }
            if (consistency < params.t_geom) edges.emplace_back(u, v);
        }
    }
    return ConflictGraph(std::move(candidates), std::move(edges), params);
}

}  // namespace qubomatch
