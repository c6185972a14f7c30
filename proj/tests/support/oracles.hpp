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

// Brute-force references and random instance generators shared by the unit
// and acceptance tests. Nothing here calls the solvers it is used to check.

#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <set>
#include <utility>
#include <vector>

#include "qubomatch/conflict.hpp"
#include "qubomatch/qubo.hpp"
#include "qubomatch/rng.hpp"

namespace qubomatch::testing {

using Mask = std::uint32_t;

inline std::vector<Mask> adjacency_masks(const ConflictGraph& g) {
    std::vector<Mask> adj(g.size(), 0);
    for (const auto& [u, v] : g.edges()) {
        adj[u] |= Mask{1} << v;
        adj[v] |= Mask{1} << u;
    }
    return adj;
}

struct MisEnumeration {
    std::size_t size = 0;
    std::set<Mask> sets;  // every maximum independent set
};

/// All maximum independent sets of a graph with at most 24 vertices, by
/// dynamic programming over subsets.
inline MisEnumeration enumerate_mis(const ConflictGraph& g) {
    const std::size_t n = g.size();
    const auto adj = adjacency_masks(g);
    const Mask total = Mask{1} << n;
    std::vector<std::uint8_t> independent(total, 0);
    independent[0] = 1;
    MisEnumeration out;
    out.sets.insert(0);
    for (Mask m = 1; m < total; ++m) {
        const auto low = static_cast<std::size_t>(std::countr_zero(m));
        const Mask rest = m & (m - 1);
        independent[m] = independent[rest] && (adj[low] & rest) == 0;
        if (!independent[m]) continue;
        const auto size = static_cast<std::size_t>(std::popcount(m));
        if (size > out.size) {
            out.size = size;
            out.sets.clear();
        }
        if (size == out.size) out.sets.insert(m);
    }
    return out;
}

namespace detail {

inline std::size_t mis_size_rec(const std::vector<std::uint64_t>& adj, std::uint64_t live) {
    if (live == 0) return 0;
    // a vertex of degree <= 1 in the live graph is always safe to take
    std::uint64_t rest = live;
    int pick = -1;
    int best_degree = -1;
    while (rest) {
        const int v = std::countr_zero(rest);
        rest &= rest - 1;
        const int d = std::popcount(adj[v] & live);
        if (d <= 1) return 1 + mis_size_rec(adj, live & ~(adj[v] | (std::uint64_t{1} << v)));
        if (d > best_degree) {
            best_degree = d;
            pick = v;
        }
    }
    const std::uint64_t bit = std::uint64_t{1} << pick;
    return std::max(mis_size_rec(adj, live & ~bit),
                    1 + mis_size_rec(adj, live & ~(adj[pick] | bit)));
}

}  // namespace detail

/// Maximum independent set size for graphs with at most 64 vertices by plain
/// include/exclude recursion, without any bounding.
inline std::size_t mis_size_recursive(const ConflictGraph& g) {
    std::vector<std::uint64_t> adj(g.size(), 0);
    for (const auto& [u, v] : g.edges()) {
        adj[u] |= std::uint64_t{1} << v;
        adj[v] |= std::uint64_t{1} << u;
    }
    const std::uint64_t live = g.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.size()) - 1;
    return detail::mis_size_rec(adj, live);
}

/// Energy of every assignment (bit k of the index is x_k), computed from the
/// instance's terms by extending the assignment without its lowest bit.
inline std::vector<double> enumerate_energies(const QuboInstance& q) {
    const std::size_t n = q.size();
    std::vector<double> linear(n, 0.0);
    std::vector<std::vector<std::pair<std::size_t, double>>> rows(n);
    for (const auto& [key, value] : q.terms()) {
        if (key.first == key.second) {
            linear[key.first] = value;
        } else {
            rows[key.first].emplace_back(key.second, value);
            rows[key.second].emplace_back(key.first, value);
        }
    }
    const Mask total = Mask{1} << n;
    std::vector<double> e(total, 0.0);
    for (Mask m = 1; m < total; ++m) {
        const auto low = static_cast<std::size_t>(std::countr_zero(m));
        const Mask rest = m & (m - 1);
        double v = e[rest] + linear[low];
        for (const auto& [j, q_lj] : rows[low]) {
            if (rest & (Mask{1} << j)) v += q_lj;
        }
        e[m] = v;
    }
    return e;
}

inline std::set<Mask> argmin_set(const std::vector<double>& energies) {
    const double best = *std::min_element(energies.begin(), energies.end());
    std::set<Mask> out;
    for (Mask m = 0; m < energies.size(); ++m) {
        if (energies[m] == best) out.insert(m);
    }
    return out;
}

inline Mask to_mask(const Assignment& x) {
    Mask m = 0;
    for (std::size_t k = 0; k < x.size(); ++k) {
        if (x[k]) m |= Mask{1} << k;
    }
    return m;
}

inline bool is_independent(const ConflictGraph& g, const std::vector<std::size_t>& set) {
    for (std::size_t a = 0; a < set.size(); ++a) {
        for (std::size_t b = a + 1; b < set.size(); ++b) {
            if (g.adjacent(set[a], set[b])) return false;
        }
    }
    return true;
}

/// Erdos-Renyi topology over trivially distinct candidates (k, k).
inline ConflictGraph random_graph(Rng& rng, std::size_t n, double density) {
    std::vector<Edge> edges;
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) {
            if (rng.uniform() < density) edges.emplace_back(u, v);
        }
    }
    return ConflictGraph::from_edges(n, std::move(edges));
}

/// Conflict graph whose candidates are random (i, alpha) pairs over small
/// index ranges, so that shared-point edges occur, plus random extra edges at
/// the given density.
inline ConflictGraph random_candidate_graph(Rng& rng, std::size_t n, double density) {
    const std::size_t range = std::max<std::size_t>(2, n);
    std::set<std::pair<std::size_t, std::size_t>> used;
    std::vector<MatchCandidate> vertices;
    while (vertices.size() < n) {
        const std::size_t i = rng.below(range);
        const std::size_t a = rng.below(range);
        if (!used.insert({i, a}).second) continue;
        vertices.push_back({i, a, 0.9 + 0.1 * rng.uniform()});
    }
    std::vector<Edge> edges;
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) {
            const bool shares = vertices[u].i == vertices[v].i || vertices[u].alpha == vertices[v].alpha;
            if (shares || rng.uniform() < density) edges.emplace_back(u, v);
        }
    }
    MatchParams params;
    params.limit = std::max<std::size_t>(n, 1);
    return ConflictGraph(std::move(vertices), std::move(edges), params);
}

/// Random QUBO with real coefficients; each pair present with probability
/// `density`.
inline QuboInstance random_qubo(Rng& rng, std::size_t n, double density) {
    QuboInstance q(n);
    for (std::size_t i = 0; i < n; ++i) {
        q.set(i, i, rng.uniform(-2.0, 2.0));
        for (std::size_t j = i + 1; j < n; ++j) {
            if (rng.uniform() < density) q.set(i, j, rng.uniform(-2.0, 2.0));
        }
    }
    return q;
}

}  // namespace qubomatch::testing
