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

#include "qubomatch/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "qubomatch/errors.hpp"
#include "qubomatch/rng.hpp"

namespace qubomatch {

std::string_view to_string(SolverKind kind) noexcept {
    switch (kind) {
        case SolverKind::exact:
            return "exact";
        case SolverKind::bnb:
            return "bnb";
        case SolverKind::sa:
            return "sa";
    }
    return "unknown";
}

SolverKind parse_solver_kind(std::string_view name) {
    if (name == "exact") return SolverKind::exact;
    if (name == "bnb") return SolverKind::bnb;
    if (name == "sa") return SolverKind::sa;
    throw InvalidArgument("unknown solver '" + std::string(name) + "' (expected exact, bnb or sa)");
}

MatchResult decode_matches(const ConflictGraph& graph, const Assignment& x,
                           const DecodeMeta& meta) {
    if (x.size() != graph.size()) {
        throw DimensionMismatch("assignment has " + std::to_string(x.size()) +
                                " bits, conflict graph has " + std::to_string(graph.size()) +
                                " vertices");
    }
    for (const auto& [u, v] : graph.edges()) {
        if (x[u] && x[v]) {
            throw InfeasibleSolution("assignment selects conflicting vertices " +
                                     std::to_string(u) + " and " + std::to_string(v));
        }
    }
    MatchResult result;
    result.solver = meta.solver;
    result.proven_optimal = meta.proven_optimal;
    result.params = graph.params();
    result.num_candidates = graph.size();
    result.num_conflicts = graph.edges().size();
    for (std::size_t k = 0; k < graph.size(); ++k) {
        if (!x[k]) continue;
        const MatchCandidate& c = graph.vertices()[k];
        result.pairs.push_back({c.i, c.alpha});
        result.feature_mass += c.d;
    }
    result.similarity = result.pairs.size();
    return result;
}

MatchResult match_images(const ImageGraph& g1, const ImageGraph& g2, const MatchParams& params,
                         const SolverOptions& solver) {
    const bool complete = solver.kind != SolverKind::sa;
    const DecodeMeta meta{std::string(to_string(solver.kind)), complete};

    std::vector<MatchCandidate> candidates = generate_candidates(g1, g2, params);
    const ConflictGraph graph = build_conflict_graph(g1, g2, std::move(candidates), params);

    MatchResult result;
    if (graph.size() == 0) {
        result = decode_matches(graph, Assignment(0), meta);
    } else if (solver.kind == SolverKind::bnb) {
        const MisResult mis = solve_mis_bnb(graph);
        Assignment x(graph.size());
        for (std::size_t v : mis.vertices) x.set(v, true);
        result = decode_matches(graph, x, {meta.solver, mis.proven_optimal});
    } else {
        const QuboInstance q = mis_to_qubo(graph);
        const SolveResult solved = solver.kind == SolverKind::exact
                                           ? solve_exact(q)
                                           : solve_sa(q, solver.schedule, solver.threads);
        result = decode_matches(graph, solved.best, {meta.solver, solved.proven_optimal});
        result.best_energy = solved.best_energy;
        if (-static_cast<double>(result.similarity) != solved.best_energy) {
            throw Error("feasible assignment energy " + format_real(solved.best_energy) +
                        " disagrees with match count " + std::to_string(result.similarity));
        }
    }
    if (solver.kind == SolverKind::sa) result.schedule = solver.schedule;
    result.params = params;
    return result;
}

void SyntheticSpec::validate() const {
    if (!(transform.scale > 0.0)) throw InvalidArgument("transform scale must be positive");
    if (!(position_noise >= 0.0)) throw InvalidArgument("position_noise must be nonnegative");
    if (!(descriptor_noise >= 0.0)) throw InvalidArgument("descriptor_noise must be nonnegative");
    if (!(field_size > 0.0)) throw InvalidArgument("field_size must be positive");
    if (descriptor_dim < 1) throw InvalidArgument("descriptor_dim must be at least 1");
}

namespace {

constexpr double kMinScale = 2.0;
constexpr double kMaxScale = 16.0;

std::vector<double> random_unit_vector(Rng& rng, std::size_t dim) {
    std::vector<double> v(dim);
    double sq = 0.0;
    do {
        sq = 0.0;
        for (double& c : v) {
            c = rng.normal();
            sq += c * c;
        }
    } while (sq == 0.0);
    const double norm = std::sqrt(sq);
    for (double& c : v) c /= norm;
    return v;
}

InterestPoint random_point(Rng& rng, const SyntheticSpec& spec) {
    const double x = rng.uniform(0.0, spec.field_size);
    const double y = rng.uniform(0.0, spec.field_size);
    const double scale = std::exp(rng.uniform(std::log(kMinScale), std::log(kMaxScale)));
    const double orientation = rng.uniform(-std::numbers::pi, std::numbers::pi);
    return InterestPoint(x, y, scale, orientation, random_unit_vector(rng, spec.descriptor_dim));
}

// Fisher-Yates; returns perm with perm[old index] = new index.
std::vector<std::size_t> shuffle_order(Rng& rng, std::size_t n) {
    std::vector<std::size_t> order(n);
    for (std::size_t k = 0; k < n; ++k) order[k] = k;
    for (std::size_t k = n; k > 1; --k) {
        const auto j = static_cast<std::size_t>(rng.below(k));
        std::swap(order[k - 1], order[j]);
    }
    std::vector<std::size_t> position(n);
    for (std::size_t k = 0; k < n; ++k) position[order[k]] = k;
    return position;
}

std::vector<InterestPoint> permuted(const std::vector<InterestPoint>& points,
                                    const std::vector<std::size_t>& position) {
    std::vector<InterestPoint> out(points);
    for (std::size_t k = 0; k < points.size(); ++k) out[position[k]] = points[k];
    return out;
}

}  // namespace

SyntheticPair generate_synthetic(const SyntheticSpec& spec) {
    spec.validate();
    Rng rng(spec.seed);

    std::vector<InterestPoint> first;
    std::vector<InterestPoint> second;
    for (std::size_t k = 0; k < spec.n_inliers; ++k) first.push_back(random_point(rng, spec));

    for (const InterestPoint& p : first) {
        const InterestPoint moved = transformed(p, spec.transform);
        const double radius = spec.position_noise * std::sqrt(rng.uniform());
        const double angle = rng.uniform(-std::numbers::pi, std::numbers::pi);
        std::vector<double> descriptor(moved.descriptor().begin(), moved.descriptor().end());
        for (double& c : descriptor) c += spec.descriptor_noise * rng.normal();
        second.emplace_back(moved.x() + radius * std::cos(angle),
                            moved.y() + radius * std::sin(angle), moved.scale(),
                            moved.orientation(), std::move(descriptor));
    }
    for (std::size_t k = 0; k < spec.n_outliers_per_image; ++k) {
        first.push_back(random_point(rng, spec));
    }
    for (std::size_t k = 0; k < spec.n_outliers_per_image; ++k) {
        second.push_back(random_point(rng, spec));
    }

    const auto pos1 = shuffle_order(rng, first.size());
    const auto pos2 = shuffle_order(rng, second.size());
    std::vector<Correspondence> truth;
    for (std::size_t k = 0; k < spec.n_inliers; ++k) truth.push_back({pos1[k], pos2[k]});
    std::sort(truth.begin(), truth.end());

    const std::string tag = "synthetic-" + std::to_string(spec.seed);
    return SyntheticPair{ImageGraph(tag + "-1", permuted(first, pos1)),
                         ImageGraph(tag + "-2", permuted(second, pos2)), std::move(truth)};
}

}  // namespace qubomatch
