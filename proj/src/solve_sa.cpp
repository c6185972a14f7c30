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

#include <algorithm>
#include <chrono>
#include <cmath>
#include <thread>
#include <vector>

#include "qubomatch/errors.hpp"
#include "qubomatch/rng.hpp"
#include "qubomatch/solvers.hpp"

namespace qubomatch {

void AnnealSchedule::validate() const {
    if (sweeps < 1) throw InvalidArgument("anneal schedule needs at least one sweep");
    if (!(beta_initial > 0.0) || !std::isfinite(beta_initial)) {
        throw InvalidArgument("beta_initial must be positive");
    }
    if (!(beta_final >= beta_initial) || !std::isfinite(beta_final)) {
        throw InvalidArgument("beta_final must be at least beta_initial");
    }
    if (restarts < 1) throw InvalidArgument("anneal schedule needs at least one restart");
}

double AnnealSchedule::beta(std::size_t sweep) const {
    if (sweeps == 1) return beta_final;
    const double t = static_cast<double>(sweep) / static_cast<double>(sweeps - 1);
    return beta_initial * std::pow(beta_final / beta_initial, t);
}

namespace {

struct RestartOutcome {
    Assignment best;
    double best_energy = 0.0;
};

RestartOutcome anneal_once(const QuboInstance& q, const QuboAdjacency& adj,
                           const AnnealSchedule& schedule, std::size_t restart) {
    const std::size_t n = q.size();
    Rng rng = Rng::for_stream(schedule.seed, restart);
    Assignment x(n);
    double current = 0.0;
    RestartOutcome out{x, 0.0};

    for (std::size_t sweep = 0; sweep < schedule.sweeps; ++sweep) {
        const double beta = schedule.beta(sweep);
        for (std::size_t k = 0; k < n; ++k) {
            const double delta = adj.flip_delta(x, k);
            if (delta <= 0.0 || rng.uniform() < std::exp(-beta * delta)) {
                x.flip(k);
                current += delta;
                if (current < out.best_energy) {
                    out.best = x;
                    out.best_energy = current;
                }
            }
        }
        current = energy(q, x);
    }
    out.best_energy = energy(q, out.best);
    // the all-zero start is always a candidate
    if (out.best_energy > 0.0) {
        out.best = Assignment(n);
        out.best_energy = 0.0;
    }
    return out;
}

}  // namespace

SolveResult solve_sa(const QuboInstance& q, const AnnealSchedule& schedule, unsigned threads) {
    schedule.validate();
    const auto start = std::chrono::steady_clock::now();
    const QuboAdjacency adj(q);

    std::vector<RestartOutcome> outcomes(schedule.restarts);
    const std::size_t workers =
            std::clamp<std::size_t>(threads == 0 ? 1 : threads, 1, schedule.restarts);
    if (workers == 1) {
        for (std::size_t r = 0; r < schedule.restarts; ++r) {
            outcomes[r] = anneal_once(q, adj, schedule, r);
        }
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                for (std::size_t r = w; r < schedule.restarts; r += workers) {
                    outcomes[r] = anneal_once(q, adj, schedule, r);
                }
            });
        }
    }

    std::size_t winner = 0;
    for (std::size_t r = 1; r < outcomes.size(); ++r) {
        if (outcomes[r].best_energy < outcomes[winner].best_energy) winner = r;
    }
    SolveResult result{.best = std::move(outcomes[winner].best),
                       .best_energy = outcomes[winner].best_energy,
                       .proven_optimal = false,
                       .stats = {}};
    result.stats.evaluations =
            static_cast<std::uint64_t>(schedule.restarts) * schedule.sweeps * q.size();
    result.stats.restarts = schedule.restarts;
    result.stats.wall_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

}  // namespace qubomatch
