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
#include <bit>
#include <cstdint>
#include <vector>

#include "qubomatch/solvers.hpp"

namespace qubomatch {

namespace {

class VertexSet {
  public:
    explicit VertexSet(std::size_t n) : words_((n + 63) / 64, 0) {}

    void insert(std::size_t v) { words_[v / 64] |= bit(v); }
    void erase(std::size_t v) { words_[v / 64] &= ~bit(v); }
    bool contains(std::size_t v) const { return (words_[v / 64] & bit(v)) != 0; }

    bool empty() const {
        return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
    }

    std::size_t count() const {
        std::size_t c = 0;
        for (std::uint64_t w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    std::size_t count_common(const VertexSet& other) const {
        std::size_t c = 0;
        for (std::size_t k = 0; k < words_.size(); ++k) {
            c += static_cast<std::size_t>(std::popcount(words_[k] & other.words_[k]));
        }
        return c;
    }

    VertexSet& operator&=(const VertexSet& other) {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= other.words_[k];
        return *this;
    }

    VertexSet& subtract(const VertexSet& other) {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~other.words_[k];
        return *this;
    }

    template <class Fn>
    void for_each(Fn&& fn) const {
        for (std::size_t k = 0; k < words_.size(); ++k) {
            std::uint64_t w = words_[k];
            while (w) {
                fn(k * 64 + static_cast<std::size_t>(std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

  private:
    static std::uint64_t bit(std::size_t v) { return std::uint64_t{1} << (v % 64); }

    std::vector<std::uint64_t> words_;
};

class BranchAndBound {
  public:
    explicit BranchAndBound(const ConflictGraph& graph) : n_(graph.size()) {
        adjacency_.assign(n_, VertexSet(n_));
        for (const auto& [u, v] : graph.edges()) {
            adjacency_[u].insert(v);
            adjacency_[v].insert(u);
        }
    }

    MisResult run() {
        VertexSet all(n_);
        for (std::size_t v = 0; v < n_; ++v) all.insert(v);
        expand(all);
        std::sort(best_.begin(), best_.end());
        return MisResult{best_, true, nodes_};
    }

  private:
    // Number of cliques in a greedy cover of `residual`, taken in index order.
    std::size_t clique_cover_size(const VertexSet& residual) const {
        std::vector<VertexSet> joinable;  // vertices adjacent to every member
        residual.for_each([&](std::size_t v) {
            for (VertexSet& clique : joinable) {
                if (clique.contains(v)) {
                    clique &= adjacency_[v];
                    return;
                }
            }
            VertexSet fresh = adjacency_[v];
            fresh &= residual;
            joinable.push_back(std::move(fresh));
        });
        return joinable.size();
    }

    void expand(VertexSet residual) {
        ++nodes_;
        if (residual.empty()) {
            if (current_.size() > best_.size()) best_ = current_;
            return;
        }
        if (current_.size() + clique_cover_size(residual) <= best_.size()) return;

        std::size_t pivot = n_;
        std::size_t pivot_degree = 0;
        residual.for_each([&](std::size_t v) {
            const std::size_t d = adjacency_[v].count_common(residual);
            if (pivot == n_ || d > pivot_degree) {
                pivot = v;
                pivot_degree = d;
            }
        });

        if (pivot_degree == 0) {
            const std::size_t before = current_.size();
            residual.for_each([&](std::size_t v) { current_.push_back(v); });
            if (current_.size() > best_.size()) best_ = current_;
            current_.resize(before);
            return;
        }

        VertexSet included = residual;
        included.subtract(adjacency_[pivot]);
        included.erase(pivot);
        current_.push_back(pivot);
        expand(std::move(included));
        current_.pop_back();

        residual.erase(pivot);
        expand(std::move(residual));
    }

    std::size_t n_;
    std::vector<VertexSet> adjacency_;
    std::vector<std::size_t> current_;
    std::vector<std::size_t> best_;
    std::uint64_t nodes_ = 0;
};

}  // namespace

MisResult solve_mis_bnb(const ConflictGraph& graph) {
    if (graph.size() == 0) return MisResult{{}, true, 0};
    return BranchAndBound(graph).run();
}

}  // namespace qubomatch
