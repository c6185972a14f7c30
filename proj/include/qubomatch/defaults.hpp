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

// Single home for the pipeline's default parameters. Every MatchResult echoes
// the values actually used.
namespace qubomatch::defaults {

inline constexpr double kFeatureThreshold = 0.8;
inline constexpr double kGeometryThreshold = 0.0;
inline constexpr std::size_t kVertexLimit = 512;

inline constexpr std::size_t kAnnealSweeps = 1000;
inline constexpr double kAnnealBetaInitial = 0.1;
inline constexpr double kAnnealBetaFinal = 10.0;
inline constexpr std::size_t kAnnealRestarts = 16;
inline constexpr std::uint64_t kSeed = 1;

inline constexpr std::size_t kExactMaxVariables = 25;

}  // namespace qubomatch::defaults
