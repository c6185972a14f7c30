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

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qubomatch/conflict.hpp"
#include "qubomatch/graph_model.hpp"
#include "qubomatch/pipeline.hpp"
#include "qubomatch/qubo.hpp"

// File formats of the command-line tool. Writers are canonical: fixed key
// order, shortest round-trip number formatting, two-space indentation and a
// trailing newline, so write(read(write(x))) == write(x) byte for byte.
namespace qubomatch::io {

/// {"id": ..., "points": [{"x", "y", "scale", "orientation", "descriptor"}]}
std::string write_graph(const ImageGraph& graph);
/// Throws ParseError on malformed JSON, a missing field or an invalid point.
ImageGraph read_graph(std::string_view text);

/// {"pairs": [[i, alpha], ...]}
std::string write_truth(std::span<const Correspondence> pairs);
std::vector<Correspondence> read_truth(std::string_view text);

std::string write_match_result(const MatchResult& result);

/// {"variables": [{"index", "i", "alpha", "d"}]} mapping QUBO variable
/// index to its candidate pair.
std::string write_labels(const ConflictGraph& graph);

/// Undirected DOT graph; one node per candidate labeled "i-alpha", one edge
/// per conflict.
std::string write_dot(const ConflictGraph& graph);

/// One 0/1 per line.
std::string write_assignment(const Assignment& x);
Assignment read_assignment(std::string_view text);

/// Whole-file helpers; read_file throws ParseError if the file cannot be
/// opened, write_file throws Error.
std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace qubomatch::io
