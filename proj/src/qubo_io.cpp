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

#include <array>
#include <charconv>
#include <cmath>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qubomatch/errors.hpp"
#include "qubomatch/qubo.hpp"

namespace qubomatch {

namespace {

std::vector<std::string_view> split_whitespace(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t pos = 0;
    while (pos < line.size()) {
        while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
        const std::size_t start = pos;
        while (pos < line.size() && line[pos] != ' ' && line[pos] != '\t') ++pos;
        if (pos > start) tokens.push_back(line.substr(start, pos - start));
    }
    return tokens;
}

std::optional<std::size_t> parse_index(std::string_view token) {
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) return std::nullopt;
    return value;
}

std::optional<double> parse_real(std::string_view token) {
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size() || !std::isfinite(value)) {
        return std::nullopt;
    }
    return value;
}

struct ProgramLine {
    std::size_t max_nodes;
    std::size_t n_nodes;
    std::size_t n_couplers;
    std::size_t line;
};

}  // namespace

std::string format_real(double value) {
    std::array<char, 32> buf{};
    const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    return std::string(buf.data(), ptr);
}

std::string write_qubo(const QuboInstance& q, std::span<const std::string> comments) {
    std::string out;
    for (const std::string& c : comments) out += "c " + c + '\n';
    out += "p qubo 0 " + std::to_string(q.size()) + ' ' + std::to_string(q.num_linear()) + ' ' +
           std::to_string(q.num_quadratic()) + '\n';
    for (const bool diagonal : {true, false}) {
        for (const auto& [key, value] : q.terms()) {
            if ((key.first == key.second) != diagonal) continue;
            out += std::to_string(key.first) + ' ' + std::to_string(key.second) + ' ' +
                   format_real(value) + '\n';
        }
    }
    return out;
}

QuboInstance read_qubo(std::string_view text) {
    std::optional<ProgramLine> program;
    QuboInstance q;
    std::set<QuboInstance::Key> seen;
    std::size_t diagonal_lines = 0;
    std::size_t coupler_lines = 0;
    std::size_t line_no = 0;

    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

        const auto tokens = split_whitespace(line);
        if (tokens.empty()) continue;
        if (tokens[0].front() == 'c') continue;

        if (tokens[0] == "p") {
            if (program) throw ParseError("duplicate program line", line_no);
            if (tokens.size() != 6 || tokens[1] != "qubo" || tokens[2] != "0") {
                throw ParseError("expected 'p qubo 0 <maxNodes> <nNodes> <nCouplers>'", line_no);
            }
            const auto max_nodes = parse_index(tokens[3]);
            const auto n_nodes = parse_index(tokens[4]);
            const auto n_couplers = parse_index(tokens[5]);
            if (!max_nodes || !n_nodes || !n_couplers) {
                throw ParseError("program line counts must be nonnegative integers", line_no);
            }
            if (*n_nodes > *max_nodes) {
                throw ParseError("nNodes exceeds maxNodes", line_no);
            }
            program = ProgramLine{*max_nodes, *n_nodes, *n_couplers, line_no};
            q = QuboInstance(*max_nodes);
            continue;
        }

        if (!program) throw ParseError("term before program line", line_no);
        if (tokens.size() != 3) throw ParseError("expected 'i j value'", line_no);
        const auto i = parse_index(tokens[0]);
        const auto j = parse_index(tokens[1]);
        const auto value = parse_real(tokens[2]);
        if (!i || !j) throw ParseError("indices must be nonnegative integers", line_no);
        if (!value) throw ParseError("invalid coefficient '" + std::string(tokens[2]) + "'", line_no);
        if (*i >= program->max_nodes || *j >= program->max_nodes) {
            throw ParseError("index out of range for " + std::to_string(program->max_nodes) +
                                     " variables",
                             line_no);
        }
        if (*i > *j) throw ParseError("coupler must satisfy i < j", line_no);
        if (!seen.insert({*i, *j}).second) {
            throw ParseError("duplicate pair (" + std::to_string(*i) + ", " + std::to_string(*j) + ")",
                             line_no);
        }
        (*i == *j ? diagonal_lines : coupler_lines) += 1;
        q.set(*i, *j, *value);
    }

    if (!program) throw ParseError("missing program line");
    if (diagonal_lines != program->n_nodes) {
        throw ParseError("program line declares " + std::to_string(program->n_nodes) +
                                 " diagonal terms, found " + std::to_string(diagonal_lines),
                         program->line);
    }
    if (coupler_lines != program->n_couplers) {
        throw ParseError("program line declares " + std::to_string(program->n_couplers) +
                                 " couplers, found " + std::to_string(coupler_lines),
                         program->line);
    }
    return q;
}

}  // namespace qubomatch
