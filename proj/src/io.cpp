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

#include "qubomatch/io.hpp"

#include <fstream>
#include <iterator>
#include <string>

#include <json.hpp>

#include "qubomatch/errors.hpp"

namespace qubomatch::io {

using Json = nlohmann::ordered_json;

namespace {

constexpr int kIndent = 2;

std::string dump(const Json& doc) { return doc.dump(kIndent) + '\n'; }

Json parse_json(std::string_view text) {
    try {
        return Json::parse(text.begin(), text.end());
    } catch (const Json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

const Json& field(const Json& obj, const char* key, const std::string& where) {
    if (!obj.is_object()) throw ParseError(where + " must be an object");
    const auto it = obj.find(key);
    if (it == obj.end()) throw ParseError(where + " is missing \"" + key + "\"");
    return *it;
}

double number(const Json& obj, const char* key, const std::string& where) {
    const Json& v = field(obj, key, where);
    if (!v.is_number()) throw ParseError(where + "." + key + " must be a number");
    return v.get<double>();
}

std::size_t index(const Json& v, const std::string& where) {
    if (!v.is_number_unsigned()) throw ParseError(where + " must be a nonnegative integer");
    return v.get<std::size_t>();
}

Json params_json(const MatchParams& p) {
    return Json{{"t_feat", p.t_feat},
                {"t_geom", p.t_geom},
                {"limit", p.limit},
                {"weights",
                 Json{{"dist", p.weights.dist},
                      {"bearing", p.weights.bearing},
                      {"scale", p.weights.scale},
                      {"orient", p.weights.orient},
                      {"r0", p.weights.r0}}}};
}

}  // namespace

std::string write_graph(const ImageGraph& graph) {
    Json points = Json::array();
    for (const InterestPoint& p : graph.points()) {
        Json descriptor = Json::array();
        for (double v : p.descriptor()) descriptor.push_back(v);
        points.push_back(Json{{"x", p.x()},
                              {"y", p.y()},
                              {"scale", p.scale()},
                              {"orientation", p.orientation()},
                              {"descriptor", std::move(descriptor)}});
    }
    return dump(Json{{"id", graph.id()}, {"points", std::move(points)}});
}

ImageGraph read_graph(std::string_view text) {
    const Json doc = parse_json(text);
    const Json& id = field(doc, "id", "graph");
    if (!id.is_string()) throw ParseError("graph.id must be a string");
    const Json& points = field(doc, "points", "graph");
    if (!points.is_array()) throw ParseError("graph.points must be an array");

    std::vector<InterestPoint> out;
    out.reserve(points.size());
    for (std::size_t k = 0; k < points.size(); ++k) {
        const std::string where = "points[" + std::to_string(k) + "]";
        const Json& p = points[k];
        const Json& descriptor = field(p, "descriptor", where);
        if (!descriptor.is_array()) throw ParseError(where + ".descriptor must be an array");
        std::vector<double> values;
        values.reserve(descriptor.size());
        for (const Json& v : descriptor) {
            if (!v.is_number()) throw ParseError(where + ".descriptor must hold numbers");
            values.push_back(v.get<double>());
        }
        try {
            out.emplace_back(number(p, "x", where), number(p, "y", where),
                             number(p, "scale", where), number(p, "orientation", where),
                             std::move(values));
        } catch (const InvalidArgument& e) {
            throw ParseError(where + ": " + e.what());
        }
    }
    try {
        return ImageGraph(id.get<std::string>(), std::move(out));
    } catch (const DimensionMismatch& e) {
        throw ParseError(e.what());
    }
}

std::string write_truth(std::span<const Correspondence> pairs) {
    Json list = Json::array();
    for (const Correspondence& c : pairs) list.push_back(Json::array({c.i, c.alpha}));
    return dump(Json{{"pairs", std::move(list)}});
}

std::vector<Correspondence> read_truth(std::string_view text) {
    const Json doc = parse_json(text);
    const Json& pairs = field(doc, "pairs", "truth");
    if (!pairs.is_array()) throw ParseError("truth.pairs must be an array");
    std::vector<Correspondence> out;
    for (std::size_t k = 0; k < pairs.size(); ++k) {
        const std::string where = "pairs[" + std::to_string(k) + "]";
        const Json& p = pairs[k];
        if (!p.is_array() || p.size() != 2) throw ParseError(where + " must be [i, alpha]");
        out.push_back({index(p[0], where), index(p[1], where)});
    }
    return out;
}

std::string write_match_result(const MatchResult& result) {
    Json pairs = Json::array();
    for (const Correspondence& c : result.pairs) pairs.push_back(Json::array({c.i, c.alpha}));
    Json doc{{"solver", result.solver},
             {"proven_optimal", result.proven_optimal},
             {"similarity", result.similarity},
             {"pairs", std::move(pairs)},
             {"feature_mass", result.feature_mass},
             {"num_candidates", result.num_candidates},
             {"num_conflicts", result.num_conflicts}};
    doc["best_energy"] = result.best_energy ? Json(*result.best_energy) : Json(nullptr);
    doc["params"] = params_json(result.params);
    if (result.schedule) {
        doc["schedule"] = Json{{"sweeps", result.schedule->sweeps},
                               {"beta_initial", result.schedule->beta_initial},
                               {"beta_final", result.schedule->beta_final},
                               {"restarts", result.schedule->restarts},
                               {"seed", result.schedule->seed}};
    }
    return dump(doc);
}

std::string write_labels(const ConflictGraph& graph) {
    Json vars = Json::array();
    for (std::size_t k = 0; k < graph.size(); ++k) {
        const MatchCandidate& c = graph.vertices()[k];
        vars.push_back(Json{{"index", k}, {"i", c.i}, {"alpha", c.alpha}, {"d", c.d}});
    }
    return dump(Json{{"variables", std::move(vars)}, {"params", params_json(graph.params())}});
}

std::string write_dot(const ConflictGraph& graph) {
    std::string out = "graph conflict {\n";
    for (std::size_t k = 0; k < graph.size(); ++k) {
        const MatchCandidate& c = graph.vertices()[k];
        out += "  v" + std::to_string(k) + " [label=\"" + std::to_string(c.i) + "-" +
               std::to_string(c.alpha) + "\\nd=" + format_real(c.d) + "\"];\n";
    }
    for (const auto& [u, v] : graph.edges()) {
        out += "  v" + std::to_string(u) + " -- v" + std::to_string(v) + ";\n";
    }
    out += "}\n";
    return out;
}

std::string write_assignment(const Assignment& x) {
    std::string out;
    out.reserve(2 * x.size());
    for (std::uint8_t b : x.bits()) {
        out += b ? '1' : '0';
        out += '\n';
    }
    return out;
}

Assignment read_assignment(std::string_view text) {
    std::vector<std::uint8_t> bits;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.remove_suffix(1);
        while (!line.empty() && line.front() == ' ') line.remove_prefix(1);
        if (line.empty()) continue;
        if (line != "0" && line != "1") throw ParseError("expected 0 or 1", line_no);
        bits.push_back(line == "1" ? 1 : 0);
    }
    return Assignment(std::move(bits));
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return std::string{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file(const std::string& path, std::string_view contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write '" + path + "'");
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out) throw Error("failed writing '" + path + "'");
}

}  // namespace qubomatch::io
