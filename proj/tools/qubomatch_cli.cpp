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

// qubomatch: image graphs -> conflict graph -> QUBO -> matches.
//
// Exit codes: 0 success, 1 usage error, 2 parse error, 3 infeasible solution.

#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "qubomatch/detector.hpp"
#include "qubomatch/errors.hpp"
#include "qubomatch/io.hpp"
#include "qubomatch/pipeline.hpp"
#include "qubomatch/qubo.hpp"
#include "qubomatch/solvers.hpp"

namespace {

using namespace qubomatch;

enum ExitCode : int { kOk = 0, kUsage = 1, kParse = 2, kInfeasible = 3 };

struct MatchOptions {
    std::string g1;
    std::string g2;
    std::string output;
    std::string solver = "bnb";
    MatchParams params{};
    AnnealSchedule schedule{};
    unsigned threads = 1;
};

void add_pair_inputs(CLI::App* cmd, MatchOptions& o) {
    cmd->add_option("g1", o.g1, "First image graph (JSON)")->required()->check(CLI::ExistingFile);
    cmd->add_option("g2", o.g2, "Second image graph (JSON)")->required()->check(CLI::ExistingFile);
}

void add_match_params(CLI::App* cmd, MatchOptions& o) {
    cmd->add_option("--tfeat", o.params.t_feat, "Candidate admission threshold")
            ->capture_default_str();
    cmd->add_option("--tgeom", o.params.t_geom, "Geometric conflict threshold")
            ->capture_default_str();
    cmd->add_option("--limit", o.params.limit, "Maximum conflict-graph vertices")
            ->capture_default_str();
    cmd->add_option("--w-dist", o.params.weights.dist)->capture_default_str();
    cmd->add_option("--w-bearing", o.params.weights.bearing)->capture_default_str();
    cmd->add_option("--w-scale", o.params.weights.scale)->capture_default_str();
    cmd->add_option("--w-orient", o.params.weights.orient)->capture_default_str();
    cmd->add_option("--r0", o.params.weights.r0, "Residual mapped to consistency -1")
            ->capture_default_str();
}

void add_anneal_options(CLI::App* cmd, MatchOptions& o) {
    cmd->add_option("--seed", o.schedule.seed)->capture_default_str();
    cmd->add_option("--sweeps", o.schedule.sweeps)->capture_default_str();
    cmd->add_option("--beta-initial", o.schedule.beta_initial)->capture_default_str();
    cmd->add_option("--beta-final", o.schedule.beta_final)->capture_default_str();
    cmd->add_option("--restarts", o.schedule.restarts)->capture_default_str();
    cmd->add_option("--threads", o.threads, "Annealing restarts run in parallel")
            ->capture_default_str();
}

ConflictGraph load_conflict_graph(const MatchOptions& o) {
    const ImageGraph g1 = io::read_graph(io::read_file(o.g1));
    const ImageGraph g2 = io::read_graph(io::read_file(o.g2));
    return build_conflict_graph(g1, g2, generate_candidates(g1, g2, o.params), o.params);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Image matching as maximum independent set / QUBO"};
    app.require_subcommand(1);

    // detect
    std::string image_path;
    std::string detect_out;
    std::string graph_id;
    DetectorParams detector;
    auto* detect_cmd = app.add_subcommand("detect", "Detect interest points in a PGM image");
    detect_cmd->add_option("image", image_path, "PGM image (P2 or P5)")
            ->required()
            ->check(CLI::ExistingFile);
    detect_cmd->add_option("-o,--output", detect_out, "Graph JSON")->required();
    detect_cmd->add_option("--id", graph_id, "Graph id (default: image path)");
    detect_cmd->add_option("--n-scales", detector.n_scales)->capture_default_str();
    detect_cmd->add_option("--sigma0", detector.sigma0)->capture_default_str();
    detect_cmd->add_option("--scale-step", detector.scale_step)->capture_default_str();
    detect_cmd->add_option("--threshold", detector.response_threshold)->capture_default_str();
    detect_cmd->add_option("--max-points", detector.max_points)->capture_default_str();
    detect_cmd->add_option("--bins", detector.descriptor_bins)->capture_default_str();

    // gen
    SyntheticSpec synth;
    std::string gen_prefix;
    auto* gen_cmd = app.add_subcommand("gen", "Generate a synthetic graph pair with ground truth");
    gen_cmd->add_option("--inliers", synth.n_inliers)->capture_default_str();
    gen_cmd->add_option("--outliers", synth.n_outliers_per_image)->capture_default_str();
    gen_cmd->add_option("--seed", synth.seed)->capture_default_str();
    gen_cmd->add_option("--rotation", synth.transform.rotation, "Radians")->capture_default_str();
    gen_cmd->add_option("--scale", synth.transform.scale)->capture_default_str();
    gen_cmd->add_option("--tx", synth.transform.tx)->capture_default_str();
    gen_cmd->add_option("--ty", synth.transform.ty)->capture_default_str();
    gen_cmd->add_option("--noise", synth.position_noise, "Position noise radius (pixels)")
            ->capture_default_str();
    gen_cmd->add_option("--desc-noise", synth.descriptor_noise)->capture_default_str();
    gen_cmd->add_option("--field", synth.field_size)->capture_default_str();
    gen_cmd->add_option("--dim", synth.descriptor_dim)->capture_default_str();
    gen_cmd->add_option("-o,--output", gen_prefix,
                        "Prefix; writes <prefix>_1.json, <prefix>_2.json, <prefix>_truth.json")
            ->required();

    // match
    MatchOptions match;
    auto* match_cmd = app.add_subcommand("match", "Match two image graphs");
    add_pair_inputs(match_cmd, match);
    add_match_params(match_cmd, match);
    add_anneal_options(match_cmd, match);
    match_cmd->add_option("--solver", match.solver)
            ->check(CLI::IsMember({"exact", "bnb", "sa"}))
            ->capture_default_str();
    match_cmd->add_option("-o,--output", match.output, "Match result JSON")->required();

    // export-qubo
    MatchOptions export_qubo;
    auto* export_qubo_cmd =
            app.add_subcommand("export-qubo", "Write the MIS QUBO of two graphs in qbsolv format");
    add_pair_inputs(export_qubo_cmd, export_qubo);
    add_match_params(export_qubo_cmd, export_qubo);
    export_qubo_cmd->add_option("-o,--output", export_qubo.output, "QUBO file")->required();
    std::string labels_path;
    export_qubo_cmd->add_option("--labels", labels_path,
                                "Variable label sidecar (default: <output>.labels.json)");

    // solve
    std::string qubo_path;
    std::string solve_out;
    MatchOptions solve;
    solve.solver = "sa";
    auto* solve_cmd = app.add_subcommand("solve", "Solve a QUBO file");
    solve_cmd->add_option("qubo", qubo_path, "QUBO file")->required()->check(CLI::ExistingFile);
    solve_cmd->add_option("--solver", solve.solver)
            ->check(CLI::IsMember({"exact", "sa"}))
            ->capture_default_str();
    add_anneal_options(solve_cmd, solve);
    solve_cmd->add_option("-o,--output", solve_out, "Assignment, one 0/1 per line")->required();

    // decode
    MatchOptions decode;
    std::string assignment_path;
    auto* decode_cmd = app.add_subcommand(
            "decode", "Decode an externally produced assignment into matches");
    add_pair_inputs(decode_cmd, decode);
    decode_cmd->add_option("assignment", assignment_path, "Assignment, one 0/1 per line")
            ->required()
            ->check(CLI::ExistingFile);
    add_match_params(decode_cmd, decode);
    decode_cmd->add_option("-o,--output", decode.output, "Match result JSON")->required();

    // export-dot
    MatchOptions dot;
    auto* dot_cmd = app.add_subcommand("export-dot", "Write the conflict graph in DOT format");
    add_pair_inputs(dot_cmd, dot);
    add_match_params(dot_cmd, dot);
    dot_cmd->add_option("-o,--output", dot.output, "DOT file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*detect_cmd) {
            const RasterImage image = read_pgm_file(image_path);
            const ImageGraph graph(graph_id.empty() ? image_path : graph_id,
                                   detect(image, detector));
            io::write_file(detect_out, io::write_graph(graph));
            std::cout << "detected " << graph.size() << " interest points\n";
        } else if (*gen_cmd) {
            const SyntheticPair pair = generate_synthetic(synth);
            io::write_file(gen_prefix + "_1.json", io::write_graph(pair.first));
            io::write_file(gen_prefix + "_2.json", io::write_graph(pair.second));
            io::write_file(gen_prefix + "_truth.json", io::write_truth(pair.truth));
            std::cout << "wrote " << pair.first.size() << " + " << pair.second.size()
                      << " points, " << pair.truth.size() << " true pairs\n";
        } else if (*match_cmd) {
            const ImageGraph g1 = io::read_graph(io::read_file(match.g1));
            const ImageGraph g2 = io::read_graph(io::read_file(match.g2));
            const SolverOptions solver{parse_solver_kind(match.solver), match.schedule,
                                       match.threads};
            const MatchResult result = match_images(g1, g2, match.params, solver);
            io::write_file(match.output, io::write_match_result(result));
            std::cout << "similarity " << result.similarity << " (" << result.solver
                      << (result.proven_optimal ? ", optimal" : "") << ")\n";
        } else if (*export_qubo_cmd) {
            const ConflictGraph graph = load_conflict_graph(export_qubo);
            const QuboInstance q = mis_to_qubo(graph);
            const std::string comments[] = {
                    "MIS encoding: " + std::to_string(graph.size()) + " candidates, " +
                    std::to_string(graph.edges().size()) + " conflicts"};
            io::write_file(export_qubo.output, write_qubo(q, comments));
            io::write_file(labels_path.empty() ? export_qubo.output + ".labels.json" : labels_path,
                           io::write_labels(graph));
            std::cout << "wrote " << q.size() << " variables, " << q.num_quadratic()
                      << " couplers\n";
        } else if (*solve_cmd) {
            const QuboInstance q = read_qubo(io::read_file(qubo_path));
            const SolveResult result = solve.solver == "exact"
                                               ? solve_exact(q)
                                               : solve_sa(q, solve.schedule, solve.threads);
            io::write_file(solve_out, io::write_assignment(result.best));
            std::cout << "energy " << format_real(result.best_energy)
                      << (result.proven_optimal ? " (optimal)" : "") << '\n';
        } else if (*decode_cmd) {
            const ConflictGraph graph = load_conflict_graph(decode);
            const Assignment x = io::read_assignment(io::read_file(assignment_path));
            const MatchResult result = decode_matches(graph, x, {"external", false});
            io::write_file(decode.output, io::write_match_result(result));
            std::cout << "similarity " << result.similarity << '\n';
        } else if (*dot_cmd) {
            io::write_file(dot.output, io::write_dot(load_conflict_graph(dot)));
        }
    } catch (const InfeasibleSolution& e) {
        std::cerr << "infeasible solution: " << e.what() << '\n';
        return kInfeasible;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kParse;
    } catch (const DegenerateGeometry& e) {
        std::cerr << "invalid input geometry: " << e.what() << '\n';
        return kParse;
    } catch (const DimensionMismatch& e) {
        std::cerr << "incompatible inputs: " << e.what() << '\n';
        return kParse;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kOk;
}
