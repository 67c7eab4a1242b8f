// Copyright 2026 The qobs authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "qobs/examples.hpp"
#include "qobs/lie.hpp"
#include "qobs/observability.hpp"
#include "qobs/scenario.hpp"
#include "qobs/serialize.hpp"
#include "qobs/tomography.hpp"

namespace {

struct CommonFlags {
    std::string scenario_path;
    std::string format = "json";
    std::string out_path;
    std::optional<double> tol;
    std::optional<int> max_k;
    std::optional<std::uint64_t> seed;
};

void add_output_flags(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("--format", flags.format, "Output format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
    cmd->add_option("--out", flags.out_path, "Write the report to this path instead of stdout");
}

void add_scenario_flags(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("--scenario", flags.scenario_path, "Scenario file (JSON)")->required();
    cmd->add_option("--tol", flags.tol, "Override the rank tolerance");
    cmd->add_option("--max-k", flags.max_k, "Override the measurement-step cap (0 = automatic)");
    cmd->add_option("--seed", flags.seed, "Override the sampling/noise seed");
    add_output_flags(cmd, flags);
}

// Flag and environment overrides are folded into the document before
// parsing, so load-time validation already runs under the effective
// tolerances. Precedence: flag, then QOBS_TOL, then the scenario file.
qobs::Scenario load_with_overrides(const CommonFlags& flags) {
    std::ifstream in(flags.scenario_path);
    if (!in) throw std::invalid_argument("cannot open scenario file: " + flags.scenario_path);
    qobs::Json doc;
    try {
        doc = qobs::Json::parse(in);
    } catch (const qobs::Json::parse_error& e) {
        throw std::invalid_argument(std::string("scenario parse error: ") + e.what());
    }

    std::optional<double> rank_tol = flags.tol;
    if (!rank_tol) {
        if (const char* env = std::getenv("QOBS_TOL")) {
            char* end = nullptr;
            const double v = std::strtod(env, &end);
            if (end == env || *end != '\0')
                throw std::invalid_argument("QOBS_TOL: expected a number, got '" +
                                            std::string(env) + "'");
            rank_tol = v;
        }
    }
    if (rank_tol) doc["analysis"]["tolerances"]["rank_tol"] = *rank_tol;
    if (flags.max_k) doc["analysis"]["max_k"] = *flags.max_k;
    if (flags.seed) doc["analysis"]["seed"] = *flags.seed;
    return qobs::scenario_from_json(doc);
}

void emit(const qobs::Json& doc, const CommonFlags& flags) {
    const std::string body =
        flags.format == "json" ? doc.dump(2) + "\n" : qobs::to_text(doc);
    if (flags.out_path.empty()) {
        std::cout << body;
        return;
    }
    std::ofstream out(flags.out_path);
    if (!out) throw std::invalid_argument("cannot open output file: " + flags.out_path);
    out << body;
}

const qobs::DensityState& named_state(const qobs::Scenario& sc, const std::string& name,
                                      bool match_system_dim = true) {
    auto it = sc.states.find(name);
    if (it == sc.states.end()) throw std::invalid_argument("states." + name + ": unknown state");
    if (match_system_dim && it->second.dim() != sc.system.dim_n)
        throw std::invalid_argument("states." + name + ": dimension " +
                                    std::to_string(it->second.dim()) +
                                    " does not match system dimension " +
                                    std::to_string(sc.system.dim_n));
    return it->second;
}

qobs::Json cmd_analyze(const CommonFlags& flags) {
    const qobs::Scenario sc = load_with_overrides(flags);
    const int max_k = qobs::effective_max_k(sc.analysis, sc.system.dim_n);
    const qobs::ObservabilityReport report =
        qobs::analyze(sc.system, max_k, sc.analysis.tol);
    qobs::Json doc;
    if (!sc.system.label.empty()) doc["label"] = sc.system.label;
    doc.update(qobs::to_json(report));
    return doc;
}

qobs::Json cmd_distinguish(const CommonFlags& flags, const std::string& state_a,
                           const std::string& state_b, int k_flag) {
    const qobs::Scenario sc = load_with_overrides(flags);
    const qobs::DensityState& a = named_state(sc, state_a);
    const qobs::DensityState& b = named_state(sc, state_b);
    const int k = k_flag > 0 ? k_flag : qobs::effective_max_k(sc.analysis, sc.system.dim_n);
    const qobs::IndistinguishabilityVerdict verdict =
        qobs::indistinguishable(sc.system, qobs::to_traceless(a).matrix,
                                qobs::to_traceless(b).matrix, k, sc.analysis.tol);
    qobs::Json doc;
    doc["state_a"] = state_a;
    doc["state_b"] = state_b;
    doc.update(qobs::to_json(verdict));
    return doc;
}

qobs::Json cmd_simulate(const CommonFlags& flags, const std::string& script_name,
                        const std::string& state_name) {
    const qobs::Scenario sc = load_with_overrides(flags);
    auto it = sc.scripts.find(script_name);
    if (it == sc.scripts.end())
        throw std::invalid_argument("scripts." + script_name + ": unknown script");
    const qobs::DensityState& rho0 = named_state(sc, state_name);
    const qobs::MeasurementRecord rec =
        qobs::run_experiment(rho0, sc.system, it->second, sc.analysis.tol);
    qobs::Json doc;
    doc["script"] = script_name;
    doc["state"] = state_name;
    doc.update(qobs::to_json(rec));
    return doc;
}

qobs::Json cmd_reconstruct(const CommonFlags& flags, const std::string& mode) {
    const qobs::Scenario sc = load_with_overrides(flags);
    if (!sc.tomography)
        throw std::invalid_argument("tomography: section required by the reconstruct command");
    const qobs::TomographySetup& setup = *sc.tomography;
    const qobs::Tolerance& tol = sc.analysis.tol;
    qobs::Json doc;
    doc["mode"] = mode;

    if (mode == "permutation") {
        if (setup.state.empty())
            throw std::invalid_argument("tomography.state: required for permutation mode");
        const qobs::DensityState& rho0 = named_state(sc, setup.state);
        const qobs::ComplexMatrix frame =
            setup.frame ? *setup.frame
                        : qobs::ComplexMatrix(qobs::ComplexMatrix::Identity(sc.system.dim_n,
                                                                            sc.system.dim_n));
        const qobs::PermutationDesign design =
            qobs::design_permutation_experiment(sc.system.observable, tol);
        const qobs::ReconstructionResult rec = qobs::run_permutation_tomography(
            rho0, frame, sc.system, design, tol, setup.noise_sigma, sc.analysis.seed);
        doc["design"] = qobs::to_json(design);
        doc["result"] = qobs::to_json(rec);
        return doc;
    }

    if (setup.unknown_state.empty() || setup.known_state.empty())
        throw std::invalid_argument(
            "tomography.unknown_state / tomography.known_state: required for ancilla mode");
    const qobs::DensityState& unknown = named_state(sc, setup.unknown_state, false);
    const qobs::DensityState& known = named_state(sc, setup.known_state, false);
    std::vector<qobs::ComplexMatrix> probes = setup.probes;
    if (probes.empty()) probes = qobs::default_ancilla_probes(unknown.dim(), known, tol);
    const qobs::AncillaResult res = qobs::ancilla_tomography(
        unknown, known, sc.system.observable, probes, sc.system, tol);
    doc["num_probes"] = probes.size();
    doc["design"] = qobs::to_json(qobs::design_permutation_experiment(sc.system.observable, tol));
    doc["result"] = qobs::to_json(res);
    return doc;
}

qobs::Json cmd_examples(const std::string& name) {
    if (name.empty()) {
        qobs::Json doc;
        doc["examples"] = qobs::example_names();
        return doc;
    }
    return qobs::scenario_to_json(qobs::example_scenario(name));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Observability analysis and measurement simulation for bilinear "
                 "quantum control systems"};
    app.require_subcommand(1);

    CommonFlags flags;

    CLI::App* analyze = app.add_subcommand(
        "analyze", "Lie-algebra and observability-space verdicts for the scenario system");
    add_scenario_flags(analyze, flags);

    std::string state_a, state_b;
    int k_flag = 0;
    CLI::App* distinguish = app.add_subcommand(
        "distinguish", "Decide whether two named states are k-step indistinguishable");
    add_scenario_flags(distinguish, flags);
    distinguish->add_option("--state-a", state_a, "First state name")->required();
    distinguish->add_option("--state-b", state_b, "Second state name")->required();
    distinguish->add_option("--k", k_flag, "Number of measurement steps (0 = automatic)");

    std::string script_name, state_name;
    CLI::App* simulate =
        app.add_subcommand("simulate", "Run a named experiment script on a named state");
    add_scenario_flags(simulate, flags);
    simulate->add_option("--script", script_name, "Script name")->required();
    simulate->add_option("--state", state_name, "Initial state name")->required();

    std::string mode;
    CLI::App* reconstruct = app.add_subcommand(
        "reconstruct", "Recover state parameters from simulated measurement data");
    add_scenario_flags(reconstruct, flags);
    reconstruct->add_option("--mode", mode, "Reconstruction mode")
        ->check(CLI::IsMember({"permutation", "ancilla"}))
        ->required();

    std::string example_name;
    CLI::App* examples = app.add_subcommand(
        "examples", "List built-in example scenarios, or print one by name");
    examples->add_option("name", example_name, "Example name (omit to list)");
    add_output_flags(examples, flags);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        qobs::Json doc;
        if (analyze->parsed()) doc = cmd_analyze(flags);
        else if (distinguish->parsed()) doc = cmd_distinguish(flags, state_a, state_b, k_flag);
        else if (simulate->parsed()) doc = cmd_simulate(flags, script_name, state_name);
        else if (reconstruct->parsed()) doc = cmd_reconstruct(flags, mode);
        else doc = cmd_examples(example_name);
        emit(doc, flags);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
