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

#include "qobs/scenario.hpp"

#include <fstream>
#include <stdexcept>

namespace qobs {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
    throw std::invalid_argument(path + ": " + what);
}

const Json& field(const Json& j, const std::string& key, const std::string& path) {
    if (!j.is_object()) fail(path, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) fail(path + "." + key, "missing required field");
    return *it;
}

const Json* optional_field(const Json& j, const std::string& key) {
    if (!j.is_object()) return nullptr;
    auto it = j.find(key);
    return it == j.end() ? nullptr : &*it;
}

double number_at(const Json& j, const std::string& path) {
    if (!j.is_number()) fail(path, "expected a number");
    return j.get<double>();
}

int int_at(const Json& j, const std::string& path) {
    if (!j.is_number_integer()) fail(path, "expected an integer");
    return j.get<int>();
}

bool bool_at(const Json& j, const std::string& path) {
    if (!j.is_boolean()) fail(path, "expected a boolean");
    return j.get<bool>();
}

std::string string_at(const Json& j, const std::string& path) {
    if (!j.is_string()) fail(path, "expected a string");
    return j.get<std::string>();
}

// Re-throws validation errors from the type constructors with the document
// path prepended, so load failures always name the offending field.
template <typename Fn>
auto at_path(const std::string& path, Fn&& fn) -> decltype(fn()) {
    try {
        return fn();
    } catch (const std::invalid_argument& e) {
        fail(path, e.what());
    }
}

Tolerance tolerance_from_json(const Json& j, const std::string& path) {
    Tolerance tol;
    if (const Json* v = optional_field(j, "rank_tol")) tol.rank_tol = number_at(*v, path + ".rank_tol");
    if (const Json* v = optional_field(j, "eig_tol")) tol.eig_tol = number_at(*v, path + ".eig_tol");
    if (const Json* v = optional_field(j, "sim_tol")) tol.sim_tol = number_at(*v, path + ".sim_tol");
    at_path(path, [&] { tol.validate(); });
    return tol;
}

ControlSystem system_from_json(const Json& j, const Tolerance& tol) {
    const std::string path = "system";
    const Json* gens_j = optional_field(j, "generators");
    const Json* hams_j = optional_field(j, "hamiltonians");
    if (!j.is_object()) fail(path, "expected an object");
    if ((gens_j == nullptr) == (hams_j == nullptr))
        fail(path, "provide exactly one of 'generators' (skew-Hermitian) or "
                   "'hamiltonians' (Hermitian)");
    const Json& list = gens_j ? *gens_j : *hams_j;
    const std::string list_path = path + (gens_j ? ".generators" : ".hamiltonians");
    if (!list.is_array() || list.empty()) fail(list_path, "expected a non-empty array");

    std::vector<ComplexMatrix> generators;
    generators.reserve(list.size());
    for (std::size_t i = 0; i < list.size(); ++i) {
        ComplexMatrix m =
            matrix_from_json(list[i], list_path + "[" + std::to_string(i) + "]");
        generators.push_back(gens_j ? m : ComplexMatrix(Complex(0.0, 1.0) * m));
    }
    const ComplexMatrix s = matrix_from_json(field(j, "observable", path), path + ".observable");
    std::string label;
    if (const Json* v = optional_field(j, "label")) label = string_at(*v, path + ".label");
    return at_path(path, [&] { return make_control_system(generators, s, tol, label); });
}

DensityState state_from_json(const Json& j, const std::string& path, const Tolerance& tol) {
    const ComplexMatrix m = matrix_from_json(field(j, "matrix", path), path + ".matrix");
    std::string convention = "trace_one";
    if (const Json* v = optional_field(j, "convention"))
        convention = string_at(*v, path + ".convention");
    if (convention == "trace_one")
        return at_path(path, [&] { return make_density_state(m, tol); });
    if (convention != "traceless_shifted")
        fail(path + ".convention", "expected 'trace_one' or 'traceless_shifted'");
    DensityState s;
    s.matrix = m;
    s.convention = StateConvention::traceless_shifted;
    if (const Json* v = optional_field(j, "shift_record"))
        s.shift_record = number_at(*v, path + ".shift_record");
    else
        s.shift_record = 1.0 / static_cast<double>(m.rows());
    at_path(path, [&] { validate_density_state(s, tol); });
    return s;
}

KrausChannel channel_from_json(const Json& j, const std::string& path, const Tolerance& tol) {
    KrausChannel ch;
    const Json& ops = field(j, "operators", path);
    if (!ops.is_array() || ops.empty())
        fail(path + ".operators", "expected a non-empty array of matrices");
    for (std::size_t i = 0; i < ops.size(); ++i)
        ch.operators.push_back(
            matrix_from_json(ops[i], path + ".operators[" + std::to_string(i) + "]"));
    if (const Json* v = optional_field(j, "labels")) {
        if (!v->is_array()) fail(path + ".labels", "expected an array of strings");
        for (std::size_t i = 0; i < v->size(); ++i)
            ch.labels.push_back(string_at((*v)[i], path + ".labels[" + std::to_string(i) + "]"));
    }
    at_path(path, [&] { validate_kraus(ch, tol); });
    return ch;
}

ExperimentScript script_from_json(const Json& j, const std::string& path,
                                  const std::map<std::string, KrausChannel>& channels,
                                  std::string& channel_name) {
    ExperimentScript script;
    const Json& segs = field(j, "segments", path);
    if (!segs.is_array() || segs.empty())
        fail(path + ".segments", "expected a non-empty array of segments");
    for (std::size_t i = 0; i < segs.size(); ++i) {
        const std::string seg_path = path + ".segments[" + std::to_string(i) + "]";
        const Json& sj = segs[i];
        if (!sj.is_object()) fail(seg_path, "expected an object");
        ScriptSegment seg;
        const Json* dur = optional_field(sj, "duration");
        const Json* uni = optional_field(sj, "unitary");
        if ((dur == nullptr) == (uni == nullptr))
            fail(seg_path, "provide exactly one of 'duration' (with 'controls') or 'unitary'");
        if (dur) {
            seg.duration = number_at(*dur, seg_path + ".duration");
            const Json& ctl = field(sj, "controls", seg_path);
            const std::vector<double> u = reals_from_json(ctl, seg_path + ".controls");
            seg.controls = u;
            if (const Json* v = optional_field(sj, "substeps"))
                seg.substeps = int_at(*v, seg_path + ".substeps");
        } else {
            seg.has_unitary = true;
            seg.unitary = matrix_from_json(*uni, seg_path + ".unitary");
        }
        if (const Json* v = optional_field(sj, "measure_after"))
            seg.measure_after = bool_at(*v, seg_path + ".measure_after");
        script.segments.push_back(std::move(seg));
    }
    if (const Json* v = optional_field(j, "observables")) {
        if (!v->is_array()) fail(path + ".observables", "expected an array of matrices");
        for (std::size_t i = 0; i < v->size(); ++i)
            script.observables.push_back(
                matrix_from_json((*v)[i], path + ".observables[" + std::to_string(i) + "]"));
    }
    if (const Json* v = optional_field(j, "channel")) {
        channel_name = string_at(*v, path + ".channel");
        auto it = channels.find(channel_name);
        if (it == channels.end())
            fail(path + ".channel", "unknown channel '" + channel_name + "'");
        script.channel = it->second;
    }
    return script;
}

TomographySetup tomography_from_json(const Json& j, const std::string& path) {
    TomographySetup setup;
    if (!j.is_object()) fail(path, "expected an object");
    if (const Json* v = optional_field(j, "state")) setup.state = string_at(*v, path + ".state");
    if (const Json* v = optional_field(j, "frame"))
        setup.frame = matrix_from_json(*v, path + ".frame");
    if (const Json* v = optional_field(j, "noise_sigma")) {
        setup.noise_sigma = number_at(*v, path + ".noise_sigma");
        if (setup.noise_sigma < 0.0) fail(path + ".noise_sigma", "must be non-negative");
    }
    if (const Json* v = optional_field(j, "unknown_state"))
        setup.unknown_state = string_at(*v, path + ".unknown_state");
    if (const Json* v = optional_field(j, "known_state"))
        setup.known_state = string_at(*v, path + ".known_state");
    if (const Json* v = optional_field(j, "probes")) {
        if (!v->is_array()) fail(path + ".probes", "expected an array of matrices");
        for (std::size_t i = 0; i < v->size(); ++i)
            setup.probes.push_back(
                matrix_from_json((*v)[i], path + ".probes[" + std::to_string(i) + "]"));
    }
    return setup;
}

}  // namespace

int effective_max_k(const AnalysisOptions& opts, int dim_n) {
    if (opts.max_k > 0) return opts.max_k;
    return dim_n * dim_n - 1;
}

Scenario scenario_from_json(const Json& doc) {
    if (!doc.is_object()) fail("scenario", "expected a top-level object");
    Scenario sc;
    sc.schema_version = int_at(field(doc, "schema_version", "scenario"), "schema_version");
    if (sc.schema_version != 1) fail("schema_version", "unsupported version, expected 1");

    if (const Json* a = optional_field(doc, "analysis")) {
        const std::string path = "analysis";
        if (!a->is_object()) fail(path, "expected an object");
        if (const Json* v = optional_field(*a, "max_k")) {
            sc.analysis.max_k = int_at(*v, path + ".max_k");
            if (sc.analysis.max_k < 0) fail(path + ".max_k", "must be >= 0 (0 = automatic)");
        }
        if (const Json* v = optional_field(*a, "tolerances"))
            sc.analysis.tol = tolerance_from_json(*v, path + ".tolerances");
        if (const Json* v = optional_field(*a, "seed")) {
            if (!v->is_number_integer() || v->get<long long>() < 0)
                fail(path + ".seed", "expected a non-negative integer");
            sc.analysis.seed = v->get<std::uint64_t>();
        }
    }

    sc.system = system_from_json(field(doc, "system", "scenario"), sc.analysis.tol);

    if (const Json* states = optional_field(doc, "states")) {
        if (!states->is_object()) fail("states", "expected an object of named states");
        // States may have sub-system dimensions (ancilla setups), so the
        // match against the system dimension happens where a state is used.
        for (const auto& [name, sj] : states->items()) {
            const std::string path = "states." + name;
            sc.states.emplace(name, state_from_json(sj, path, sc.analysis.tol));
        }
    }

    if (const Json* channels = optional_field(doc, "channels")) {
        if (!channels->is_object()) fail("channels", "expected an object of named channels");
        for (const auto& [name, cj] : channels->items())
            sc.channels.emplace(name, channel_from_json(cj, "channels." + name, sc.analysis.tol));
    }

    if (const Json* scripts = optional_field(doc, "scripts")) {
        if (!scripts->is_object()) fail("scripts", "expected an object of named scripts");
        for (const auto& [name, sj] : scripts->items()) {
            const std::string path = "scripts." + name;
            std::string channel_name;
            ExperimentScript script = script_from_json(sj, path, sc.channels, channel_name);
            at_path(path, [&] { validate_script(script, sc.system, sc.analysis.tol); });
            if (!channel_name.empty()) sc.script_channels.emplace(name, channel_name);
            sc.scripts.emplace(name, std::move(script));
        }
    }

    if (const Json* t = optional_field(doc, "tomography")) {
        TomographySetup setup = tomography_from_json(*t, "tomography");
        for (const std::string* name : {&setup.state, &setup.unknown_state, &setup.known_state})
            if (!name->empty() && sc.states.find(*name) == sc.states.end())
                fail("tomography", "unknown state '" + *name + "'");
        sc.tomography = std::move(setup);
    }

    return sc;
}

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open scenario file: " + path);
    Json doc;
    try {
        doc = Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw std::invalid_argument(std::string("scenario parse error: ") + e.what());
    }
    return scenario_from_json(doc);
}

Json scenario_to_json(const Scenario& sc) {
    Json doc;
    doc["schema_version"] = sc.schema_version;
    Json system;
    if (!sc.system.label.empty()) system["label"] = sc.system.label;
    Json gens = Json::array();
    for (const auto& g : sc.system.generators) gens.push_back(to_json(g));
    system["generators"] = std::move(gens);
    system["observable"] = to_json(sc.system.observable);
    doc["system"] = std::move(system);

    if (!sc.states.empty()) {
        Json states;
        for (const auto& [name, s] : sc.states) states[name] = to_json(s);
        doc["states"] = std::move(states);
    }
    if (!sc.channels.empty()) {
        Json channels;
        for (const auto& [name, ch] : sc.channels) {
            Json cj;
            Json ops = Json::array();
            for (const auto& op : ch.operators) ops.push_back(to_json(op));
            cj["operators"] = std::move(ops);
            if (!ch.labels.empty()) cj["labels"] = ch.labels;
            channels[name] = std::move(cj);
        }
        doc["channels"] = std::move(channels);
    }
    if (!sc.scripts.empty()) {
        Json scripts;
        for (const auto& [name, script] : sc.scripts) {
            Json sj;
            Json segs = Json::array();
            for (const auto& seg : script.segments) {
                Json segj;
                if (seg.has_unitary) {
                    segj["unitary"] = to_json(seg.unitary);
                } else {
                    segj["duration"] = seg.duration;
                    segj["controls"] = seg.controls;
                    if (seg.substeps != 1) segj["substeps"] = seg.substeps;
                }
                if (seg.measure_after) segj["measure_after"] = true;
                segs.push_back(std::move(segj));
            }
            sj["segments"] = std::move(segs);
            if (!script.observables.empty()) {
                Json obs = Json::array();
                for (const auto& s : script.observables) obs.push_back(to_json(s));
                sj["observables"] = std::move(obs);
            }
            auto ch = sc.script_channels.find(name);
            if (ch != sc.script_channels.end()) sj["channel"] = ch->second;
            scripts[name] = std::move(sj);
        }
        doc["scripts"] = std::move(scripts);
    }
    if (sc.tomography) {
        Json tj;
        const TomographySetup& t = *sc.tomography;
        if (!t.state.empty()) tj["state"] = t.state;
        if (t.frame) tj["frame"] = to_json(*t.frame);
        if (t.noise_sigma > 0.0) tj["noise_sigma"] = t.noise_sigma;
        if (!t.unknown_state.empty()) tj["unknown_state"] = t.unknown_state;
        if (!t.known_state.empty()) tj["known_state"] = t.known_state;
        if (!t.probes.empty()) {
            Json probes = Json::array();
            for (const auto& p : t.probes) probes.push_back(to_json(p));
            tj["probes"] = std::move(probes);
        }
        doc["tomography"] = std::move(tj);
    }

    Json analysis;
    analysis["max_k"] = sc.analysis.max_k;
    Json tols;
    tols["rank_tol"] = sc.analysis.tol.rank_tol;
    tols["eig_tol"] = sc.analysis.tol.eig_tol;
    tols["sim_tol"] = sc.analysis.tol.sim_tol;
    analysis["tolerances"] = std::move(tols);
    analysis["seed"] = sc.analysis.seed;
    doc["analysis"] = std::move(analysis);
    return doc;
}

}  // namespace qobs
