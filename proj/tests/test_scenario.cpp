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

#include <doctest.h>

#include "qobs/examples.hpp"
#include "qobs/scenario.hpp"
#include "qobs/serialize.hpp"
#include "support.hpp"

using namespace qobs;

namespace {

bool message_names(const std::invalid_argument& err, const std::string& needle) {
    return std::string(err.what()).find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("complex and matrix values survive a serialization round trip") {
    std::mt19937_64 rng(701);
    const Complex z(1.25, -2.5);
    CHECK(complex_from_json(to_json(z), "z") == z);
    CHECK(complex_from_json(Json(3.0), "z") == Complex(3.0, 0.0));
    const ComplexMatrix m = support::random_matrix(3, rng);
    const ComplexMatrix back = matrix_from_json(to_json(m), "m");
    CHECK(frobenius_norm(back - m) == 0.0);
}

TEST_CASE("matrix parsing reports the offending entry path") {
    Json ragged = Json::array();
    ragged.push_back(Json::array({1.0, 2.0}));
    ragged.push_back(Json::array({3.0}));
    try {
        matrix_from_json(ragged, "system.observable");
        FAIL("expected a parse error");
    } catch (const std::invalid_argument& err) {
        CHECK(message_names(err, "system.observable"));
    }
    CHECK_THROWS_AS(matrix_from_json(Json::array(), "m"), std::invalid_argument);
    CHECK_THROWS_AS(matrix_from_json(Json("text"), "m"), std::invalid_argument);
    Json bad_pair = Json::array();
    bad_pair.push_back(Json::array({Json::array({1.0, 2.0, 3.0})}));
    CHECK_THROWS_AS(matrix_from_json(bad_pair, "m"), std::invalid_argument);
}

TEST_CASE("every bundled scenario round trips through its document form") {
    for (const std::string& name : example_names()) {
        const Scenario sc = example_scenario(name);
        const Json doc = scenario_to_json(sc);
        const Scenario back = scenario_from_json(doc);

        CHECK(back.schema_version == sc.schema_version);
        CHECK(back.system.dim_n == sc.system.dim_n);
        CHECK(back.system.label == sc.system.label);
        REQUIRE(back.system.generators.size() == sc.system.generators.size());
        for (size_t g = 0; g < sc.system.generators.size(); ++g)
            CHECK(frobenius_norm(back.system.generators[g] - sc.system.generators[g]) <
                  1e-12);
        CHECK(frobenius_norm(back.system.observable - sc.system.observable) < 1e-12);
        CHECK(back.system.observable_shift ==
              doctest::Approx(sc.system.observable_shift).epsilon(1e-14));

        CHECK(back.states.size() == sc.states.size());
        for (const auto& [sname, state] : sc.states) {
            REQUIRE(back.states.count(sname) == 1);
            CHECK(back.states.at(sname).convention == state.convention);
            CHECK(frobenius_norm(back.states.at(sname).matrix - state.matrix) < 1e-12);
        }
        CHECK(back.scripts.size() == sc.scripts.size());
        CHECK(back.script_channels == sc.script_channels);
        CHECK(back.analysis.max_k == sc.analysis.max_k);
        CHECK(back.analysis.seed == sc.analysis.seed);
        CHECK(back.tomography.has_value() == sc.tomography.has_value());
        if (sc.tomography) {
            CHECK(back.tomography->state == sc.tomography->state);
            CHECK(back.tomography->unknown_state == sc.tomography->unknown_state);
            CHECK(back.tomography->known_state == sc.tomography->known_state);
        }

        // The document form itself must be stable under one more cycle.
        CHECK(scenario_to_json(back).dump() == doc.dump());
    }
}

TEST_CASE("scenario parsing points at the failing field") {
    Json doc = scenario_to_json(example_scenario("tilted-spin"));

    Json bad_version = doc;
    bad_version["schema_version"] = 99;
    try {
        scenario_from_json(bad_version);
        FAIL("expected a version error");
    } catch (const std::invalid_argument& err) {
        CHECK(message_names(err, "schema_version"));
    }

    Json bad_matrix = doc;
    bad_matrix["system"]["generators"][0] = Json::array();
    CHECK_THROWS_AS(scenario_from_json(bad_matrix), std::invalid_argument);

    Json bad_state = doc;
    bad_state["states"]["ground"]["convention"] = "sideways";
    try {
        scenario_from_json(bad_state);
        FAIL("expected a convention error");
    } catch (const std::invalid_argument& err) {
        CHECK(message_names(err, "states.ground.convention"));
    }

    Json bad_channel = doc;
    bad_channel["scripts"]["two_pulse"]["channel"] = "missing";
    try {
        scenario_from_json(bad_channel);
        FAIL("expected an unknown channel error");
    } catch (const std::invalid_argument& err) {
        CHECK(message_names(err, "scripts.two_pulse.channel"));
    }

    Json bad_duration = doc;
    bad_duration["scripts"]["two_pulse"]["segments"][0]["duration"] = -2.0;
    try {
        scenario_from_json(bad_duration);
        FAIL("expected a duration error");
    } catch (const std::invalid_argument& err) {
        CHECK(message_names(err, "duration"));
    }

    Json no_system = doc;
    no_system.erase("system");
    CHECK_THROWS_AS(scenario_from_json(no_system), std::invalid_argument);
}

TEST_CASE("system accepts generators or hamiltonians but not both") {
    Json doc = scenario_to_json(example_scenario("tilted-spin"));
    Json both = doc;
    both["system"]["hamiltonians"] = both["system"]["generators"];
    CHECK_THROWS_AS(scenario_from_json(both), std::invalid_argument);

    Json neither = doc;
    neither["system"].erase("generators");
    CHECK_THROWS_AS(scenario_from_json(neither), std::invalid_argument);

    // A Hermitian matrix in the generators list fails the skew check.
    Json bad_generator = doc;
    bad_generator["system"]["generators"][0] =
        to_json(ComplexMatrix(2.0 * spin_x()));
    CHECK_THROWS_AS(scenario_from_json(bad_generator), std::invalid_argument);

    // The same matrix is a legal Hamiltonian.
    Json as_hamiltonian = doc;
    as_hamiltonian["system"].erase("generators");
    as_hamiltonian["system"]["hamiltonians"] =
        Json::array({to_json(ComplexMatrix(2.0 * spin_x()))});
    const Scenario rebuilt = scenario_from_json(as_hamiltonian);
    CHECK(frobenius_norm(rebuilt.system.generators[0] -
                         Complex(0.0, 1.0) * 2.0 * spin_x()) < 1e-14);
}

TEST_CASE("automatic step limits cap at the ambient dimension") {
    AnalysisOptions opts;
    CHECK(effective_max_k(opts, 2) == 3);
    CHECK(effective_max_k(opts, 4) == 15);
    opts.max_k = 2;
    CHECK(effective_max_k(opts, 4) == 2);
}

TEST_CASE("tomography section names must refer to declared states") {
    Json doc = scenario_to_json(example_scenario("three-spin-probe"));
    REQUIRE(doc.contains("tomography"));
    Json bad = doc;
    bad["tomography"]["unknown_state"] = "nonexistent";
    try {
        scenario_from_json(bad);
        FAIL("expected an unknown state error");
    } catch (const std::invalid_argument& err) {
        CHECK(message_names(err, "tomography"));
        CHECK(message_names(err, "nonexistent"));
    }
}

TEST_CASE("report documents keep a fixed key order and render as text") {
    const ObservabilityReport rep = analyze(tilted_spin_system(), 4);
    const Json doc = to_json(rep);
    const std::vector<std::string> expected_keys = {
        "dim_n",      "dim_L",        "controllable",       "dims_Vk",
        "saturation_k", "saturated",  "observable_one_step", "observable_k",
        "observable_overall", "first_order_condition", "bracket_dims"};
    std::vector<std::string> keys;
    for (auto it = doc.begin(); it != doc.end(); ++it) keys.push_back(it.key());
    CHECK(keys == expected_keys);
    CHECK(doc.dump() == to_json(analyze(tilted_spin_system(), 4)).dump());

    const std::string text = to_text(doc);
    CHECK(text.find("dim_n: 2") != std::string::npos);
    CHECK(text.find("controllable: false") != std::string::npos);
    CHECK(text.find("dims_Vk:") != std::string::npos);
    CHECK(text.back() == '\n');
}

TEST_CASE("measurement records serialize with outputs and hash") {
    const ControlSystem sys = tilted_spin_system();
    const Scenario sc = example_scenario("tilted-spin");
    const DensityState rho = sc.states.at("tipped");
    const MeasurementRecord rec =
        run_experiment(rho, sys, sc.scripts.at("two_pulse"));
    const Json doc = to_json(rec);
    CHECK(doc.contains("outputs"));
    CHECK(doc.contains("script_hash"));
    CHECK(doc["outputs"].size() == rec.outputs.size());
    CHECK(doc["script_hash"].get<std::string>() == rec.script_hash);
}

TEST_CASE("bundled scenarios load, validate, and carry consistent pieces") {
    for (const std::string& name : example_names()) {
        const Scenario sc = example_scenario(name);
        CHECK(sc.system.dim_n >= 2);
        CHECK(!sc.states.empty());
        CHECK((!sc.scripts.empty() || sc.tomography.has_value()));
        for (const auto& [sname, script] : sc.scripts) {
            INFO(name, "/", sname);
            CHECK_NOTHROW(validate_script(script, sc.system));
        }
    }
    CHECK_THROWS_AS(example_scenario("no-such-example"), std::invalid_argument);
}
